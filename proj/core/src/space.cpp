#include "hyplap/space.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hyplap {

namespace {

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return s;
}

void check_dimension(const Space& space, const std::vector<double>& coords, const char* what) {
    if (coords.size() != static_cast<std::size_t>(space.k + 1))
        throw std::invalid_argument(std::string(what) + ": expected " +
                                    std::to_string(space.k + 1) + " coordinates, got " +
                                    std::to_string(coords.size()));
}

void check_interior(const Space& space, const BallPoint& m) {
    check_dimension(space, m.coords, "ball point");
    if (m.eta() > space.rho * (1.0 - kBoundaryGuard))
        throw std::invalid_argument("ball point too close to the boundary sphere");
}

}  // namespace

Space::Space(int k_, double rho_) : k(k_), rho(rho_) {
    if (k < 1) throw std::invalid_argument("Space: k must be a positive integer");
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("Space: rho must be a positive real");
}

double BallPoint::eta() const { return std::sqrt(norm2(coords)); }

BallPoint north_pole(const Space& space) {
    BallPoint u;
    u.coords.assign(space.k + 1, 0.0);
    u.coords.back() = space.rho;
    return u;
}

double omega(const Space& space, const BallPoint& u, const BallPoint& m) {
    check_dimension(space, u.coords, "boundary point");
    check_interior(space, m);
    const double ru = u.eta();
    if (std::abs(ru - space.rho) > 1e-12 * space.rho)
        throw std::invalid_argument("omega: u must lie on the boundary sphere |u| = rho");

    double d2 = 0.0;
    for (std::size_t i = 0; i < u.coords.size(); ++i) {
        const double d = u.coords[i] - m.coords[i];
        d2 += d * d;
    }
    const double eta = m.eta();
    return (space.rho - eta) * (space.rho + eta) / d2;
}

HalfSpacePoint cayley(const Space& space, const BallPoint& m) {
    check_interior(space, m);
    const std::size_t n = m.coords.size();
    const double t_coord = m.coords[n - 1];

    double x2 = 0.0;  // |X|^2, the first k coordinates
    for (std::size_t i = 0; i + 1 < n; ++i) x2 += m.coords[i] * m.coords[i];

    const double dt = t_coord - space.rho;
    const double denom = x2 + dt * dt;  // |u0 - m|^2

    HalfSpacePoint h;
    h.x.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) h.x[i] = 2.0 * space.rho * m.coords[i] / denom;
    h.t = (space.rho * space.rho - x2 - t_coord * t_coord) / denom;
    return h;
}

double r_to_eta(const Space& space, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("r_to_eta: r must be nonnegative");
    return space.rho * std::tanh(r / (2.0 * space.rho));
}

double eta_to_r(const Space& space, double eta) {
    if (!(eta >= 0.0)) throw std::invalid_argument("eta_to_r: eta must be nonnegative");
    if (eta >= space.rho) throw std::invalid_argument("eta_to_r: eta must be < rho");
    return 2.0 * space.rho * std::atanh(eta / space.rho);
}

}  // namespace hyplap
