#include "hyplap/radialization.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hyplap/quadrature.hpp"
#include "hyplap/spectral.hpp"

namespace hyplap {

namespace {

using Complex = std::complex<double>;

void validate(const RadializationRequest& req) {
    if (!(req.eta >= 0.0)) throw std::invalid_argument("radialize: eta must be nonnegative");
    if (req.eta > req.space.rho * (1.0 - kBoundaryGuard))
        throw std::invalid_argument("radialize: eta too close to the boundary sphere");
    if (req.quadrature_order < 2 || req.quadrature_order > 512)
        throw std::invalid_argument("radialize: quadrature order out of range");
}

// Int_0^pi sin^{k-1}(theta) dtheta by the Wallis recurrence
// W_n = (n-1)/n * W_{n-2}, W_0 = pi, W_1 = 2.
double sine_moment(int k) {
    const int n = k - 1;
    double result = (n % 2 == 0) ? std::numbers::pi : 2.0;
    for (int m = (n % 2 == 0) ? 2 : 3; m <= n; m += 2) result *= (m - 1.0) / m;
    return result;
}

double int_pow(double x, int n) {
    double acc = 1.0;
    for (int i = 0; i < n; ++i) acc *= x;
    return acc;
}

// Panel breakpoints on [0, pi]. Uniform away from the boundary; dyadically
// graded toward theta = 0 once the kernel peak sharpens (eta > 0.9 rho),
// with each graded interval subdivided `split` times.
std::vector<double> panel_breaks(const Space& space, double eta, int split) {
    std::vector<double> breaks;
    if (eta <= 0.9 * space.rho) {
        breaks.reserve(split + 1);
        for (int i = 0; i <= split; ++i) breaks.push_back(std::numbers::pi * i / split);
        return breaks;
    }
    const double frac = (space.rho - eta) / space.rho;
    int levels = static_cast<int>(std::ceil(-std::log2(frac)));
    levels = std::min(std::max(levels, 1), 64);

    std::vector<double> base;
    base.push_back(0.0);
    for (int j = levels; j >= 0; --j) base.push_back(std::numbers::pi / (1 << j));

    breaks.reserve(base.size() * split);
    for (std::size_t i = 0; i + 1 < base.size(); ++i)
        for (int s = 0; s < split; ++s)
            breaks.push_back(base[i] + (base[i + 1] - base[i]) * s / split);
    breaks.push_back(std::numbers::pi);
    return breaks;
}

}  // namespace

RadializeResult radialize_detail(const RadializationRequest& req) {
    validate(req);
    if (req.eta == 0.0) return RadializeResult{Complex(1.0, 0.0), 0.0, 0};

    const Space& space = req.space;
    const double rho = space.rho;
    const double eta = req.eta;
    const Complex alpha = req.alpha;
    const int k = space.k;

    // w(theta) via the cancellation-free form
    // (rho - eta)(rho + eta) / ((rho - eta)^2 + 4 rho eta sin^2(theta/2)).
    const double num = (rho - eta) * (rho + eta);
    const double gap2 = (rho - eta) * (rho - eta);
    const double four_re = 4.0 * rho * eta;
    const auto integrand = [&](double theta) -> Complex {
        const double s = std::sin(0.5 * theta);
        const double logw = std::log(num) - std::log(gap2 + four_re * s * s);
        const Complex wa = std::exp(alpha * logw);
        return (k == 1) ? wa : wa * int_pow(std::sin(theta), k - 1);
    };

    const QuadratureRule& rule = gauss_legendre_cached(req.quadrature_order);
    const double denom = sine_moment(k);

    constexpr double tol = 1e-11;
    constexpr int max_split = 256;

    Complex before_last(0.0, 0.0);
    Complex last(0.0, 0.0);
    bool have_prev = false;
    for (int split = 1; split <= max_split; split *= 2) {
        const std::vector<double> breaks = panel_breaks(space, eta, split);
        Complex total(0.0, 0.0);
        for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
            total += gl_integrate(rule, breaks[i], breaks[i + 1], integrand);
        const Complex value = total / denom;

        if (have_prev) {
            const double gap = std::abs(value - last);
            if (gap <= tol * std::max(1.0, std::abs(value)))
                return RadializeResult{value, gap, static_cast<int>(breaks.size()) - 1};
        }
        before_last = last;
        last = value;
        have_prev = true;
    }

    std::ostringstream msg;
    msg << "radialize: panel refinement did not converge (eta/rho = " << eta / rho
        << ", |alpha| = " << std::abs(alpha) << "); last two estimates " << before_last << ", "
        << last;
    throw std::runtime_error(msg.str());
}

Complex radialize(const RadializationRequest& req) { return radialize_detail(req).value; }

Complex radialize(const Space& space, Complex alpha, double eta, int quadrature_order) {
    return radialize(RadializationRequest{space, alpha, eta, quadrature_order});
}

McEstimate mc_radialize(const RadializationRequest& req, long samples, unsigned long long seed) {
    return mc_radialize_at(req, north_pole(req.space), samples, seed);
}

McEstimate mc_radialize_at(const RadializationRequest& req, const BallPoint& u, long samples,
                           unsigned long long seed) {
    validate(req);
    if (samples < 1000) throw std::invalid_argument("mc_radialize: need at least 10^3 samples");

    const Space& space = req.space;
    const int dim = space.k + 1;
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    BallPoint m;
    m.coords.resize(dim);

    Complex sum(0.0, 0.0);
    double sum_sq = 0.0;
    for (long s = 0; s < samples; ++s) {
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (int i = 0; i < dim; ++i) {
                m.coords[i] = gauss(gen);
                norm2 += m.coords[i] * m.coords[i];
            }
        } while (norm2 == 0.0);
        const double scale = req.eta / std::sqrt(norm2);
        for (int i = 0; i < dim; ++i) m.coords[i] *= scale;

        const Complex value = std::exp(req.alpha * std::log(omega(space, u, m)));
        sum += value;
        sum_sq += std::norm(value);
    }

    const double n = static_cast<double>(samples);
    const Complex mean = sum / n;
    const double var = std::max(0.0, (sum_sq - n * std::norm(mean)) / (n - 1.0));
    return McEstimate{mean, std::sqrt(var / n)};
}

Complex ode_residual(const Space& space, Complex alpha, double r, double h, int quadrature_order) {
    if (!(r > 0.0)) throw std::invalid_argument("ode_residual: r must be positive");
    const double h_lo = 1e-5 * std::max(1.0, r);
    const double h_hi = 0.1 * std::max(1.0, r);
    if (!(h >= h_lo) || !(h <= h_hi))
        throw std::invalid_argument("ode_residual: step h outside [1e-5, 0.1] * max(1, r)");
    if (!(h < r)) throw std::invalid_argument("ode_residual: need h < r");

    const auto phi_at = [&](double rr) {
        return radialize(space, alpha, r_to_eta(space, rr), quadrature_order);
    };
    const Complex pm = phi_at(r - h);
    const Complex p0 = phi_at(r);
    const Complex pp = phi_at(r + h);

    const Complex d2 = (pp - 2.0 * p0 + pm) / (h * h);
    const Complex d1 = (pp - pm) / (2.0 * h);
    const double coth = 1.0 / std::tanh(r / space.rho);
    const Complex mu = phi(space, alpha);
    return d2 + (space.k / space.rho) * coth * d1 + mu * p0;
}

}  // namespace hyplap
