#include "hyplap/spectral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hyplap {

Complex phi(const Space& space, Complex alpha) {
    const double k = static_cast<double>(space.k);
    return alpha * (k - alpha) / (space.rho * space.rho);
}

PhiRoots phi_inverse(const Space& space, Complex mu) {
    const double k = static_cast<double>(space.k);
    const Complex disc = k * k / 4.0 - mu * space.rho * space.rho;
    const Complex s = std::sqrt(disc);  // principal branch, Re(s) >= 0

    const Complex lo = k / 2.0 - s;
    const Complex hi = k / 2.0 + s;
    if (lo.real() < hi.real() || (lo.real() == hi.real() && lo.imag() >= hi.imag()))
        return PhiRoots{lo, hi};
    return PhiRoots{hi, lo};
}

StripRegion::StripRegion(double halfwidth) : p(halfwidth) {
    if (!(p >= 0.0)) throw std::invalid_argument("StripRegion: p must be nonnegative");
}

double strip_halfwidth(const Space& space, Complex mu) {
    const double k = static_cast<double>(space.k);
    const Complex s = std::sqrt(Complex(k * k / 4.0) - mu * space.rho * space.rho);
    return std::abs(s.imag());
}

bool in_parabola(const Space& space, Complex mu, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("in_parabola: p must be positive (see in_real_ray)");
    const double k = static_cast<double>(space.k);
    const double kappa = space.kappa();
    const double rhs = -kappa * (p * p + k * k / 4.0) + mu.imag() * mu.imag() / (4.0 * kappa * p * p);
    return mu.real() <= rhs + 1e-12;
}

bool in_real_ray(const Space& space, Complex mu) {
    return strip_halfwidth(space, mu) == 0.0;
}

std::vector<Complex> parabola_boundary(const Space& space, double p, int n, double a1_max) {
    if (!(p > 0.0)) throw std::invalid_argument("parabola_boundary: p must be positive");
    if (n < 3) throw std::invalid_argument("parabola_boundary: need at least 3 samples");
    const double k = static_cast<double>(space.k);
    if (a1_max <= 0.0) a1_max = std::sqrt(p * p + k * k / 4.0);

    std::vector<Complex> boundary(n);
    for (int j = 0; j < n; ++j) {
        const double a1 = -a1_max + 2.0 * a1_max * j / (n - 1);
        boundary[j] = phi(space, Complex(k / 2.0 + a1, p));
    }
    return boundary;
}

double threshold(const Space& space, Complex mu, Complex nu) {
    if (mu == nu) throw std::invalid_argument("threshold: mu and nu must be distinct");
    const double p = std::max(strip_halfwidth(space, mu), strip_halfwidth(space, nu));
    if (p == 0.0) return std::numeric_limits<double>::infinity();
    return std::numbers::pi * space.rho / (2.0 * p);
}

}  // namespace hyplap
