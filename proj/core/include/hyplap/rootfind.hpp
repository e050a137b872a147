#pragma once

#include <complex>
#include <functional>

namespace hyplap {

using ComplexField = std::function<std::complex<double>(std::complex<double>)>;

/// Central-difference derivative (g(z+h) - g(z-h)) / (2h) along the real
/// direction; for analytic g the direction is immaterial.
std::complex<double> central_difference(const ComplexField& g, std::complex<double> z, double h);

struct NewtonResult {
    bool converged;
    std::complex<double> z;  // root if converged, best iterate otherwise
    double residual;         // |g(z)|
    int iterations;
};

/// Damped Newton iteration with finite-difference derivative. Stops at
/// |g(z)| < tol; a failure carries the best iterate seen.
NewtonResult newton_complex(const ComplexField& g, std::complex<double> z0, double tol,
                            int max_iter, double fd_step = 1e-6);

}  // namespace hyplap
