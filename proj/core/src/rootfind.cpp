#include "hyplap/rootfind.hpp"

#include <cmath>
#include <stdexcept>

namespace hyplap {

using Complex = std::complex<double>;

Complex central_difference(const ComplexField& g, Complex z, double h) {
    return (g(z + h) - g(z - h)) / (2.0 * h);
}

NewtonResult newton_complex(const ComplexField& g, Complex z0, double tol, int max_iter,
                            double fd_step) {
    if (!(tol >= 1e-12)) throw std::invalid_argument("newton_complex: tol must be >= 1e-12");
    if (max_iter < 1) throw std::invalid_argument("newton_complex: max_iter must be positive");

    Complex z = z0;
    Complex gz = g(z);
    Complex best_z = z;
    double best_res = std::abs(gz);

    for (int it = 1; it <= max_iter; ++it) {
        if (std::abs(gz) < tol) return NewtonResult{true, z, std::abs(gz), it - 1};

        const Complex dg = central_difference(g, z, fd_step);
        if (!(std::abs(dg) > 0.0) || !std::isfinite(std::abs(dg)))
            return NewtonResult{false, best_z, best_res, it - 1};
        const Complex step = gz / dg;

        // Halve the step until the residual actually drops.
        double lambda = 1.0;
        Complex z_next = z - step;
        Complex g_next = g(z_next);
        while (!(std::abs(g_next) < std::abs(gz)) && lambda > 1.0 / 1024.0) {
            lambda *= 0.5;
            z_next = z - lambda * step;
            g_next = g(z_next);
        }
        if (!(std::abs(g_next) < std::abs(gz)))
            return NewtonResult{false, best_z, best_res, it};

        z = z_next;
        gz = g_next;
        if (std::abs(gz) < best_res) {
            best_res = std::abs(gz);
            best_z = z;
        }
    }
    if (std::abs(gz) < tol) return NewtonResult{true, z, std::abs(gz), max_iter};
    return NewtonResult{false, best_z, best_res, max_iter};
}

}  // namespace hyplap
