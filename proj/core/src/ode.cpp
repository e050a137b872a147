#include "hyplap/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hyplap {

namespace {

using Complex = std::complex<double>;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Weights of (5th order) - (4th order), the embedded error.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

OdeState axpy(const OdeState& y, double h, std::initializer_list<std::pair<double, const OdeState*>> terms) {
    OdeState out = y;
    for (const auto& [coef, k] : terms) {
        out[0] += h * coef * (*k)[0];
        out[1] += h * coef * (*k)[1];
    }
    return out;
}

}  // namespace

RkStep rk_step(const OdeField& f, double r, const OdeState& y, double h) {
    const OdeState k1 = f(r, y);
    const OdeState k2 = f(r + c2 * h, axpy(y, h, {{a21, &k1}}));
    const OdeState k3 = f(r + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const OdeState k4 = f(r + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const OdeState k5 = f(r + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const OdeState k6 =
        f(r + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const OdeState y5 =
        axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const OdeState k7 = f(r + h, y5);

    RkStep step;
    step.y5 = y5;
    for (int i = 0; i < 2; ++i)
        step.err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                           e7 * k7[i]);
    return step;
}

OdeResult rk_integrate(const OdeField& f, double r_a, double r_b, const OdeState& y0,
                       const IntegratorConfig& cfg) {
    if (!(r_a < r_b)) throw std::invalid_argument("rk_integrate: need r_a < r_b");
    if (!(cfg.rel_tol >= 1e-13)) throw std::invalid_argument("rk_integrate: rel_tol below 1e-13");

    OdeResult result{y0, 0.0, 0};
    double r = r_a;
    double h = std::min(cfg.initial_step, r_b - r_a);
    double facold = 1e-4;  // PI controller memory
    constexpr double safety = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
    constexpr double fac_min = 0.2, fac_max = 5.0;

    while (r < r_b) {
        if (result.steps++ > cfg.max_steps)
            throw std::runtime_error("rk_integrate: max_steps exceeded at r = " + std::to_string(r));
        if (h < 1e-14 * std::max(1.0, std::abs(r)))
            throw std::runtime_error("rk_integrate: step underflow at r = " + std::to_string(r));
        const bool last = (r + h >= r_b);
        if (last) h = r_b - r;

        const RkStep step = rk_step(f, r, result.y, h);

        // Scaled RMS over the four real components.
        double sum = 0.0;
        double raw = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double scale_re =
                cfg.abs_tol + cfg.rel_tol * std::max(std::abs(result.y[i].real()),
                                                     std::abs(step.y5[i].real()));
            const double scale_im =
                cfg.abs_tol + cfg.rel_tol * std::max(std::abs(result.y[i].imag()),
                                                     std::abs(step.y5[i].imag()));
            const double er = step.err[i].real() / scale_re;
            const double ei = step.err[i].imag() / scale_im;
            sum += er * er + ei * ei;
            raw += std::norm(step.err[i]);
        }
        const double err = std::sqrt(sum / 4.0);

        if (err <= 1.0) {
            const double fac = std::clamp(std::pow(err, expo1) / std::pow(facold, beta) / safety,
                                          1.0 / fac_max, 1.0 / fac_min);
            facold = std::max(err, 1e-4);
            r += h;
            result.y = step.y5;
            result.error_estimate += std::sqrt(raw);
            if (!last) h = std::min(h / fac, r_b - r);
        } else {
            h /= std::min(1.0 / fac_min, std::pow(err, 0.2) / safety);
        }
    }
    return result;
}

}  // namespace hyplap
