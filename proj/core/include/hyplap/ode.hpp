#pragma once

#include <array>
#include <complex>
#include <functional>

namespace hyplap {

/// State of the second-order radial equation: (value, derivative).
using OdeState = std::array<std::complex<double>, 2>;

/// Derivative field y' = f(r, y).
using OdeField = std::function<OdeState(double, const OdeState&)>;

struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    int max_steps = 1000000;
    double initial_step = 1e-3;
};

struct OdeResult {
    OdeState y;
    double error_estimate;  // accumulated local error estimates
    long steps;
};

/// One Dormand-Prince 5(4) step of size h from (r, y): fifth-order solution
/// and the embedded local error estimate.
struct RkStep {
    OdeState y5;
    OdeState err;
};
RkStep rk_step(const OdeField& f, double r, const OdeState& y, double h);

/// Adaptive Dormand-Prince 5(4) with PI step control over (r_a, r_b).
/// The complex state is controlled componentwise as real pairs.
OdeResult rk_integrate(const OdeField& f, double r_a, double r_b, const OdeState& y0,
                       const IntegratorConfig& cfg = {});

}  // namespace hyplap
