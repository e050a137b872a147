#pragma once

#include <complex>
#include <vector>

#include "hyplap/ode.hpp"
#include "hyplap/space.hpp"

namespace hyplap {

enum class EvalMethod { series, ode, kernel, reconciled };

/// A single eigenfunction evaluation phi_mu(r) with its error estimate.
struct EvalReport {
    double r;
    std::complex<double> mu;
    std::complex<double> value;
    EvalMethod method;
    double error_estimate;
};

/// The hyperbolic-distance cutoff up to which the Taylor series seeds the
/// ODE integrator; the coth(r/rho) coefficient is singular at r = 0, so
/// integration never starts there.
inline double series_switch_radius(const Space& space) { return 1e-2 * space.rho; }

/// Largest r at which eval_series is accepted. The series converges for
/// |r| < pi rho (nearest coefficient singularity); this stays comfortably
/// inside with the default truncation orders.
inline double series_radius_limit(const Space& space) { return 0.75 * space.rho; }

/// Taylor coefficients c_0..c_order of the regular solution about r = 0
/// with c_0 = 1. Odd entries are identically zero; c_2 = -mu / (2(k+1)).
std::vector<std::complex<double>> series_coefficients(const Space& space, std::complex<double> mu,
                                                      int order);

/// Near-origin evaluation by the truncated even Taylor series.
/// Requires r <= series_radius_limit and even order in [2, 40].
std::complex<double> eval_series(const Space& space, std::complex<double> mu, double r,
                                 int order = 20);

/// Series value, derivative and the magnitude of the last retained term
/// (the truncation estimate); used to seed the integrator.
struct SeriesEval {
    std::complex<double> value;
    std::complex<double> derivative;
    double last_term;
};
SeriesEval eval_series_full(const Space& space, std::complex<double> mu, double r, int order = 20);

/// Evaluation by adaptive integration of the radial equation
///   phi'' + (k/rho) coth(r/rho) phi' + mu phi = 0
/// from the series seed at series_switch_radius out to r.
std::complex<double> eval_ode(const Space& space, std::complex<double> mu, double r);
EvalReport eval_ode_report(const Space& space, std::complex<double> mu, double r,
                           const IntegratorConfig& cfg = {});

/// Evaluation through the kernel representation: the radialization of
/// omega^alpha at eta(r) with alpha a preimage of mu. Either preimage
/// gives the same value.
std::complex<double> eval_kernel(const Space& space, std::complex<double> mu, double r,
                                 int quadrature_order = 32);
EvalReport eval_kernel_report(const Space& space, std::complex<double> mu, double r,
                              int quadrature_order = 32);

/// Reconciled evaluation: kernel-route value with the kernel/ODE
/// disagreement as the error estimate. Disagreement above 1e-6 signals a
/// numerics problem or out-of-envelope parameters and throws.
EvalReport evaluate(const Space& space, std::complex<double> mu, double r);

}  // namespace hyplap
