#pragma once

#include <complex>

#include "hyplap/space.hpp"

namespace hyplap {

/// Spherical average of the kernel power omega^alpha over S^k(eta).
struct RadializationRequest {
    Space space;
    std::complex<double> alpha;
    double eta;
    int quadrature_order = 32;
};

/// V_alpha(eta), the normalized average of omega^alpha(u0, .) over the
/// sphere of Euclidean radius eta about the origin. Reduced by rotational
/// symmetry about the u0 axis to the polar-angle integral
///
///   V_alpha(eta) = Int_0^pi w(theta)^alpha sin^{k-1}(theta) dtheta
///                  / Int_0^pi sin^{k-1}(theta) dtheta,
///
/// w(theta) = (rho^2 - eta^2) / (rho^2 - 2 rho eta cos(theta) + eta^2).
/// Since w > 0 strictly inside the ball, the complex power uses the real
/// logarithm and no branch choice arises.
///
/// Composite Gauss-Legendre at the requested order, with the panel count
/// doubled until two successive refinements agree to 1e-11 relative.
/// Panels are graded dyadically toward theta = 0 when eta > 0.9 rho, where
/// the integrand develops a boundary peak.
std::complex<double> radialize(const RadializationRequest& req);
std::complex<double> radialize(const Space& space, std::complex<double> alpha, double eta,
                               int quadrature_order = 32);

/// Value plus the final refinement gap, for callers that need an error
/// estimate alongside the value.
struct RadializeResult {
    std::complex<double> value;
    double error_estimate;
    int panels;
};
RadializeResult radialize_detail(const RadializationRequest& req);

/// Monte-Carlo estimate over the full sphere: uniform points on S^k(eta)
/// from normalized (k+1)-dimensional Gaussian vectors, averaging
/// omega^alpha(u, .). Standard error is the sample estimate of the mean's
/// standard deviation (both components combined). Deterministic for a
/// fixed seed. This is the integration oracle for the reduced form above.
struct McEstimate {
    std::complex<double> estimate;
    double standard_error;
};
McEstimate mc_radialize(const RadializationRequest& req, long samples, unsigned long long seed);

/// Same, but averaging about an arbitrary boundary point u. Radialization
/// does not depend on the choice of u; the overload exists to test that.
McEstimate mc_radialize_at(const RadializationRequest& req, const BallPoint& u, long samples,
                           unsigned long long seed);

/// Central-difference residual of the radial eigenvalue equation
///   phi'' + (k/rho) coth(r/rho) phi' + mu phi
/// at r, with phi(r) = radialize(alpha, eta(r)) and mu = phi(alpha).
/// Magnitude O(h^2) plus quadrature error when the reduction is correct.
/// Requires h in [1e-5, 0.1] * max(1, r) and h < r.
std::complex<double> ode_residual(const Space& space, std::complex<double> alpha, double r,
                                  double h, int quadrature_order = 32);

}  // namespace hyplap
