#pragma once

#include <vector>

namespace hyplap {

/// Ambient hyperbolic space H^{k+1} of constant sectional curvature
/// kappa = -1/rho^2, realized as the Euclidean ball of radius rho
/// (ball model) or the upper half-space (half-space model).
///
/// k is the dimension of the geodesic sphere S^k about the origin, so the
/// ambient space is (k+1)-dimensional.
struct Space {
    int k;
    double rho;

    Space(int k, double rho);

    double kappa() const { return -1.0 / (rho * rho); }
};

/// A point of the ball model, stored in Euclidean coordinates of length k+1.
struct BallPoint {
    std::vector<double> coords;

    /// Euclidean distance from the origin.
    double eta() const;
};

/// A point of the half-space model: x in R^k, height t > 0.
struct HalfSpacePoint {
    std::vector<double> x;
    double t;
};

/// The distinguished boundary point u0 = (0, ..., 0, rho).
BallPoint north_pole(const Space& space);

/// Fraction of rho beyond which interior points are rejected. Quantities
/// like omega and the kernel radialization degenerate at the boundary, so
/// points with eta > rho*(1 - kBoundaryGuard) are treated as errors.
inline constexpr double kBoundaryGuard = 1e-9;

/// Poisson-type kernel omega(u, m) = (rho^2 - eta^2) / |u - m|^2 for a
/// boundary point u (|u| = rho) and an interior point m (eta = |m| < rho).
/// Strictly positive on the open ball.
double omega(const Space& space, const BallPoint& u, const BallPoint& m);

/// Cayley transform from the ball model to the half-space model, with the
/// distinguished boundary point u0 = (0, ..., 0, rho) sent to infinity.
/// Satisfies cayley(m).t == omega(u0, m).
HalfSpacePoint cayley(const Space& space, const BallPoint& m);

/// Euclidean radius eta = rho * tanh(r / (2 rho)) of the sphere at
/// hyperbolic distance r from the origin. Strictly increasing, eta < rho.
double r_to_eta(const Space& space, double r);

/// Hyperbolic distance r = rho * ln((rho + eta) / (rho - eta)); inverse of
/// r_to_eta. Rejects eta >= rho, where the distance diverges.
double eta_to_r(const Space& space, double eta);

}  // namespace hyplap
