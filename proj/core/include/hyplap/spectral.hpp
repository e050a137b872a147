#pragma once

#include <complex>
#include <vector>

#include "hyplap/space.hpp"

namespace hyplap {

using Complex = std::complex<double>;

/// Map from the kernel exponent alpha to the eigenvalue
/// mu = -kappa * (alpha k - alpha^2), kappa = -1/rho^2.
Complex phi(const Space& space, Complex alpha);

/// The two exponents mapping to the same eigenvalue. They sum to k,
/// and share |Im|; `principal` is the one with Re <= k/2 (ties broken
/// by Im >= 0).
struct PhiRoots {
    Complex principal;
    Complex partner;
};

/// Both roots of alpha^2 - k alpha + mu rho^2 = 0, i.e. the preimages of
/// mu under phi.
PhiRoots phi_inverse(const Space& space, Complex mu);

/// A paired (alpha, mu) with mu = phi(alpha).
struct SpectralPoint {
    Space space;
    Complex alpha;
    Complex mu;

    static SpectralPoint from_alpha(const Space& space, Complex alpha) {
        return SpectralPoint{space, alpha, phi(space, alpha)};
    }
};

/// Horizontal strip |Im alpha| <= p in the exponent plane.
struct StripRegion {
    double p;

    explicit StripRegion(double halfwidth);
};

/// |Im alpha| for either preimage of mu (both share it). Zero exactly when
/// mu is real with mu <= -kappa k^2/4.
double strip_halfwidth(const Space& space, Complex mu);

/// True iff mu lies in the closed region bounded by the parabola that is
/// the phi-image of the strip |Im alpha| <= p:
///   Re mu <= -kappa (p^2 + k^2/4) + (Im mu)^2 / (4 kappa p^2),
/// with absolute slack 1e-12 on the defining inequality. Requires p > 0;
/// the degenerate p = 0 region is in_real_ray.
bool in_parabola(const Space& space, Complex mu, double p);

/// The p = 0 degeneration: mu real with mu <= -kappa k^2/4.
bool in_real_ray(const Space& space, Complex mu);

/// n samples of the parabola boundary, phi evaluated along the line
/// alpha(a1) = k/2 + i p + a1 with a1 uniform on [-a1_max, a1_max].
/// a1_max <= 0 selects the default sqrt(p^2 + k^2/4), for which the
/// endpoints are the imaginary-axis crossings and the midpoint (odd n)
/// is the vertex.
std::vector<Complex> parabola_boundary(const Space& space, double p, int n, double a1_max = 0.0);

/// One-radius threshold T = pi rho / (2 p) with
/// p = max(strip_halfwidth(mu), strip_halfwidth(nu)); +infinity when p = 0.
/// Rejects mu == nu.
double threshold(const Space& space, Complex mu, Complex nu);

}  // namespace hyplap
