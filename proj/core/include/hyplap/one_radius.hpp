#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hyplap/space.hpp"

namespace hyplap {

/// Grid of |phi_mu(r) - phi_nu(r)| over (0, T_clip].
struct SeparationScan {
    std::complex<double> mu;
    std::complex<double> nu;
    Space space;
    std::vector<double> grid;         // strictly increasing, in (0, T_clip]
    std::vector<double> separations;  // same length as grid
    double min_separation;
    double argmin_r;
};

/// Evaluate both eigenfunctions on a geometric grid spanning
/// [1e-4 * T_clip, T_clip] (separations vanish quadratically at 0, so a
/// uniform grid would waste resolution near the top). Requires mu != nu
/// and T_clip <= threshold(mu, nu).
SeparationScan scan_separation(const Space& space, std::complex<double> mu,
                               std::complex<double> nu, int n_grid, double t_clip);

/// A nontrivial solution beta of V_beta(eta(r0)) = V_alpha(eta(r0)).
struct Collision {
    std::complex<double> beta;
    std::complex<double> alpha;
    double r0;
    double residual;  // |V_beta - V_alpha| at eta(r0), re-verified at doubled order
    double im_beta;
};

/// Rectangle of Newton starting points in the beta plane.
struct SeedBox {
    double re_min, re_max;
    double im_min, im_max;
    int n_re = 11, n_im = 11;
    bool include_conjugate_band = true;
};

/// Default seeding: starting points just above the exponent band where the
/// equal-integral implication forces beta in {alpha, k - alpha}, i.e.
/// Im beta >= p_min = pi rho / (2 r0); nontrivial collisions can only live
/// beyond that band.
SeedBox default_seed_box(const Space& space, double r0);

struct CollisionSearch {
    std::vector<Collision> collisions;  // sorted by (Re, Im)
    double best_residual;               // best |g| reached by any failed seed
    int seeds_tried;
};

/// Damped-Newton search for nontrivial collisions at radius r0: roots of
/// g(beta) = V_beta(eta(r0)) - V_alpha(eta(r0)) started from every node of
/// the seed box, deduplicated within 1e-6, the trivial pair
/// {alpha, k - alpha} discarded, and each survivor re-verified with the
/// quadrature order doubled (kept only if that residual is < 10 * tol).
CollisionSearch find_collision(const Space& space, std::complex<double> alpha, double r0,
                               const SeedBox& seeds, double tol = 1e-9,
                               int quadrature_order = 32);

enum class CertifyVerdict { PASS, INCONCLUSIVE };

struct CertifyReport {
    double threshold;  // T = pi rho / (2p); +infinity when p = 0
    bool clipped;      // scan interval cut at 20 rho
    SeparationScan scan;
    double floor;  // separation must exceed this to count as certified
    CertifyVerdict verdict;
};

/// Run the separation scan on (0, min(T, 20 rho)] and grade it: PASS when
/// the minimum separation clears max(1e-9, 10 * evaluator error estimate
/// at the argmin); INCONCLUSIVE otherwise (a separation below the numeric
/// floor is not a counterexample).
CertifyReport certify_one_radius(const Space& space, std::complex<double> mu,
                                 std::complex<double> nu, int n_grid);

std::string to_string(CertifyVerdict verdict);

}  // namespace hyplap
