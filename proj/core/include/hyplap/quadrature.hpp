#pragma once

#include <vector>

namespace hyplap {

/// Gauss-Legendre rule on (-1, 1): nodes symmetric about 0, positive
/// weights summing to 2, exact for polynomials of degree 2*order - 1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order;
};

/// Nodes and weights by Newton iteration on the Legendre recurrence with
/// cosine initial guesses. order in [2, 512].
QuadratureRule gauss_legendre(int order);

/// Shared, lazily built rule cache. The returned reference stays valid for
/// the lifetime of the program; safe to call from multiple threads.
const QuadratureRule& gauss_legendre_cached(int order);

/// Integrate f over [a, b] with a single application of the rule.
template <typename F>
auto gl_integrate(const QuadratureRule& rule, double a, double b, F&& f) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    decltype(f(mid)) acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

}  // namespace hyplap
