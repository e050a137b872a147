#include "hyplap/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hyplap {

QuadratureRule gauss_legendre(int order) {
    if (order < 2 || order > 512)
        throw std::invalid_argument("gauss_legendre: order must be in [2, 512]");

    QuadratureRule rule;
    rule.order = order;
    rule.nodes.assign(order, 0.0);
    rule.weights.assign(order, 0.0);

    const int half = (order + 1) / 2;
    for (int i = 1; i <= half; ++i) {
        // Chebyshev-like initial guess for the i-th root of P_order.
        double z = std::cos(std::numbers::pi * (i - 0.25) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        rule.nodes[i - 1] = -z;
        rule.nodes[order - i] = z;
        rule.weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[order - i] = rule.weights[i - 1];
    }
    if (order % 2 == 1) rule.nodes[half - 1] = 0.0;
    return rule;
}

const QuadratureRule& gauss_legendre_cached(int order) {
    static std::mutex mutex;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, gauss_legendre(order)).first;
    return it->second;
}

}  // namespace hyplap
