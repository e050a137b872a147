#include "hyplap/eigenfunction.hpp"

#include <cmath>
#include <stdexcept>

#include "hyplap/radialization.hpp"
#include "hyplap/spectral.hpp"

namespace hyplap {

namespace {

using Complex = std::complex<double>;

// Taylor coefficients of coth(x) - 1/x = sum C_n x^{2n-1}; from
// g' = 1 - 2g/x - g^2 one gets C_1 = 1/3 and
// C_n = -(sum_{i+j=n} C_i C_j) / (2n + 1).
std::vector<double> coth_series(int terms) {
    std::vector<double> c(terms + 1, 0.0);
    if (terms >= 1) c[1] = 1.0 / 3.0;
    for (int n = 2; n <= terms; ++n) {
        double conv = 0.0;
        for (int i = 1; i < n; ++i) conv += c[i] * c[n - i];
        c[n] = -conv / (2.0 * n + 1.0);
    }
    return c;
}

}  // namespace

std::vector<Complex> series_coefficients(const Space& space, Complex mu, int order) {
    if (order < 2 || order > 40 || order % 2 != 0)
        throw std::invalid_argument("series_coefficients: order must be even and in [2, 40]");

    const double k = static_cast<double>(space.k);
    const int half = order / 2;
    const std::vector<double> coth_c = coth_series(half);

    // a_n r^{2n-1} terms of (k/rho) coth(r/rho) beyond the k/r pole.
    std::vector<double> a(half + 1, 0.0);
    double rho_pow = space.rho * space.rho;
    for (int n = 1; n <= half; ++n) {
        a[n] = k * coth_c[n] / rho_pow;
        rho_pow *= space.rho * space.rho;
    }

    // m (m + k - 1) c_m = -(mu c_{m-2} + sum_n a_n (m - 2n) c_{m-2n}).
    std::vector<Complex> c(order + 1, Complex(0.0, 0.0));
    c[0] = 1.0;
    for (int m = 2; m <= order; ++m) {
        Complex rhs = mu * c[m - 2];
        for (int n = 1; 2 * n <= m; ++n) rhs += a[n] * static_cast<double>(m - 2 * n) * c[m - 2 * n];
        c[m] = -rhs / (m * (m + k - 1.0));
    }
    return c;
}

SeriesEval eval_series_full(const Space& space, Complex mu, double r, int order) {
    if (!(r >= 0.0)) throw std::invalid_argument("eval_series: r must be nonnegative");
    if (r > series_radius_limit(space))
        throw std::invalid_argument("eval_series: r beyond the validated series radius");

    const std::vector<Complex> c = series_coefficients(space, mu, order);

    // Horner in r^2 for the value; term-by-term for the derivative.
    const double r2 = r * r;
    Complex value(0.0, 0.0);
    for (int m = order; m >= 0; m -= 2) value = value * r2 + c[m];

    Complex deriv(0.0, 0.0);
    double r_pow = r;  // r^{m-1} for m = 2
    for (int m = 2; m <= order; m += 2) {
        deriv += static_cast<double>(m) * c[m] * r_pow;
        r_pow *= r2;
    }

    const double last_term = std::abs(c[order]) * std::pow(r, order);
    return SeriesEval{value, deriv, last_term};
}

Complex eval_series(const Space& space, Complex mu, double r, int order) {
    return eval_series_full(space, mu, r, order).value;
}

EvalReport eval_ode_report(const Space& space, Complex mu, double r, const IntegratorConfig& cfg) {
    if (!(r > 0.0)) throw std::invalid_argument("eval_ode: r must be positive");

    const double r_switch = series_switch_radius(space);
    const SeriesEval seed = eval_series_full(space, mu, std::min(r, r_switch));
    if (r <= r_switch)
        return EvalReport{r, mu, seed.value, EvalMethod::series, seed.last_term};

    const double k_over_rho = space.k / space.rho;
    const double rho = space.rho;
    const OdeField field = [mu, k_over_rho, rho](double rr, const OdeState& y) -> OdeState {
        const double coth = 1.0 / std::tanh(rr / rho);
        return OdeState{y[1], -k_over_rho * coth * y[1] - mu * y[0]};
    };

    const OdeResult out =
        rk_integrate(field, r_switch, r, OdeState{seed.value, seed.derivative}, cfg);
    return EvalReport{r, mu, out.y[0], EvalMethod::ode, out.error_estimate + seed.last_term};
}

Complex eval_ode(const Space& space, Complex mu, double r) {
    return eval_ode_report(space, mu, r).value;
}

EvalReport eval_kernel_report(const Space& space, Complex mu, double r, int quadrature_order) {
    if (!(r >= 0.0)) throw std::invalid_argument("eval_kernel: r must be nonnegative");
    const Complex alpha = phi_inverse(space, mu).principal;
    const RadializeResult out =
        radialize_detail(RadializationRequest{space, alpha, r_to_eta(space, r), quadrature_order});
    return EvalReport{r, mu, out.value, EvalMethod::kernel, out.error_estimate};
}

Complex eval_kernel(const Space& space, Complex mu, double r, int quadrature_order) {
    return eval_kernel_report(space, mu, r, quadrature_order).value;
}

EvalReport evaluate(const Space& space, Complex mu, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("evaluate: r must be nonnegative");
    if (r == 0.0) return EvalReport{r, mu, Complex(1.0, 0.0), EvalMethod::reconciled, 0.0};

    const EvalReport kernel = eval_kernel_report(space, mu, r);
    const EvalReport ode = eval_ode_report(space, mu, r);
    const double disagreement = std::abs(kernel.value - ode.value);
    if (disagreement > 1e-6)
        throw std::runtime_error("evaluate: kernel and ODE routes disagree by " +
                                 std::to_string(disagreement) + " at r = " + std::to_string(r));
    return EvalReport{r, mu, kernel.value, EvalMethod::reconciled, disagreement};
}

}  // namespace hyplap
