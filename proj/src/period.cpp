#include "cmcrot/period.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cmcrot/numerics.hpp"

namespace cmcrot {

namespace {

constexpr double pi = std::numbers::pi;

// 2 * int_{r1}^{r2} f_reg(t) / sqrt(q(t)) dt for q with simple zeros at r1, r2.
// The substitution t = mid - hw cos(u) satisfies (t - r1)(r2 - t) = hw^2 sin^2 u
// exactly, so with q = (t - r1)(r2 - t) psi(t) the element dt / sqrt(q) becomes
// du / sqrt(psi) and the endpoint singularities vanish.
//
// The distances to the roots are computed through the half-angle identities
// d1 = 2 hw sin^2(u/2), d2 = 2 hw cos^2(u/2), which stay exact at both ends;
// the naive mid - hw cos(u) cancels catastrophically when r1 << r2 (large-C
// walls put r1 many orders of magnitude below ulp(hw)) and can even go
// negative.
//
// Evaluated near a root, q is the difference of O(qscale) terms, so the ratio
// q / (d1 d2) carries relative noise ~1e-16 qscale / (|q'| d). Inside the zone
// where that noise would exceed ~1e-8, psi is replaced by its first-order
// expansion about the root, psi_i (1 + beta_i d); the switchover mismatch is
// then O(1e-8) pointwise in a tiny u-window, small enough that the adaptive
// error estimate still converges (a larger jump there silently degrades the
// whole quadrature). The linear factor is clamped: against a steep wall
// (|q'| enormous, psi varying on the scale of r1 itself) the expansion is
// invalid, but there the window covers a negligible slice of the integral, so
// pinning the factor near 1 only perturbs the result below the tolerance.
template <typename Q, typename QP, typename QPP, typename F>
double two_root_integral(Q&& q, QP&& qp, QPP&& qpp, double r1, double r2, F&& f_reg,
                         double tol, double qscale) {
    const double hw = 0.5 * (r2 - r1);
    const double span = r2 - r1;
    const double qp1 = qp(r1);
    const double qp2 = qp(r2);
    const double psi1 = qp1 / span;
    const double psi2 = -qp2 / span;
    const double beta1 = qpp(r1) / (2.0 * qp1) + 1.0 / span;
    const double beta2 = 1.0 / span - qpp(r2) / (2.0 * qp2);
    auto noise_width = [&](double slope) {
        return std::clamp(4e-8 * qscale / std::fabs(slope), 1e-13 * span, 5e-2 * span);
    };
    const double eps1 = noise_width(qp1);
    const double eps2 = noise_width(qp2);
    auto integrand = [&](double u) {
        const double sh = std::sin(0.5 * u);
        const double ch = std::cos(0.5 * u);
        const double d1 = 2.0 * hw * sh * sh;
        const double d2 = 2.0 * hw * ch * ch;
        const double t = d1 < d2 ? r1 + d1 : r2 - d2;
        double psi;
        if (d1 < eps1)
            psi = psi1 * std::clamp(1.0 + beta1 * d1, 0.5, 2.0);
        else if (d2 < eps2)
            psi = psi2 * std::clamp(1.0 + beta2 * d2, 0.5, 2.0);
        else
            psi = q(t) / (d1 * d2);
        if (!(psi > 0.0))
            throw std::runtime_error("period: factored integrand lost positivity");
        return f_reg(t) / std::sqrt(psi);
    };
    return 2.0 * num::integrate(integrand, 0.0, pi, tol);
}

RootPair checked_roots(const Params& params, double C) {
    params.validate();
    return roots(params, C); // throws the domain error for C <= c0
}

} // namespace

double half_period_T(const Params& params, double C, double quad_tol) {
    const RootPair rp = checked_roots(params, C);
    auto q = [&](double t) { return q_eval(params, C, t); };
    auto qp = [&](double t) { return q_prime(params, t); };
    auto qpp = [&](double t) { return q_double_prime(params, t); };
    return two_root_integral(q, qp, qpp, rp.t1, rp.t2, [](double) { return 1.0; },
                             quad_tol, C);
}

double period_P_direct(const Params& params, double C, double quad_tol) {
    const RootPair rp = checked_roots(params, C);
    const double sqrtC = std::sqrt(C);
    auto q = [&](double t) { return q_eval(params, C, t); };
    auto qp = [&](double t) { return q_prime(params, t); };
    auto qpp = [&](double t) { return q_double_prime(params, t); };
    auto f = [&](double t) {
        const double denom = C - t * t; // t2 < sqrt(C) keeps this positive
        if (!(denom > 0.0))
            throw std::runtime_error("period_P: C - t^2 vanished on [t1, t2]");
        return sqrtC * t * lambda_of_v(params, t) / denom;
    };
    return two_root_integral(q, qp, qpp, rp.t1, rp.t2, f, quad_tol, C);
}

double period_P_scaled(const Params& params, double C, double quad_tol) {
    const RootPair rp = checked_roots(params, C);
    const double sqrtC = std::sqrt(C);
    const double x1 = rp.t1 / sqrtC;
    const double x2 = rp.t2 / sqrtC;
    // qt(x) = q(sqrt(C) x)/C = 1 - x^2 (1 + lambda(sqrt(C) x)^2)
    auto qt = [&](double x) { return q_eval(params, C, sqrtC * x) / C; };
    auto qtp = [&](double x) { return q_prime(params, sqrtC * x) / sqrtC; };
    auto qtpp = [&](double x) { return q_double_prime(params, sqrtC * x); };
    auto f = [&](double x) {
        const double denom = 1.0 - x * x;
        if (!(denom > 0.0))
            throw std::runtime_error("period_P: 1 - x^2 vanished on the scaled interval");
        return x * lambda_of_v(params, sqrtC * x) / denom;
    };
    return two_root_integral(qt, qtp, qtpp, x1, x2, f, quad_tol, 1.0);
}

double period_P(const Params& params, double C, double quad_tol) {
    const double direct = period_P_direct(params, C, quad_tol);
    const double scaled = period_P_scaled(params, C, quad_tol);
    const double gap = std::fabs(direct - scaled);
    if (gap > std::max(1e-7, 1e3 * quad_tol * std::fabs(direct)))
        throw std::runtime_error("period_P: the two integral forms disagree (gap " +
                                 std::to_string(gap) + ")");
    return direct;
}

double limit_at_c0(const Params& params) {
    params.validate();
    const CriticalData cd = critical_point(params);
    // c0 - v0^2 = v0^2 lambda(v0)^2, evaluated without the subtraction
    const double v0lam2 = std::exp(2.0 * std::log(cd.v0) +
                                   (2.0 / params.m) * log_vn_plus_H(params.n, params.H, cd.v0));
    return 2.0 * pi * std::sqrt(cd.c0) / (std::sqrt(cd.a) * std::sqrt(v0lam2));
}

double limit_at_infinity(const Params& params) {
    params.validate();
    if (!(params.H > 0.0))
        throw std::domain_error("limit_at_infinity: H_m must be positive (the limit is pi at H_m = 0)");
    return 2.0 * std::atan(std::pow(params.H, -1.0 / params.m));
}

std::optional<double> limit_at_c0_printed(const Params& params) {
    params.validate();
    const double n = params.n, H = params.H;
    if (H == 0.0) return std::numbers::sqrt2 * pi;
    if (params.m == 4 && params.n >= 5)
        return 2.0 * pi / std::pow(n * (n - 4.0) * H + 4.0, 0.25);
    if (params.m == 2)
        return 2.0 * pi / std::sqrt(n * H + 2.0);
    return std::nullopt;
}

PeriodBounds bounds(const Params& params) {
    return PeriodBounds{limit_at_infinity(params), limit_at_c0(params)};
}

} // namespace cmcrot
