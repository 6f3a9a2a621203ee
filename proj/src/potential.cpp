#include "cmcrot/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "cmcrot/numerics.hpp"

namespace cmcrot {

namespace {

void require_positive(double v, const char* who) {
    if (!(v > 0.0))
        throw std::invalid_argument(std::string(who) + ": v must be positive");
}

} // namespace

double log_vn_plus_H(int n, double H, double v) {
    const double u = n * std::log(v); // v^{-n} = e^{-u}
    if (H == 0.0) return -u;
    const double lH = std::log(H);
    if (-u >= lH)
        return -u + std::log1p(std::exp(u + lH)); // H v^n <= 1 here
    return lH + std::log1p(std::exp(-u - lH));
}

double lambda_of_v(const Params& params, double v) {
    require_positive(v, "lambda_of_v");
    return std::exp(log_vn_plus_H(params.n, params.H, v) / params.m);
}

double q_eval(const Params& params, double C, double v) {
    require_positive(v, "q_eval");
    const double A = log_vn_plus_H(params.n, params.H, v);
    // v^2 lambda^2 in one exponential; overflow to +inf gives q = -inf, which
    // is the correct limiting value as v -> 0+
    return C - std::exp(2.0 * std::log(v) + (2.0 / params.m) * A) - v * v;
}

double q_prime(const Params& params, double v) {
    require_positive(v, "q_prime");
    const int n = params.n, m = params.m;
    const double H = params.H;
    const double A = log_vn_plus_H(n, H, v);
    const double u = n * std::log(v);
    const double c1 = static_cast<double>(n - m) / m;
    // lambda^{2-m} D with D = c1 v^{-n} - H; the factored form subtracts H
    // from c1 v^{-n} before any large power is attached
    double term;
    if (u <= 0.0) {
        const double d = c1 - H * std::exp(u); // e^u <= 1, no overflow
        term = (d == 0.0) ? 0.0
                          : std::copysign(std::exp((2.0 - m) / m * A - u + std::log(std::fabs(d))), d);
    } else {
        const double D = c1 * std::exp(-u) - H;
        term = std::exp((2.0 - m) / m * A) * D;
    }
    return 2.0 * v * (term - 1.0);
}

double q_double_prime(const Params& params, double v) {
    require_positive(v, "q_double_prime");
    const int n = params.n, m = params.m;
    const double H = params.H;
    const double A = log_vn_plus_H(n, H, v);
    const double u = n * std::log(v);
    const double lpref = (2.0 - 2.0 * m) / m * A; // log lambda^{2-2m}
    // all three bracket terms are nonnegative for 1 <= m <= n-1, so the sum
    // never cancels; each carries its own power of v^{-n} inside the exp
    const double t1 = std::exp(lpref - 2.0 * u) *
                      (static_cast<double>(2 * n - m) * (n - m)) / (static_cast<double>(m) * m);
    double t2 = 0.0, t3 = 0.0;
    if (H > 0.0) {
        t2 = std::exp(lpref - u) * H * (n * static_cast<double>(n) - 3.0 * n + 2.0 * m) / m;
        t3 = std::exp(lpref) * H * H;
    }
    return -2.0 - 2.0 * (t1 + t2 + t3);
}

CriticalData critical_point(const Params& params, double root_tol) {
    params.validate();
    auto qp = [&](double v) { return q_prime(params, v); };
    // q' has exactly one positive zero (q'' < -2), positive to its left
    double lo = 1.0, hi = 1.0;
    for (int i = 0; i < 2000 && qp(lo) <= 0.0; ++i) lo *= 0.5;
    for (int i = 0; i < 2000 && qp(hi) >= 0.0; ++i) hi *= 2.0;
    if (!(qp(lo) > 0.0) || !(qp(hi) < 0.0))
        throw std::runtime_error("critical_point: failed to bracket the zero of q'");
    CriticalData cd;
    cd.v0 = num::bracketed_root(qp, lo, hi, root_tol);
    cd.c0 = std::exp(2.0 * std::log(cd.v0) +
                     (2.0 / params.m) * log_vn_plus_H(params.n, params.H, cd.v0)) +
            cd.v0 * cd.v0;
    cd.a = -q_double_prime(params, cd.v0) / 2.0;
    return cd;
}

std::optional<CriticalData> critical_closed_form(const Params& params) {
    params.validate();
    const double n = params.n, m = params.m, H = params.H;
    CriticalData cd;
    if (H == 0.0) {
        const double base = (n - m) / m;
        cd.v0 = std::pow(base, m / (2.0 * n));
        cd.c0 = std::pow(base, m / n) * n / (n - m);
        cd.a = 2.0 * n / m;
        return cd;
    }
    if (params.m == 2) {
        const double base = (n - 2.0) / (2.0 * (H + 1.0));
        cd.v0 = std::pow(base, 1.0 / n);
        cd.c0 = std::pow(base, 2.0 / n) * n * (H + 1.0) / (n - 2.0);
        cd.a = n * (H + 1.0);
        return cd;
    }
    if (params.m == 4 && params.n >= 5) {
        if (std::fabs(H - 1.0) < 1e-8) {
            // removable singularity at H = 1: the general form's denominator
            // 4H(1-H) vanishes, so dispatch to the specialized expressions
            const double base = (n - 4.0) * (n - 4.0) / (8.0 * n - 16.0);
            cd.v0 = std::pow(base, 1.0 / n);
            cd.c0 = std::pow(base, 2.0 / n) * (n / (n - 4.0) + 1.0);
            cd.a = 2.0 * (n - 2.0) * (n - 2.0) / n;
            return cd;
        }
        const double S = std::sqrt(n * (n - 4.0) * H + 4.0);
        const double num_v0 = S - n * H + 4.0 * H - 2.0;
        const double base = num_v0 / (4.0 * H * (1.0 - H));
        cd.v0 = std::pow(base, 1.0 / n);
        cd.c0 = std::pow(base, 2.0 / n) *
                (std::sqrt(H * (S - n * H + 2.0) / num_v0) + 1.0);
        const double braces = n * n * (n - 4.0) * H * H + n * (-n * n + 4.0 * n + 4.0) * H -
                              4.0 * n + (n * n - 2.0 * n + (-n * n + 2.0 * n) * H) * S;
        cd.a = std::sqrt(H) * braces /
               (std::pow(std::fabs(S - n * H + 2.0), 1.5) * std::sqrt(std::fabs(num_v0)));
        return cd;
    }
    return std::nullopt;
}

RootPair roots(const Params& params, double C, double root_tol) {
    params.validate();
    const CriticalData cd = critical_point(params, root_tol);
    if (!(C > cd.c0))
        throw std::domain_error("roots: no oscillation, C must exceed c0");
    auto q = [&](double v) { return q_eval(params, C, v); };
    // q(v0) = C - c0 > 0; q -> -inf at both ends of (0, sqrt(C))
    double lo = cd.v0;
    for (int i = 0; i < 5000 && q(lo) >= 0.0; ++i) lo *= 0.5;
    if (!(q(lo) < 0.0))
        throw std::runtime_error("roots: failed to bracket t1");
    RootPair rp;
    rp.C = C;
    rp.t1 = num::bracketed_root(q, lo, cd.v0, root_tol);
    const double sqrtC = std::sqrt(C);
    rp.t2 = num::bracketed_root(q, cd.v0, sqrtC, root_tol);
    // Newton-polish to the q-evaluation noise floor. The bracketing tolerance
    // leaves ~1e-12 relative jitter that moves discontinuously with C, and the
    // period quadrature's endpoint factorization amplifies root error by a
    // large factor (the turning points enter as the exact zeros of the
    // factored form), so sub-ulp roots are worth two extra q evaluations.
    for (double* t : {&rp.t1, &rp.t2}) {
        for (int it = 0; it < 2; ++it) {
            const double slope = q_prime(params, *t);
            if (slope == 0.0) break;
            const double step = q(*t) / slope;
            if (!(std::fabs(step) < 0.5 * *t)) break; // reject a wild step
            *t -= step;
        }
    }
    if (!(0.0 < rp.t1 && rp.t1 < cd.v0 && cd.v0 < rp.t2 && rp.t2 < sqrtC))
        throw std::runtime_error("roots: turning points escaped their brackets");
    return rp;
}

} // namespace cmcrot
