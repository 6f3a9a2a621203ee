#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "cmcrot/curvature.hpp"
#include "cmcrot/existence.hpp"
#include "cmcrot/period.hpp"
#include "cmcrot/potential.hpp"
#include "cmcrot/profile.hpp"

using namespace cmcrot;

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", x);
    return buf;
}

int failures = 0;

void criterion(int id, const std::string& label, double budget_seconds,
               const std::function<std::pair<bool, std::string>()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto [p, d] = body();
        pass = p;
        detail = std::move(d);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_seconds) {
        pass = false;
        detail += " [over budget " + fmt(budget_seconds) + " s]";
    }
    char head[64];
    std::snprintf(head, sizeof(head), "%s criterion-%d", pass ? "PASS" : "FAIL", id);
    std::cout << head << "  " << label << "  (" << fmt(secs) << " s)  " << detail << '\n';
    if (!pass) ++failures;
}

double rel(double got, double ref) { return std::fabs(got - ref) / std::fabs(ref); }

// brute-force e_k: direct sum over all k-subsets
double esf_enumerated(const std::vector<double>& v, int k) {
    const int n = static_cast<int>(v.size());
    if (k == 0) return 1.0;
    double sum = 0.0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int bits = 0;
        for (unsigned x = mask; x; x &= x - 1) ++bits;
        if (bits != k) continue;
        double p = 1.0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) p *= v[static_cast<size_t>(i)];
        sum += p;
    }
    return sum;
}

// Independent period oracle: integrate f / sqrt(q) on [t1 + eps, t2 - eps]
// with double-exponential quadrature and add the analytic square-root tails
// f(ti) 2 sqrt(eps / |q'(ti)|). No cosine substitution anywhere.
double period_clipped_oracle(const Params& params, double C) {
    const RootPair rp = roots(params, C);
    const double span = rp.t2 - rp.t1;
    const double eps = 1e-8 * span;
    const double sqrtC = std::sqrt(C);
    auto f = [&](double t) {
        return sqrtC * t * lambda_of_v(params, t) / (C - t * t);
    };
    auto g = [&](double t) {
        return f(t) / std::sqrt(std::max(q_eval(params, C, t), 0.0));
    };
    boost::math::quadrature::tanh_sinh<double> ts;
    const double interior = ts.integrate(g, rp.t1 + eps, rp.t2 - eps, 1e-9);
    const double tail1 = f(rp.t1) * 2.0 * std::sqrt(eps / q_prime(params, rp.t1));
    const double tail2 = f(rp.t2) * 2.0 * std::sqrt(eps / -q_prime(params, rp.t2));
    return 2.0 * (interior + tail1 + tail2);
}

const std::vector<double> H_GRID{0.1, 0.5, 1.0, 2.0, 10.0};

} // namespace

int main() {
    criterion(1, "critical-data closed forms", 1.0, [] {
        double worst4 = 0.0, worst2 = 0.0, worst0 = 0.0;
        for (int n = 5; n <= 10; ++n)
            for (double H : H_GRID) {
                const Params p{n, 4, H};
                const auto cf = *critical_closed_form(p);
                const CriticalData cd = critical_point(p);
                worst4 = std::max({worst4, rel(cf.v0, cd.v0), rel(cf.c0, cd.c0),
                                   rel(cf.a, cd.a)});
            }
        for (int n = 3; n <= 10; ++n)
            for (double H : H_GRID) {
                const Params p{n, 2, H};
                const auto cf = *critical_closed_form(p);
                const CriticalData cd = critical_point(p);
                worst2 = std::max({worst2, rel(cf.v0, cd.v0), rel(cf.c0, cd.c0),
                                   rel(cf.a, cd.a)});
            }
        for (int n = 3; n <= 10; ++n)
            for (int m = 1; m < n; ++m) {
                const auto cf = *critical_closed_form(Params{n, m, 0.0});
                const CriticalData cd = critical_point(Params{n, m, 1e-10});
                worst0 = std::max({worst0, rel(cd.v0, cf.v0), rel(cd.c0, cf.c0),
                                   rel(cd.a, 2.0 * n / m)});
            }
        return std::pair{worst4 < 1e-10 && worst2 < 1e-10 && worst0 < 1e-6,
                         "rel err m=4 " + fmt(worst4) + ", m=2 " + fmt(worst2) +
                             ", H->0 " + fmt(worst0)};
    });

    criterion(2, "period converges to 2 pi / sqrt(3) at the critical energy", 5.0, [] {
        const Params p{5, 4, 1.0};
        const double c0 = critical_point(p).c0;
        const double B = 2.0 * pi / std::sqrt(3.0);
        bool decreasing = true;
        double prev = 1e300, last = 0.0;
        for (int j = 2; j <= 6; ++j) {
            last = std::fabs(period_P(p, c0 * (1.0 + std::pow(10.0, -j))) - B);
            if (last >= prev) decreasing = false;
            prev = last;
        }
        return std::pair{decreasing && last < 1e-2,
                         std::string(decreasing ? "monotone" : "NOT monotone") +
                             ", gap at j=6 " + fmt(last)};
    });

    criterion(3, "period approaches 2 arctan(H^{-1/m}) at large energy", 10.0, [] {
        double worst = 0.0;
        auto gap = [&](const Params& p) {
            worst = std::max(worst,
                             std::fabs(period_P(p, 1e8) - limit_at_infinity(p)));
        };
        for (int n = 5; n <= 10; ++n)
            for (double H : H_GRID) gap(Params{n, 4, H});
        for (int n = 3; n <= 10; ++n)
            for (double H : H_GRID) gap(Params{n, 2, H});
        return std::pair{worst < 1e-2, "max |P(1e8) - A| " + fmt(worst)};
    });

    criterion(4, "generic c0-limit equals the printed forms", 1.0, [] {
        double worst = 0.0, worst0 = 0.0;
        for (int n = 5; n <= 10; ++n)
            for (double H : H_GRID)
                worst = std::max(worst, rel(limit_at_c0(Params{n, 4, H}),
                                            *limit_at_c0_printed(Params{n, 4, H})));
        for (int n = 3; n <= 10; ++n)
            for (double H : H_GRID)
                worst = std::max(worst, rel(limit_at_c0(Params{n, 2, H}),
                                            *limit_at_c0_printed(Params{n, 2, H})));
        for (int n = 3; n <= 8; ++n)
            for (int m = 1; m < std::min(n, 5); ++m)
                worst0 = std::max(worst0, rel(limit_at_c0(Params{n, m, 1e-10}),
                                              std::numbers::sqrt2 * pi));
        return std::pair{worst < 1e-10 && worst0 < 1e-5,
                         "printed rel " + fmt(worst) + ", H->0 rel " + fmt(worst0)};
    });

    criterion(5, "three-lobed embedded solution certificate", 30.0, [] {
        const Params p{5, 4, 1.0};
        const ExistenceCertificate cert = exists_embedded({p, 3});
        if (cert.outcome != SolveOutcome::found)
            return std::pair{false, std::string("solver did not find C_star")};
        const double period_gap = std::fabs(cert.P_achieved - 2.0 * pi / 3.0);
        const auto samples = integrate_profile(p, cert.C_star, 3, 128);
        const ClosureReport rep = closure_check(p, samples, 3);
        const bool ok = period_gap < 1e-9 && std::fabs(rep.delta_theta) < 1e-4 &&
                        rep.max_energy_drift < 1e-8 && rep.max_Hm_deviation < 1e-6;
        return std::pair{ok, "C_star " + fmt(cert.C_star) + ", |P - 2pi/3| " +
                                 fmt(period_gap) + ", |dtheta| " +
                                 fmt(std::fabs(rep.delta_theta)) + ", drift " +
                                 fmt(rep.max_energy_drift) + ", H_4 dev " +
                                 fmt(rep.max_Hm_deviation)};
    });

    criterion(6, "admissible-window endpoints reproduce 2 pi / k", 1.0, [] {
        double worstA = 0.0, worstB = 0.0;
        auto probe = [&](int n, int m, int k) {
            const auto [H_lo, H_hi] = admissible_range(n, m, k);
            if (H_lo > 0.0)
                worstA = std::max(worstA, std::fabs(limit_at_infinity(Params{n, m, H_lo}) -
                                                    2.0 * pi / k));
            worstB = std::max(worstB, rel(limit_at_c0(Params{n, m, H_hi}), 2.0 * pi / k));
        };
        for (int k : {3, 4, 5})
            for (int n : {5, 6}) probe(n, 4, k);
        for (int k : {2, 3})
            for (int n : {3, 4}) probe(n, 2, k);
        for (int k : {2, 3})
            for (int n : {2, 3, 4, 5}) probe(n, 1, k);
        return std::pair{worstA < 1e-13 && worstB < 1e-10,
                         "inner endpoint abs " + fmt(worstA) + ", outer endpoint rel " +
                             fmt(worstB)};
    });

    criterion(7, "quadrature agrees with the clipped-interval oracle", 20.0, [] {
        std::mt19937_64 rng(20250814);
        std::uniform_int_distribution<int> dn(3, 8);
        std::uniform_real_distribution<double> dH(-1.0, 1.0);
        std::uniform_real_distribution<double> dC(0.0, 3.0);
        double worst_oracle = 0.0, worst_forms = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const int n = dn(rng);
            std::uniform_int_distribution<int> dm(1, std::min(4, n - 1));
            const Params p{n, dm(rng), std::pow(10.0, dH(rng))};
            const double c0 = critical_point(p).c0;
            const double C = c0 * (1.001 + std::pow(10.0, dC(rng)));
            const double P = period_P(p, C);
            worst_oracle = std::max(worst_oracle, rel(P, period_clipped_oracle(p, C)));
            worst_forms = std::max(worst_forms, rel(period_P_direct(p, C, 1e-11),
                                                    period_P_scaled(p, C, 1e-11)));
        }
        return std::pair{worst_oracle < 1e-6 && worst_forms < 1e-9,
                         "oracle rel " + fmt(worst_oracle) + ", printed-forms rel " +
                             fmt(worst_forms)};
    });

    criterion(8, "symmetric-function curvature matches enumeration", 1.0, [] {
        std::mt19937_64 rng(424242);
        std::uniform_int_distribution<int> dlen(1, 8);
        std::uniform_real_distribution<double> dval(-2.0, 2.0);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const int len = dlen(rng);
            std::vector<double> v(static_cast<size_t>(len));
            for (double& x : v) x = dval(rng);
            for (int m = 1; m <= len; ++m) {
                const double ref = esf_enumerated(v, m) / binomial(len, m);
                const double got = mth_mean_curvature(v, m);
                worst = std::max(worst,
                                 std::fabs(got - ref) / std::max(1.0, std::fabs(ref)));
            }
        }
        return std::pair{worst < 1e-12, "max rel err over 1000 cases " + fmt(worst)};
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << '\n';
    return failures == 0 ? 0 : 1;
}
