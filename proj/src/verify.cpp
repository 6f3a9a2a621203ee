#include "cmcrot/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cmcrot/curvature.hpp"
#include "cmcrot/existence.hpp"
#include "cmcrot/numerics.hpp"
#include "cmcrot/period.hpp"
#include "cmcrot/potential.hpp"
#include "cmcrot/profile.hpp"

namespace cmcrot {

namespace {

constexpr double pi = std::numbers::pi;

std::string brief(double residual, const char* what) {
    std::ostringstream os;
    os.precision(3);
    os << what << ' ' << residual;
    return os.str();
}

// Each check sets its own pass flag and worst residual; exceptions fail the
// check instead of aborting the run.
class Runner {
public:
    Runner(std::vector<CheckResult>& out, std::string suite, const std::string& filter)
        : out_(out), suite_(std::move(suite)),
          enabled_(filter.empty() || filter == suite_) {}

    template <typename F>
    void operator()(const std::string& id, F&& body) {
        if (!enabled_) return;
        CheckResult r;
        r.suite = suite_;
        r.id = id;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.note = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out_.push_back(std::move(r));
    }

private:
    std::vector<CheckResult>& out_;
    std::string suite_;
    bool enabled_;
};

double esf_bruteforce(const std::vector<double>& v, int k) {
    const int n = static_cast<int>(v.size());
    double sum = (k == 0) ? 1.0 : 0.0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        double p = 1.0;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) p *= v[static_cast<size_t>(i)];
        sum += p;
    }
    return sum;
}

// Sampled parameter draw with m-th curvature away from degenerate corners.
Params draw_params(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dn(3, 8);
    const int n = dn(rng);
    std::uniform_int_distribution<int> dm(1, std::min(4, n - 1));
    const int m = dm(rng);
    std::uniform_real_distribution<double> dlh(-2.0, 2.0);
    return Params{n, m, std::pow(10.0, dlh(rng))};
}

} // namespace

std::vector<CheckResult> run_verification(const std::string& suite_filter,
                                          std::uint64_t seed) {
    std::vector<CheckResult> results;
    std::mt19937_64 rng(seed);

    // ---- curvature -------------------------------------------------------
    {
        Runner check(results, "curvature", suite_filter);

        check("esf-matches-enumeration", [&](CheckResult& r) {
            std::uniform_int_distribution<int> dlen(1, 8);
            std::uniform_real_distribution<double> dval(-2.0, 2.0);
            double worst = 0.0;
            for (int trial = 0; trial < 200; ++trial) {
                const int len = dlen(rng);
                std::vector<double> v(static_cast<size_t>(len));
                for (double& x : v) x = dval(rng);
                for (int k = 0; k <= len; ++k) {
                    const double ref = esf_bruteforce(v, k);
                    const double got = elementary_symmetric(v, k);
                    worst = std::max(worst, std::fabs(got - ref) / std::max(1.0, std::fabs(ref)));
                }
            }
            r.residual = worst;
            r.pass = worst < 1e-12;
            r.note = brief(worst, "max rel err over 200 draws:");
        });

        check("recombination-roundtrip", [&](CheckResult& r) {
            // lambda is drawn so lambda^m stays within 1e+-2 of max(H, 0.1);
            // far outside that window the symmetric-function recombination is
            // dominated by cancellation and measures rounding, not the code
            std::uniform_real_distribution<double> dg(-2.0, 2.0);
            double worst = 0.0;
            for (int trial = 0; trial < 300; ++trial) {
                const Params p = draw_params(rng);
                const double lam =
                    std::pow(std::pow(10.0, dg(rng)) * std::max(p.H, 0.1), 1.0 / p.m);
                const double mu = mu_from_lambda(p, lam);
                std::vector<double> lams(static_cast<size_t>(p.n), lam);
                lams.back() = mu;
                const double H_rec = mth_mean_curvature(lams, p.m);
                worst = std::max(worst, std::fabs(H_rec - p.H) / p.H);
            }
            r.residual = worst;
            r.pass = worst < 1e-8;
            r.note = brief(worst, "max rel err over 300 draws:");
        });

        check("scalar-curvature-roundtrip", [&](CheckResult& r) {
            std::uniform_int_distribution<int> dn(3, 9);
            std::uniform_real_distribution<double> dval(-2.0, 2.0);
            double worst = 0.0;
            for (int trial = 0; trial < 200; ++trial) {
                const int n = dn(rng);
                std::vector<double> v(static_cast<size_t>(n));
                for (double& x : v) x = dval(rng);
                const CurvatureReport rep = scalar_curvature(n, v);
                const double h2 = h2_from_scalar(rep.R, n);
                const double ref = mth_mean_curvature(v, 2);
                worst = std::max(worst, std::fabs(h2 - ref) / std::max(1.0, std::fabs(ref)));
            }
            r.residual = worst;
            r.pass = worst < 1e-12;
            r.note = brief(worst, "max rel err over 200 draws:");
        });
    }

    // ---- potential -------------------------------------------------------
    {
        Runner check(results, "potential", suite_filter);

        check("q-vanishes-at-critical-energy", [&](CheckResult& r) {
            double worst = 0.0;
            for (int trial = 0; trial < 40; ++trial) {
                const Params p = draw_params(rng);
                const CriticalData cd = critical_point(p);
                const double scale = std::max(1.0, cd.c0);
                worst = std::max(worst, std::fabs(q_eval(p, cd.c0, cd.v0)) / scale);
                worst = std::max(worst, std::fabs(q_prime(p, cd.v0)) * cd.v0 / scale);
                // v0 is a strict maximum of q on the positive axis
                if (q_eval(p, cd.c0, cd.v0 * 0.999) >= 0.0 ||
                    q_eval(p, cd.c0, cd.v0 * 1.001) >= 0.0)
                    worst = std::max(worst, 1.0);
            }
            r.residual = worst;
            r.pass = worst < 1e-9;
            r.note = brief(worst, "max scaled residual over 40 draws:");
        });

        check("qpp-below-minus-two", [&](CheckResult& r) {
            double worst = -1e300; // max of q'' + 2, must stay negative
            for (int trial = 0; trial < 40; ++trial) {
                const Params p = draw_params(rng);
                for (int j = -12; j <= 12; ++j)
                    worst = std::max(worst,
                                     q_double_prime(p, std::pow(10.0, j / 4.0)) + 2.0);
            }
            r.residual = worst;
            r.pass = worst < 1e-12;
            r.note = brief(worst, "max of q''+2 over log grid:");
        });

        check("derivatives-match-finite-differences", [&](CheckResult& r) {
            // halving h must cut the central-difference error ~4x, confirming
            // q' and q'' are the derivatives of q and q'
            double worst = 0.0;
            for (int trial = 0; trial < 25; ++trial) {
                const Params p = draw_params(rng);
                const CriticalData cd = critical_point(p);
                std::uniform_real_distribution<double> dv(0.5 * cd.v0, 2.0 * cd.v0);
                const double v = dv(rng);
                auto check_pair = [&](auto&& f, auto&& fp) {
                    const double scale = std::fabs(fp(v)) + 1.0;
                    auto err = [&](double h) {
                        return std::fabs((f(v + h) - f(v - h)) / (2.0 * h) - fp(v));
                    };
                    const double h = 1e-3 * v;
                    const double e1 = err(h), e2 = err(0.5 * h);
                    if (e2 < 1e-12 * scale) return; // below rounding, nothing to rate
                    const double ratio = e1 / e2;
                    if (ratio < 3.0 || ratio > 5.0)
                        worst = std::max(worst, std::fabs(ratio - 4.0));
                };
                check_pair([&](double v_) { return q_eval(p, 0.0, v_); },
                           [&](double v_) { return q_prime(p, v_); });
                check_pair([&](double v_) { return q_prime(p, v_); },
                           [&](double v_) { return q_double_prime(p, v_); });
            }
            r.residual = worst;
            r.pass = worst == 0.0;
            r.note = brief(worst, "worst |ratio-4| outside (3,5):");
        });

        check("closed-forms-match-root-finding", [&](CheckResult& r) {
            std::vector<Params> grid;
            for (int n = 3; n <= 8; ++n)
                for (double H : {0.1, 1.0, 2.0}) grid.push_back({n, 2, H});
            for (int n = 5; n <= 8; ++n)
                for (double H : {0.1, 0.5, 1.0, 2.0, 10.0}) grid.push_back({n, 4, H});
            for (int n = 3; n <= 8; ++n)
                for (int m = 1; m < n; ++m) grid.push_back({n, m, 0.0});
            double worst = 0.0;
            for (const Params& p : grid) {
                const auto cf = critical_closed_form(p);
                if (!cf) continue;
                const CriticalData cd = critical_point(p, 1e-14);
                worst = std::max({worst, std::fabs(cf->v0 - cd.v0) / cd.v0,
                                  std::fabs(cf->c0 - cd.c0) / cd.c0,
                                  std::fabs(cf->a - cd.a) / cd.a});
            }
            r.residual = worst;
            r.pass = worst < 1e-10;
            r.note = brief(worst, "max rel err over the m=2/m=4/H=0 grid:");
        });

        check("roots-straddle-critical-point", [&](CheckResult& r) {
            double worst = 0.0;
            for (int trial = 0; trial < 25; ++trial) {
                const Params p = draw_params(rng);
                const CriticalData cd = critical_point(p);
                for (double f : {1.01, 3.0, 100.0}) {
                    const double C = cd.c0 * f;
                    const RootPair rp = roots(p, C);
                    if (!(rp.t1 < cd.v0 && cd.v0 < rp.t2 && rp.t2 < std::sqrt(C)))
                        worst = std::max(worst, 1.0);
                    worst = std::max(worst, std::fabs(q_eval(p, C, rp.t1)) / C);
                    worst = std::max(worst, std::fabs(q_eval(p, C, rp.t2)) / C);
                    if (q_eval(p, C, 0.5 * (rp.t1 + rp.t2)) <= 0.0)
                        worst = std::max(worst, 1.0);
                    if (q_eval(p, C, 0.5 * rp.t1) >= 0.0 ||
                        q_eval(p, C, 0.5 * (rp.t2 + std::sqrt(C))) >= 0.0)
                        worst = std::max(worst, 1.0);
                }
            }
            r.residual = worst;
            r.pass = worst < 1e-8;
            r.note = brief(worst, "max scaled root residual over 25 draws:");
        });
    }

    // ---- period ----------------------------------------------------------
    {
        Runner check(results, "period", suite_filter);

        check("integral-forms-agree", [&](CheckResult& r) {
            double worst = 0.0;
            for (int trial = 0; trial < 15; ++trial) {
                const Params p = draw_params(rng);
                const CriticalData cd = critical_point(p);
                std::uniform_real_distribution<double> df(0.0, 3.0);
                const double C = cd.c0 * (1.001 + std::pow(10.0, df(rng)));
                const double d = period_P_direct(p, C, 1e-11);
                const double s = period_P_scaled(p, C, 1e-11);
                worst = std::max(worst, std::fabs(d - s) / d);
            }
            r.residual = worst;
            r.pass = worst < 1e-9;
            r.note = brief(worst, "max rel gap over 15 draws:");
        });

        check("approaches-c0-limit", [&](CheckResult& r) {
            double worst = 0.0;
            for (const Params& p : {Params{5, 4, 1.0}, Params{3, 2, 0.5}, Params{6, 3, 2.0}}) {
                const CriticalData cd = critical_point(p);
                const double B = limit_at_c0(p);
                double prev = 1e300;
                for (int j = 2; j <= 6; ++j) {
                    const double gap = std::fabs(period_P(p, cd.c0 * (1.0 + std::pow(10.0, -j))) - B);
                    if (gap >= prev) worst = std::max(worst, 1.0);
                    prev = gap;
                }
                worst = std::max(worst, prev); // gap at j = 6
            }
            r.residual = worst;
            r.pass = worst < 1e-4;
            r.note = brief(worst, "final gap to the c0-limit (j = 6):");
        });

        check("approaches-infinity-limit", [&](CheckResult& r) {
            double worst = 0.0;
            for (const Params& p : {Params{5, 4, 1.0}, Params{3, 2, 0.5}, Params{6, 3, 2.0}}) {
                const double A = limit_at_infinity(p);
                double prev = 1e300;
                for (double C : {1e4, 1e6, 1e8}) {
                    const double gap = std::fabs(period_P(p, C) - A);
                    if (gap >= prev) worst = std::max(worst, 1.0);
                    prev = gap;
                }
                worst = std::max(worst, prev);
            }
            r.residual = worst;
            r.pass = worst < 1e-2;
            r.note = brief(worst, "final gap to the infinity-limit (C = 1e8):");
        });

        check("continuous-in-C", [&](CheckResult& r) {
            // adjacent samples on a log grid may not jump past the trend of
            // their neighbours (quadrature route flips would show up here)
            double worst = 0.0;
            for (const Params& p : {Params{5, 4, 1.0}, Params{4, 2, 0.3}}) {
                const double c0 = critical_point(p).c0;
                const int N = 60;
                std::vector<double> P(N);
                for (int i = 0; i < N; ++i)
                    P[i] = period_P(p, c0 * (1.0 + 1e-3 * std::pow(1e7, i / (N - 1.0))));
                for (int i = 1; i + 2 < N; ++i) {
                    const double jump = std::fabs(P[i + 1] - P[i]);
                    const double secant = std::max(std::fabs(P[i] - P[i - 1]),
                                                   std::fabs(P[i + 2] - P[i + 1]));
                    worst = std::max(worst, jump / (10.0 * secant + 1e-12));
                }
            }
            r.residual = worst;
            r.pass = worst < 1.0;
            r.note = brief(worst, "worst jump / (10x neighbour secant):");
        });
    }

    // ---- limits ----------------------------------------------------------
    {
        Runner check(results, "limits", suite_filter);

        check("printed-forms-match-generic", [&](CheckResult& r) {
            double worst = 0.0;
            for (int n = 5; n <= 10; ++n)
                for (double H : {0.1, 0.5, 1.0, 2.0, 10.0}) {
                    const Params p{n, 4, H};
                    worst = std::max(worst,
                                     std::fabs(limit_at_c0(p) - *limit_at_c0_printed(p)) /
                                         *limit_at_c0_printed(p));
                }
            for (int n = 3; n <= 8; ++n)
                for (double H : {0.1, 0.5, 1.0, 2.0, 10.0}) {
                    const Params p{n, 2, H};
                    worst = std::max(worst,
                                     std::fabs(limit_at_c0(p) - *limit_at_c0_printed(p)) /
                                         *limit_at_c0_printed(p));
                }
            r.residual = worst;
            r.pass = worst < 1e-10;
            r.note = brief(worst, "max rel err over the m=4 and m=2 grids:");
        });

        check("vanishing-H-limit", [&](CheckResult& r) {
            double worst = 0.0;
            for (int n = 3; n <= 6; ++n)
                for (int m = 1; m < std::min(n, 5); ++m)
                    worst = std::max(worst,
                                     std::fabs(limit_at_c0(Params{n, m, 1e-12}) -
                                               std::numbers::sqrt2 * pi));
            r.residual = worst;
            r.pass = worst < 1e-6;
            r.note = brief(worst, "max |B(1e-12) - sqrt(2) pi|:");
        });

        check("c0-limit-decreasing-in-H", [&](CheckResult& r) {
            // monotonicity underwrites the numeric inversion used by
            // admissible_range for m outside {1, 2, 4}
            double worst = 0.0;
            for (int trial = 0; trial < 10; ++trial) {
                Params p = draw_params(rng);
                double prev = 1e300;
                for (int j = -8; j <= 8; ++j) {
                    p.H = std::pow(10.0, j / 2.0);
                    const double B = limit_at_c0(p);
                    if (B >= prev) worst = std::max(worst, B - prev + 1e-300);
                    prev = B;
                }
            }
            r.residual = worst;
            r.pass = worst == 0.0;
            r.note = brief(worst, "worst monotonicity violation:");
        });

        check("infinity-limit-decreasing-in-H", [&](CheckResult& r) {
            double worst = 0.0;
            for (int trial = 0; trial < 10; ++trial) {
                Params p = draw_params(rng);
                double prev = 1e300;
                for (int j = -8; j <= 8; ++j) {
                    p.H = std::pow(10.0, j / 2.0);
                    const double A = limit_at_infinity(p);
                    if (A >= prev) worst = std::max(worst, A - prev + 1e-300);
                    prev = A;
                }
            }
            r.residual = worst;
            r.pass = worst == 0.0;
            r.note = brief(worst, "worst monotonicity violation:");
        });
    }

    // ---- existence -------------------------------------------------------
    {
        Runner check(results, "existence", suite_filter);

        check("certificate-is-consistent", [&](CheckResult& r) {
            double worst = 0.0;
            for (const auto& [p, k] : {std::pair{Params{5, 4, 1.0}, 3},
                                       std::pair{Params{3, 2, 0.3}, 2}}) {
                const ExistenceCertificate cert = exists_embedded({p, k});
                if (cert.outcome != SolveOutcome::found) { worst = 1.0; continue; }
                if (!(cert.bracket_lo <= cert.C_star && cert.C_star <= cert.bracket_hi))
                    worst = std::max(worst, 1.0);
                worst = std::max(worst, cert.residual);
                const double P_again = period_P(p, cert.C_star, 1e-11);
                worst = std::max(worst, std::fabs(P_again - cert.P_achieved));
                const double lo = std::min(cert.bounds.A, cert.bounds.B);
                const double hi = std::max(cert.bounds.A, cert.bounds.B);
                if (!(cert.target > lo && cert.target < hi))
                    worst = std::max(worst, 1.0);
                for (size_t i = 0; i + 1 < cert.scan.size(); ++i)
                    if (!(cert.scan[i][0] < cert.scan[i + 1][0]))
                        worst = std::max(worst, 1.0);
            }
            r.residual = worst;
            r.pass = worst < 1e-9;
            r.note = brief(worst, "worst certificate defect:");
        });

        check("closed-H-window-matches-inversion", [&](CheckResult& r) {
            // dual route: invert the c0-limit here by direct bisection and
            // compare against the printed upper endpoints
            double worst = 0.0;
            for (const auto& [n, m, k] : {std::array{5, 4, 3}, std::array{6, 4, 4},
                                          std::array{3, 2, 2}, std::array{4, 2, 3},
                                          std::array{2, 1, 2}, std::array{5, 1, 3}}) {
                const double H_hi = admissible_range(n, m, k).second;
                auto f = [&, n = n, m = m, k = k](double H) {
                    return limit_at_c0(Params{n, m, H}) - 2.0 * pi / k;
                };
                const double H_num = num::bracketed_root(f, 1e-8, 1e8, 1e-12);
                worst = std::max(worst, std::fabs(H_num - H_hi) / H_hi);
            }
            r.residual = worst;
            r.pass = worst < 1e-8;
            r.note = brief(worst, "max rel gap closed vs numeric:");
        });

        check("window-endpoints-hit-target", [&](CheckResult& r) {
            double worst = 0.0;
            for (const auto& [n, m, k] : {std::array{5, 4, 3}, std::array{6, 4, 5},
                                          std::array{3, 2, 3}, std::array{4, 1, 4}}) {
                const auto [H_lo, H_hi] = admissible_range(n, m, k);
                if (H_lo > 0.0)
                    worst = std::max(worst,
                                     std::fabs(limit_at_infinity(Params{n, m, H_lo}) -
                                               2.0 * pi / k));
                worst = std::max(worst, std::fabs(limit_at_c0(Params{n, m, H_hi}) -
                                                  2.0 * pi / k));
            }
            r.residual = worst;
            r.pass = worst < 1e-10;
            r.note = brief(worst, "max |limit at endpoint - 2 pi / k|:");
        });

        check("small-H-solutions-exist", [&](CheckResult& r) {
            // every order admits k = 2 solutions (k = 3 where the window
            // demands it) once H is small and positive
            double worst = 0.0;
            for (int m : {1, 2, 3, 5}) {
                const ExistenceCertificate cert = exists_embedded({Params{6, m, 0.05}, 2});
                if (cert.outcome != SolveOutcome::found)
                    worst = std::max(worst, 1.0);
                else
                    worst = std::max(worst, cert.residual);
            }
            r.residual = worst;
            r.pass = worst < 1e-9;
            r.note = brief(worst, "worst residual over m in {1,2,3,5}:");
        });
    }

    // ---- profile ---------------------------------------------------------
    {
        Runner check(results, "profile", suite_filter);

        check("energy-is-conserved", [&](CheckResult& r) {
            double worst = 0.0;
            for (const auto& [p, C] : {std::pair{Params{5, 4, 1.0}, 3.0},
                                       std::pair{Params{3, 2, 0.5}, 3.0}}) {
                const auto samples = integrate_profile(p, C, 10, 64);
                for (const ProfileSample& s : samples)
                    worst = std::max(worst, std::fabs(s.energy_residual) / C);
            }
            r.residual = worst;
            r.pass = worst < 1e-8;
            r.note = brief(worst, "max |energy residual| / C over 10 periods:");
        });

        check("ode-theta-matches-quadrature", [&](CheckResult& r) {
            // dual route for the angular period: dense ODE accumulation vs
            // the singular quadrature
            double worst = 0.0;
            for (const auto& [p, C] : {std::pair{Params{5, 4, 1.0}, 3.0},
                                       std::pair{Params{4, 3, 2.0}, 5.0}}) {
                const auto samples = integrate_profile(p, C, 1, 32);
                const double P_quad = period_P(p, C, 1e-11);
                worst = std::max(worst, std::fabs(samples.back().theta - P_quad) / P_quad);
            }
            r.residual = worst;
            r.pass = worst < 1e-8;
            r.note = brief(worst, "max rel gap over 2 cases:");
        });

        check("theta-integrand-forms-agree", [&](CheckResult& r) {
            // sqrt(1 - r^2 - rdot^2) / (1 - r^2) vs r lambda / (1 - r^2): the
            // two printed forms of the longitude rate, pointwise
            double worst = 0.0;
            const Params p{5, 4, 1.0};
            const auto samples = integrate_profile(p, 3.0, 1, 64, 1e-12);
            for (const ProfileSample& s : samples) {
                const double rdot = s.w_dot / (s.w / s.r); // w' / sqrt(C)
                const double disc = std::max(0.0, 1.0 - s.r * s.r - rdot * rdot);
                worst = std::max(worst, std::fabs(std::sqrt(disc) - s.r * s.lambda) /
                                            (1.0 - s.r * s.r));
            }
            r.residual = worst;
            r.pass = worst < 1e-10;
            r.note = brief(worst, "max pointwise gap over one period:");
        });

        check("orbit-radius-identity", [&](CheckResult& r) {
            // 1 / r^2 = (w'/w)^2 + lambda^2 + 1, the first integral read as
            // the squared radius of the orbit sphere
            double worst = 0.0;
            for (const auto& [p, C] : {std::pair{Params{5, 4, 1.0}, 3.0},
                                       std::pair{Params{3, 2, 0.5}, 2.5}}) {
                const auto samples = integrate_profile(p, C, 2, 48);
                for (const ProfileSample& s : samples) {
                    const double lhs = 1.0 / (s.r * s.r);
                    const double g = s.w_dot / s.w;
                    const double rhs = g * g + s.lambda * s.lambda + 1.0;
                    worst = std::max(worst, std::fabs(lhs - rhs) / lhs);
                }
            }
            r.residual = worst;
            r.pass = worst < 1e-8;
            r.note = brief(worst, "max rel gap over 2 cases:");
        });

        check("w-stays-between-turning-points", [&](CheckResult& r) {
            double worst = 0.0;
            for (const auto& [p, C] : {std::pair{Params{5, 4, 1.0}, 3.0},
                                       std::pair{Params{3, 2, 0.5}, 2.5}}) {
                const RootPair rp = roots(p, C);
                const double span = rp.t2 - rp.t1;
                const auto samples = integrate_profile(p, C, 2, 64);
                for (const ProfileSample& s : samples) {
                    worst = std::max(worst, (rp.t1 - s.w) / span);
                    worst = std::max(worst, (s.w - rp.t2) / span);
                }
                // spp is even, so the half-period sample sits on the far turning point
                worst = std::max(worst, std::fabs(samples[32].w - rp.t2) / span);
                worst = std::max(worst, std::fabs(samples[64].w - rp.t1) / span);
                worst = std::max(worst, std::fabs(samples[64].w_dot) / span);
            }
            r.residual = worst;
            r.pass = worst < 1e-6;
            r.note = brief(worst, "max range/turning defect (span units):");
        });

        check("recovered-curvatures-match", [&](CheckResult& r) {
            // radius-formula curvatures on the per-sample energy shell vs the
            // direct formulas in the profile variable
            double worst = 0.0;
            const Params p{5, 4, 1.0};
            const auto samples = integrate_profile(p, 3.0, 1, 48);
            for (const ProfileSample& s : samples) {
                const double shell = s.energy_residual + 3.0; // w'^2 + w^2 lambda^2 + w^2
                const double sc = 1.0 / std::sqrt(shell);
                const auto [lam, mu] = curvatures_from_radius(
                    s.w * sc, s.w_dot * sc, q_prime(p, s.w) / 2.0 * sc);
                worst = std::max(worst, std::fabs(lam - s.lambda) / s.lambda);
                worst = std::max(worst, std::fabs(mu - s.mu) / std::max(1.0, std::fabs(s.mu)));
            }
            r.residual = worst;
            r.pass = worst < 1e-8;
            r.note = brief(worst, "max rel err over one period:");
        });

        check("constant-curvature-recombines", [&](CheckResult& r) {
            double worst = 0.0;
            for (const auto& [p, C] : {std::pair{Params{5, 4, 1.0}, 3.0},
                                       std::pair{Params{3, 2, 0.5}, 2.5}}) {
                const auto samples = integrate_profile(p, C, 1, 64);
                const ClosureReport rep = closure_check(p, samples, 1);
                worst = std::max(worst, rep.max_Hm_deviation / p.H);
            }
            r.residual = worst;
            r.pass = worst < 1e-8;
            r.note = brief(worst, "max rel H_m deviation along the orbit:");
        });
    }

    return results;
}

} // namespace cmcrot
