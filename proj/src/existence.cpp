#include "cmcrot/existence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <thread>

#include "cmcrot/numerics.hpp"
#include "cmcrot/potential.hpp"

namespace cmcrot {

namespace {

constexpr double pi = std::numbers::pi;

double admissible_H_hi_numeric(int n, int m, int k) {
    const double target = 2.0 * pi / k;
    auto f = [&](double logH) {
        return limit_at_c0(Params{n, m, std::exp(logH)}) - target;
    };
    // B is decreasing in H from sqrt(2) pi (> target for every k >= 2) toward 0
    double lo = -8.0 * std::numbers::ln10;
    double hi = 8.0 * std::numbers::ln10;
    if (!(f(lo) > 0.0))
        throw std::runtime_error("admissible_range: lower bracket for the c0-limit inversion failed");
    int guard = 0;
    while (f(hi) >= 0.0) {
        hi += 8.0 * std::numbers::ln10;
        if (++guard > 80)
            throw std::runtime_error("admissible_range: c0-limit never drops below 2 pi / k");
    }
    return std::exp(num::bracketed_root(f, lo, hi, 1e-13));
}

} // namespace

std::pair<double, double> admissible_range(int n, int m, int k) {
    Params{n, m, 1.0}.validate();
    const int k_min = (m == 4) ? 3 : 2;
    if (k < k_min)
        throw std::invalid_argument("admissible_range: k must be >= " + std::to_string(k_min) +
                                    " for m = " + std::to_string(m));
    if (m == 4 && n < 5)
        throw std::invalid_argument("admissible_range: the m = 4 upper endpoint requires n >= 5");

    const double H_lo = (k == 2) ? 0.0 : std::pow(1.0 / std::tan(pi / k), m);
    double H_hi;
    switch (m) {
        case 1:
            H_hi = (static_cast<double>(k) * k - 2.0) * std::sqrt(n - 1.0) /
                   (n * std::sqrt(static_cast<double>(k) * k - 1.0));
            break;
        case 2:
            H_hi = (static_cast<double>(k) * k - 2.0) / n;
            break;
        case 4:
            H_hi = (std::pow(static_cast<double>(k), 4) - 4.0) / (n * (n - 4.0));
            break;
        default:
            H_hi = admissible_H_hi_numeric(n, m, k);
            break;
    }
    // an empty interval (H_lo >= H_hi) is a valid "no certified range" answer
    return {H_lo, H_hi};
}

ExistenceCertificate solve_for_period(const Params& params, double target,
                                      double C_max, double residual_tol,
                                      double quad_tol) {
    params.validate();
    if (!(params.H > 0.0))
        throw std::invalid_argument("solve_for_period: H_m must be positive");
    if (!(target > 0.0 && target < 2.0 * pi))
        throw std::invalid_argument("solve_for_period: target period must lie in (0, 2 pi)");

    const CriticalData cd = critical_point(params);
    if (!(C_max > 0.0)) C_max = 1e8 * cd.c0;

    ExistenceCertificate cert;
    cert.target = target;
    cert.bounds = bounds(params);

    std::vector<double> grid;
    for (double C = cd.c0 * (1.0 + 1e-4); C <= C_max; C *= 1.5)
        grid.push_back(C);
    if (grid.empty())
        throw std::invalid_argument("solve_for_period: C_max leaves no room above c0");

    // the samples are independent period evaluations; map them in parallel
    const size_t workers = std::max<size_t>(1, std::min<size_t>(
        grid.size(), std::thread::hardware_concurrency()));
    std::vector<double> P(grid.size());
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (size_t t = 0; t < workers; ++t)
        futs.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
                P[i] = period_P(params, grid[i], quad_tol);
        }));
    for (auto& f : futs) f.get();

    cert.scan.reserve(grid.size());
    for (size_t i = 0; i < grid.size(); ++i)
        cert.scan.push_back({grid[i], P[i]});

    size_t hit = grid.size();
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double f0 = P[i] - target, f1 = P[i + 1] - target;
        if (f0 == 0.0 || (f0 > 0.0) != (f1 > 0.0)) {
            hit = i;
            break;
        }
    }
    if (hit == grid.size() && !grid.empty() && P.back() == target) hit = grid.size() - 1;

    if (hit == grid.size()) {
        const auto [Pmin, Pmax] = std::minmax_element(P.begin(), P.end());
        const double lo_b = std::min(cert.bounds.A, cert.bounds.B);
        const double hi_b = std::max(cert.bounds.A, cert.bounds.B);
        const bool outside_samples = target < *Pmin || target > *Pmax;
        const bool outside_limits = target <= lo_b || target >= hi_b;
        cert.outcome = (outside_samples && outside_limits) ? SolveOutcome::unreachable
                                                           : SolveOutcome::not_found;
        return cert;
    }

    const double refine_tol = std::min(quad_tol, 1e-11);
    auto f = [&](double C) { return period_P(params, C, refine_tol) - target; };
    const double lo = grid[hit];
    const double hi = grid[std::min(hit + 1, grid.size() - 1)];
    cert.bracket_lo = lo;
    cert.bracket_hi = hi;
    cert.C_star = (lo == hi) ? lo : num::bracketed_root(f, lo, hi, 5e-14);
    cert.P_achieved = period_P(params, cert.C_star, refine_tol);
    cert.residual = std::fabs(cert.P_achieved - target);
    if (cert.residual > residual_tol) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", cert.residual);
        throw std::runtime_error(std::string("solve_for_period: bisection stalled at residual ") + buf);
    }
    cert.outcome = SolveOutcome::found;
    return cert;
}

ExistenceCertificate exists_embedded(const ExistenceQuery& query, double C_max,
                                     double residual_tol, double quad_tol) {
    query.validate();
    return solve_for_period(query.params, 2.0 * pi / query.k, C_max, residual_tol, quad_tol);
}

} // namespace cmcrot
