#pragma once

#include <array>
#include <vector>

#include "cmcrot/params.hpp"
#include "cmcrot/period.hpp"

namespace cmcrot {

// A closure target: find C with angular period P(C) = 2 pi / k.
struct ExistenceQuery {
    Params params;
    int k = 0;

    void validate() const {
        params.validate();
        const int k_min = (params.m == 4) ? 3 : 2;
        if (k < k_min)
            throw std::invalid_argument("existence: k must be >= " + std::to_string(k_min) +
                                        " for m = " + std::to_string(params.m));
    }
};

enum class SolveOutcome {
    found,       // certificate with isolating bracket
    not_found,   // scan saw no sign change; table attached for audit
    unreachable, // target outside both the sampled range and the limit interval
};

struct ExistenceCertificate {
    SolveOutcome outcome = SolveOutcome::not_found;
    double C_star = 0.0;
    double P_achieved = 0.0;
    double residual = 0.0; // |P_achieved - target|
    double target = 0.0;
    PeriodBounds bounds;
    double bracket_lo = 0.0; // (C_lo, C_hi) isolating C_star when found
    double bracket_hi = 0.0;
    std::vector<std::array<double, 2>> scan; // sampled (C, P) table
};

// Admissible H interval for winding number k: H_lo always inverts the
// C -> infinity limit (H_lo = 1/tan^m(pi/k), zero at k = 2); H_hi uses the
// printed closed forms for m in {1, 2, 4} and numeric inversion of the
// C -> c0 limit otherwise. An empty interval (H_lo >= H_hi) is returned
// as-is for the caller to report, never thrown.
std::pair<double, double> admissible_range(int n, int m, int k);

// Scan P on the geometric grid C_j = c0 (1 + 1e-4) 1.5^j up to C_max
// (default 1e8 c0 when C_max <= 0), bisect the first sign change of
// P(C) - target down to |P - target| < residual_tol.
ExistenceCertificate solve_for_period(const Params& params, double target,
                                      double C_max = 0.0,
                                      double residual_tol = 1e-9,
                                      double quad_tol = 1e-10);

// Convenience wrapper: target = 2 pi / k.
ExistenceCertificate exists_embedded(const ExistenceQuery& query,
                                     double C_max = 0.0,
                                     double residual_tol = 1e-9,
                                     double quad_tol = 1e-10);

} // namespace cmcrot
