#pragma once

#include <optional>

#include "cmcrot/params.hpp"
#include "cmcrot/potential.hpp"

namespace cmcrot {

// The two analytic limits of the angular period: A as C -> infinity,
// B as C -> c0+.
struct PeriodBounds {
    double A = 0.0;
    double B = 0.0;
};

// Full period of the profile oscillation, T = 2 int_{t1}^{t2} dt / sqrt(q).
double half_period_T(const Params& params, double C, double quad_tol = 1e-10);

// Angular period P = 2 int_{t1}^{t2} sqrt(C) t lambda(t) / ((C - t^2) sqrt(q)) dt,
// evaluated through the cosine substitution and cross-checked against the
// scaled-variable form of the same integral.
double period_P(const Params& params, double C, double quad_tol = 1e-10);

// The two printed integral forms, exposed separately for equivalence checks:
// the direct t-variable form and the x = t/sqrt(C) scaled form.
double period_P_direct(const Params& params, double C, double quad_tol = 1e-10);
double period_P_scaled(const Params& params, double C, double quad_tol = 1e-10);

// B = 2 pi sqrt(c0) / (sqrt(a) sqrt(c0 - v0^2)), from closed critical data.
double limit_at_c0(const Params& params);

// A = 2 arctan(H^{-1/m}); domain error at H = 0 (the limit there is pi).
double limit_at_infinity(const Params& params);

// The specialized printed forms of the C -> c0 limit, where one exists:
// m = 4: 2 pi / (n(n-4) H + 4)^{1/4};  m = 2: 2 pi / sqrt(n H + 2);
// H = 0: sqrt(2) pi.
std::optional<double> limit_at_c0_printed(const Params& params);

PeriodBounds bounds(const Params& params);

} // namespace cmcrot
