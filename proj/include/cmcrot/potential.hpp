#pragma once

#include <optional>

#include "cmcrot/params.hpp"

namespace cmcrot {

// Critical data of q: the unique positive critical point v0, the energy
// threshold c0 (q(v0) = C - c0), and the harmonic constant a (q''(v0) = -2a).
struct CriticalData {
    double v0 = 0.0;
    double c0 = 0.0;
    double a = 0.0;
};

// The two positive roots of q(.; C); w oscillates in [t1, t2].
struct RootPair {
    double t1 = 0.0;
    double t2 = 0.0;
    double C = 0.0;
};

// log(v^{-n} + H), arranged so neither v^{-n} nor v^{n} is formed directly.
double log_vn_plus_H(int n, double H, double v);

// lambda = (v^{-n} + H)^{1/m}, the principal curvature at profile value v.
double lambda_of_v(const Params& params, double v);

// q(v) = C - v^2 (v^{-n} + H)^{2/m} - v^2.
double q_eval(const Params& params, double C, double v);

// q'(v) = 2v { lambda^{2-m} [ ((n-m)/m) v^{-n} - H ] - 1 }; C-independent.
double q_prime(const Params& params, double v);

// q''(v) = -2 - (2/m^2) lambda^{2-2m} [ (2n-m)(n-m) v^{-2n}
//          + m (n^2 - 3n + 2m) H v^{-n} + m^2 H^2 ]; always < -2.
double q_double_prime(const Params& params, double v);

// v0 by bracketed root-finding on q', then c0 and a from it.
CriticalData critical_point(const Params& params, double root_tol = 1e-12);

// Closed forms where available: m = 2, m = 4 (with the removable H = 1
// singularity dispatched separately), and the H -> 0 limit. Returns nullopt
// for parameter combinations with no printed closed form.
std::optional<CriticalData> critical_closed_form(const Params& params);

// Turning points at energy C > c0; throws std::domain_error otherwise.
RootPair roots(const Params& params, double C, double root_tol = 1e-12);

} // namespace cmcrot
