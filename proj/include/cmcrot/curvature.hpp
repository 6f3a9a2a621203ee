#pragma once

#include <vector>

#include "cmcrot/params.hpp"

namespace cmcrot {

struct CurvatureReport {
    double H = 0.0; // mean curvature
    double S = 0.0; // squared norm of the second fundamental form
    double R = 0.0; // scalar curvature, R = n(n-1) + n^2 H^2 - S
};

// C(n, k) as a double, exact for every n that fits a principal-curvature list.
double binomial(int n, int k);

// e_k of the given values via the one-pass product recurrence
// (coefficient extraction of prod(x + lambda_i)).
double elementary_symmetric(const std::vector<double>& lambdas, int k);

// H_m = e_m(lambda) / C(n, m).
double mth_mean_curvature(const std::vector<double>& lambdas, int m);

// mu = (n H_m - (n-m) lambda^m) / (m lambda^{m-1}); the simple principal
// curvature paired with an (n-1)-fold lambda so that the list has H_m.
double mu_from_lambda(const Params& params, double lambda);

// H = mean of lambda_i, S = sum lambda_i^2, R = n(n-1) + n^2 H^2 - S.
CurvatureReport scalar_curvature(int n, const std::vector<double>& lambdas);

// H_2 = (R - n(n-1)) / (n(n-1)).
double h2_from_scalar(double R, int n);

} // namespace cmcrot
