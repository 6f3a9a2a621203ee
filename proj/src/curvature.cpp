#include "cmcrot/curvature.hpp"

#include <cmath>
#include <stdexcept>

namespace cmcrot {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double c = 1.0;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

double elementary_symmetric(const std::vector<double>& lambdas, int k) {
    const int n = static_cast<int>(lambdas.size());
    if (k < 0 || k > n)
        throw std::invalid_argument("elementary_symmetric: k out of range");
    if (k == 0) return 1.0;
    // coefficients of prod(x + lambda_i), updated highest order first so each
    // lambda enters every e_j exactly once
    std::vector<double> e(static_cast<size_t>(k) + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::min(i + 1, k); j >= 1; --j)
            e[j] += lambdas[static_cast<size_t>(i)] * e[j - 1];
    return e[static_cast<size_t>(k)];
}

double mth_mean_curvature(const std::vector<double>& lambdas, int m) {
    const int n = static_cast<int>(lambdas.size());
    if (n < 1)
        throw std::invalid_argument("mth_mean_curvature: empty curvature list");
    if (m < 1 || m > n)
        throw std::invalid_argument("mth_mean_curvature: m out of range");
    return elementary_symmetric(lambdas, m) / binomial(n, m);
}

double mu_from_lambda(const Params& params, double lambda) {
    params.validate();
    if (!(lambda > 0.0))
        throw std::invalid_argument("mu_from_lambda: lambda must be positive");
    const int n = params.n, m = params.m;
    const double lam_m = std::pow(lambda, m);
    return (n * params.H - (n - m) * lam_m) / (m * std::pow(lambda, m - 1));
}

CurvatureReport scalar_curvature(int n, const std::vector<double>& lambdas) {
    if (static_cast<int>(lambdas.size()) != n)
        throw std::invalid_argument("scalar_curvature: list length must equal n");
    CurvatureReport rep;
    for (double l : lambdas) {
        rep.H += l;
        rep.S += l * l;
    }
    rep.H /= n;
    rep.R = n * (n - 1.0) + n * static_cast<double>(n) * rep.H * rep.H - rep.S;
    return rep;
}

double h2_from_scalar(double R, int n) {
    if (n < 3)
        throw std::invalid_argument("h2_from_scalar: n must be >= 3");
    return (R - n * (n - 1.0)) / (n * (n - 1.0));
}

} // namespace cmcrot
