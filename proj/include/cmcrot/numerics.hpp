#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

namespace cmcrot::num {

// Root of f on [lo, hi] with f(lo), f(hi) of opposite sign, refined until the
// bracket is narrower than rel_tol relative to the abscissa.
template <typename F>
double bracketed_root(F&& f, double lo, double hi, double rel_tol = 1e-12,
                      std::uintmax_t max_iter = 200) {
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::runtime_error("bracketed_root: endpoints do not straddle a root");
    auto tol = [rel_tol](double a, double b) {
        return std::fabs(b - a) <= rel_tol * std::min(std::fabs(a), std::fabs(b));
    };
    std::uintmax_t iters = max_iter;
    auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
    return 0.5 * (r.first + r.second);
}

// Adaptive Gauss-Kronrod on [a, b] to the requested relative tolerance, with a
// double-exponential fallback when the error estimate misses the target
// (near-degenerate integrands at C close to c0). A fallback result whose own
// error estimate is still poor is rejected loudly: returning it would poison
// downstream root finds with noise far above the advertised tolerance.
template <typename F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10) {
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, 15, rel_tol, &err);
    if (err <= rel_tol * std::max(1.0, std::fabs(v))) return v;
    boost::math::quadrature::tanh_sinh<double> ts;
    double ts_err = 0.0;
    double l1 = 0.0;
    const double w = ts.integrate(f, a, b, rel_tol, &ts_err, &l1);
    if (ts_err > 100.0 * rel_tol)
        throw std::runtime_error("integrate: quadrature failed to reach the tolerance");
    return w;
}

} // namespace cmcrot::num
