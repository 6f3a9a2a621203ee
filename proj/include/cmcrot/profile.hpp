#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "cmcrot/params.hpp"

namespace cmcrot {

// One point of the generating curve on the unit 2-sphere.
struct ProfileSample {
    double s = 0.0;     // arc length
    double w = 0.0;     // profile variable, w = (lambda^m - H_m)^{-1/n}
    double w_dot = 0.0; // dw/ds
    double r = 0.0;     // radius function, r = w / sqrt(C)
    double lambda = 0.0;
    double mu = 0.0;
    double vartheta = 0.0; // colatitude, r = cos(vartheta)
    double theta = 0.0;    // accumulated longitude
    std::array<double, 3> y{0.0, 0.0, 0.0};
    double energy_residual = 0.0; // w'^2 + w^2 lambda^2 + w^2 - C
};

struct ClosureReport {
    double delta_theta = 0.0; // theta(kT) - 2 pi
    double w_mismatch = 0.0;
    double wdot_mismatch = 0.0;
    double max_energy_drift = 0.0;  // max |residual| / C
    double max_Hm_deviation = 0.0;  // max |H_m recombined from curvatures - H_m|
};

struct integration_error : std::runtime_error {
    std::vector<ProfileSample> partial;
    explicit integration_error(const std::string& what, std::vector<ProfileSample> samples)
        : std::runtime_error(what), partial(std::move(samples)) {}
};

// Integrate (w, w', theta) with w'' = q'(w)/2 and theta' = r lambda / (1 - r^2)
// from w(0) = t1, w'(0) = 0 over k_periods full periods, emitting samples at
// uniform arc-length spacing T / samples_per_period via dense interpolation.
std::vector<ProfileSample> integrate_profile(const Params& params, double C,
                                             int k_periods, int samples_per_period,
                                             double ode_tol = 1e-10,
                                             double quad_tol = 1e-10);

// Principal curvatures of a rotational hypersurface from its radius function:
// lambda = +sqrt(1 - r^2 - rdot^2) / r, mu = -(rddot + r) / sqrt(1 - r^2 - rdot^2).
// Orientation is the one with lambda > 0 and a positive longitude integrand
// r lambda / (1 - r^2); flipping the unit normal negates both values.
std::pair<double, double> curvatures_from_radius(double r, double r_dot, double r_ddot);

// Closure diagnostics over samples spanning exactly k periods.
ClosureReport closure_check(const Params& params,
                            const std::vector<ProfileSample>& samples, int k);

// (cos vartheta, sin vartheta cos theta, sin vartheta sin theta); the last
// two components are the unit-disk projection of the curve.
std::array<double, 3> curve_point(double vartheta, double theta);

} // namespace cmcrot
