#include <doctest.h>

#include <cmath>

#include "cmcrot/potential.hpp"

using namespace cmcrot;

TEST_CASE("log of v^-n + H survives extreme magnitudes") {
    // moderate: plain arithmetic agrees
    CHECK(std::exp(log_vn_plus_H(5, 1.0, 2.0)) == doctest::Approx(1.03125).epsilon(1e-15));
    CHECK(std::exp(log_vn_plus_H(3, 0.5, 0.7)) ==
          doctest::Approx(std::pow(0.7, -3) + 0.5).epsilon(1e-15));
    // tiny v: the H term is invisible, log ~ -n log v, far beyond double range
    CHECK(log_vn_plus_H(5, 1.0, 1e-60) ==
          doctest::Approx(-5.0 * std::log(1e-60)).epsilon(1e-15));
    // huge v: the v^-n term is invisible, log ~ log H
    CHECK(std::fabs(log_vn_plus_H(5, 1.0, 1e60)) < 1e-250);
    CHECK(log_vn_plus_H(4, 3.0, 1e60) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
    // H = 0 is exactly -n log v
    CHECK(log_vn_plus_H(7, 0.0, 3.0) == -7.0 * std::log(3.0));
}

TEST_CASE("potential and derivatives at a hand-computed point") {
    const Params p{5, 4, 1.0};
    // lambda(1)^2 = (1 + 1)^{1/2}
    CHECK(lambda_of_v(p, 1.0) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-15));
    CHECK(q_eval(p, 10.0, 1.0) ==
          doctest::Approx(10.0 - std::sqrt(2.0) - 1.0).epsilon(1e-15));
    // q'(1) = 2 (2^{-1/2} (1/4 - 1) - 1)
    CHECK(q_prime(p, 1.0) ==
          doctest::Approx(2.0 * (-0.75 / std::sqrt(2.0) - 1.0)).epsilon(1e-14));
    // q''(1) = -2 - (2/16) 2^{-3/2} (6 + 72 + 16)
    CHECK(q_double_prime(p, 1.0) ==
          doctest::Approx(-2.0 - 0.125 * 94.0 * std::pow(2.0, -1.5)).epsilon(1e-14));
    CHECK_THROWS_AS(q_eval(p, 10.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(q_prime(p, -1.0), std::invalid_argument);
}

TEST_CASE("critical data for the reference geometry") {
    const Params p{5, 4, 1.0};
    const CriticalData cd = critical_point(p);
    CHECK(cd.v0 == doctest::Approx(0.52961192052440609).epsilon(1e-12));
    CHECK(cd.c0 == doctest::Approx(1.6829327181692992).epsilon(1e-12));
    CHECK(cd.a == doctest::Approx(3.6).epsilon(1e-11));
    // q has its maximum there: at energy c0 the potential just touches zero
    CHECK(std::fabs(q_eval(p, cd.c0, cd.v0)) < 1e-12);
    CHECK(std::fabs(q_prime(p, cd.v0)) < 1e-10);
    CHECK(q_double_prime(p, cd.v0) == doctest::Approx(-2.0 * cd.a).epsilon(1e-11));
}

TEST_CASE("closed forms match the root-finder") {
    auto agree = [](const Params& p, double tol) {
        const auto cf = critical_closed_form(p);
        REQUIRE(cf.has_value());
        const CriticalData cd = critical_point(p, 1e-14);
        CHECK(cf->v0 == doctest::Approx(cd.v0).epsilon(tol));
        CHECK(cf->c0 == doctest::Approx(cd.c0).epsilon(tol));
        CHECK(cf->a == doctest::Approx(cd.a).epsilon(tol));
    };
    agree(Params{5, 4, 1.0}, 1e-10);  // the removable H = 1 branch
    agree(Params{6, 4, 0.5}, 1e-10);  // generic H < 1
    agree(Params{7, 4, 2.0}, 1e-10);  // generic H > 1
    agree(Params{3, 2, 1.0}, 1e-10);
    agree(Params{8, 2, 0.1}, 1e-10);
    agree(Params{5, 4, 0.0}, 1e-10);  // vanishing curvature limit
    agree(Params{6, 3, 0.0}, 1e-10);

    // m = 2 closed forms directly
    const auto cf32 = critical_closed_form(Params{3, 2, 1.0});
    CHECK(cf32->v0 == doctest::Approx(0.6299605249474366).epsilon(1e-15));
    CHECK(cf32->c0 == doctest::Approx(2.381101577952299).epsilon(1e-15));
    CHECK(cf32->a == 6.0);

    // no printed closed form for generic odd m with H > 0
    CHECK_FALSE(critical_closed_form(Params{5, 3, 1.0}).has_value());
    CHECK_FALSE(critical_closed_form(Params{4, 1, 0.7}).has_value());
}

TEST_CASE("turning points at a reference energy") {
    const Params p{5, 4, 1.0};
    const RootPair rp = roots(p, 10.0);
    CHECK(rp.t1 == doctest::Approx(0.01000020001200096).epsilon(1e-11));
    CHECK(rp.t2 == doctest::Approx(2.2310511062501956).epsilon(1e-11));
    CHECK(rp.C == 10.0);
    CHECK(std::fabs(q_eval(p, 10.0, rp.t1)) < 1e-8);
    CHECK(std::fabs(q_eval(p, 10.0, rp.t2)) < 1e-8);
    CHECK(q_eval(p, 10.0, 0.5 * (rp.t1 + rp.t2)) > 0.0);

    const CriticalData cd = critical_point(p);
    CHECK_THROWS_AS(roots(p, cd.c0), std::domain_error);
    CHECK_THROWS_AS(roots(p, 0.5 * cd.c0), std::domain_error);
    // barely above threshold the roots bracket v0 tightly
    const RootPair tight = roots(p, cd.c0 * (1.0 + 1e-10));
    CHECK(tight.t1 < cd.v0);
    CHECK(tight.t2 > cd.v0);
    CHECK(tight.t2 - tight.t1 < 1e-4);
}
