#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qphase/quadrature.hpp"

using qphase::integrate_adaptive;
using qphase::QuadratureOptions;

TEST_CASE("polynomial and exponential integrals match antiderivatives") {
    CHECK(integrate_adaptive([](double x) { return x * x * x; }, 0.0, 1.0) ==
          doctest::Approx(0.25).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::exp(-x * x); }, 0.0, 6.0) ==
          doctest::Approx(0.5 * std::sqrt(M_PI) * std::erf(6.0)).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return x * std::exp(-x); }, 0.0, 10.0) ==
          doctest::Approx(1.0 - 11.0 * std::exp(-10.0)).epsilon(1e-12));
}

TEST_CASE("oscillatory integrands converge") {
    const double v = integrate_adaptive([](double x) { return std::cos(50.0 * x); }, 0.0, 5.0);
    CHECK(v == doctest::Approx(std::sin(250.0) / 50.0).epsilon(1e-10));

    const double w =
        integrate_adaptive([](double x) { return std::sin(7.0 * x) * std::sin(7.0 * x); },
                           0.0, 2.0 * M_PI);
    CHECK(w == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("tolerance options are honored") {
    QuadratureOptions opt;
    opt.rel_tol = 1e-6;
    opt.abs_tol = 1e-30;
    const double v = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, opt);
    CHECK(std::fabs(v - 2.0 / 3.0) < 1e-6);
}

TEST_CASE("non-integrable singularity exhausts the interval budget") {
    QuadratureOptions opt;
    opt.max_intervals = 200;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1.0 / x; }, 0.0, 1.0, opt),
                    qphase::QuadratureError);
}

TEST_CASE("non-finite integrand raises DomainError") {
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::exp(1e6 * x); }, 0.0, 2.0),
                    qphase::DomainError);
}
