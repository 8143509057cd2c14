#include "doctest.h"

#include "b2dunkl/errors.hpp"
#include "b2dunkl/special.hpp"

#include <cmath>
#include <numbers>

using namespace b2dunkl;

TEST_CASE("gamma")
{
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2 * std::sqrt(std::numbers::pi)).epsilon(1e-15));
    CHECK_THROWS_AS(gamma_fn(0.0), PoleError);
    CHECK_THROWS_AS(gamma_fn(-3.0), PoleError);
    CHECK(rgamma(-2.0) == 0.0);
    CHECK(rgamma(4.0) == doctest::Approx(1.0 / 6));
}

TEST_CASE("2F1 against elementary closed forms")
{
    for (double s : {0.1, 0.45, 0.6, 0.9, 0.99}) {
        // F(a, b; b; s) = (1 - s)^-a
        CHECK(gauss_2f1(0.3, 0.7, 0.7, s) == doctest::Approx(std::pow(1 - s, -0.3)).epsilon(1e-13));
        // F(1/2, 1/2; 3/2; z^2) = asin(z) / z
        const double z = std::sqrt(s);
        CHECK(gauss_2f1(0.5, 0.5, 1.5, s) == doctest::Approx(std::asin(z) / z).epsilon(1e-13));
        // F(a, a + 1/2; 2a + 1; 1 - u^2) = ((1 + u)/2)^-2a
        const double u = std::sqrt(1 - s), a = 0.35;
        CHECK(gauss_2f1(a, a + 0.5, 2 * a + 1, s) == doctest::Approx(std::pow((1 + u) / 2, -2 * a)).epsilon(1e-13));
    }
    // integer c - a - b falls back to the series: F(1, 1; 2; s) = -log(1 - s)/s
    CHECK(gauss_2f1(1.0, 1.0, 2.0, 0.8) == doctest::Approx(-std::log(0.2) / 0.8).epsilon(1e-12));
}

TEST_CASE("2F1 long double")
{
    const long double s = 0.7L;
    CHECK(double(gauss_2f1(0.3L, 0.7L, 0.7L, s)) == doctest::Approx(std::pow(0.3, -0.3)).epsilon(1e-15));
}

TEST_CASE("2F1 domain")
{
    CHECK_THROWS_AS(gauss_2f1(0.3, 0.2, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(gauss_2f1(0.3, 0.2, 0.5, -0.1), DomainError);
    CHECK_THROWS_AS(gauss_2f1(0.3, 0.2, -2.0, 0.3), PoleError);
}
