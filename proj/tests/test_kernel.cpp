#include "doctest.h"

#include "b2dunkl/errors.hpp"
#include "b2dunkl/harmonic.hpp"
#include "b2dunkl/kernel.hpp"
#include "b2dunkl/verify.hpp"

#include <cmath>
#include <numbers>

using namespace b2dunkl;

TEST_CASE("kernel suite")
{
    const std::array<Rational, 2> y{Rational(1, 3), Rational(-2, 5)};
    for (const Params& p : {Params(Rational(1, 4), Rational(1, 8)), Params(Rational(-1, 3), Rational(1, 5))}) {
        CHECK(checks::kernel_reproduction(p, 5, y).pass);
        CHECK(checks::kernel_intertwining(p, 4, y).pass);
        CHECK(checks::kernel_equivariance(p, 3).pass);
        CHECK(checks::kernel_truncation(p).pass);
        CHECK(checks::beta_bound(p).pass);
    }
    CHECK(checks::nu_limit(Params(Rational(1, 4), Rational(1, 8))).pass);
}

TEST_CASE("point values of the recurrence match the polynomials")
{
    const Params p(Rational(1, 4), Rational(1, 8));
    const double x1 = 0.7, x2 = -0.3;
    auto v = basis_values<double>(9, x1, x2, 0.375, -0.125);
    for (int n = 1; n <= 9; ++n)
        for (int i = 1; i <= 4; ++i) {
            auto [a, b] = basis_poly(n, i, p).eval(x1, x2);
            CHECK(v[n][i - 1][0] == doctest::Approx(a).epsilon(1e-13));
            CHECK(v[n][i - 1][1] == doctest::Approx(b).epsilon(1e-13));
        }
}

TEST_CASE("floating-point P_n agrees with the exact kernel")
{
    const Params p(Rational(-1, 3), Rational(1, 5));
    const std::array<Rational, 2> x{Rational(1, 2), Rational(3, 4)}, y{Rational(-2, 3), Rational(1, 5)};
    const KernelEvaluator ev(p, 8);
    auto P = ev.P_values({0.5, 0.75}, {-2.0 / 3, 0.2});
    for (int n = 0; n <= 8; ++n) {
        auto exact = kernel_P(n, x, y, p);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                CHECK(P[n].e[a][b] == doctest::Approx(exact.e[a][b].get_d()).epsilon(1e-12));
    }
}

TEST_CASE("at k = 0 the kernel is exp(<x, y>) times the identity")
{
    const KernelEvaluator ev(Params(), 60);
    const std::array<double, 2> x{0.8, -1.1}, y{1.3, 0.4};
    auto r = ev.truncated(x, y, KernelMode::real);
    const double e = std::exp(x[0] * y[0] + x[1] * y[1]);
    CHECK(r.value.e[0][0].real() == doctest::Approx(e).epsilon(1e-13));
    CHECK(r.value.e[1][1].real() == doctest::Approx(e).epsilon(1e-13));
    CHECK(std::abs(r.value.e[0][1]) < 1e-13);
    // complex rotation gives exp(-i <x, y>)
    auto c = ev.truncated(x, y, KernelMode::complex_y_rotation);
    const double ip = x[0] * y[0] + x[1] * y[1];
    CHECK(c.value.e[0][0].real() == doctest::Approx(std::cos(ip)).epsilon(1e-13));
    CHECK(c.value.e[0][0].imag() == doctest::Approx(-std::sin(ip)).epsilon(1e-13));
}

TEST_CASE("radical parameters have no kernel")
{
    CHECK_THROWS_AS(kernel_P_rows(1, {Rational(1), Rational(0)}, Params(Rational(1, 4), Rational(1, 4))),
                    ZeroNorm);
}

TEST_CASE("omega")
{
    CHECK(omega(1.3, 0) == doctest::Approx(1.0));
    // Gamma(1)^2 / (Gamma(3/2) Gamma(1/2)) = 2/pi
    CHECK(omega(1.0, 0.5) == doctest::Approx(2 / std::numbers::pi).epsilon(1e-14));
    CHECK_THROWS_AS(omega(0.0, 0.1), DomainError);
}
