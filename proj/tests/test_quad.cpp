#include "doctest.h"

#include "b2dunkl/errors.hpp"
#include "b2dunkl/harmonic.hpp"
#include "b2dunkl/quad.hpp"
#include "b2dunkl/verify.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <cstring>
#include <numbers>

using namespace b2dunkl;

TEST_CASE("radial moments")
{
    CHECK(gaussian_moment(0) == doctest::Approx(1.0));
    CHECK(gaussian_moment(1) == doctest::Approx(std::sqrt(std::numbers::pi / 2)));
    CHECK(gaussian_moment(2) == doctest::Approx(2.0));
    CHECK(gaussian_moment(4) == doctest::Approx(8.0));
}

TEST_CASE("angular integration of smooth and endpoint-singular functions")
{
    QuadSpec spec;
    CHECK(angular_integrate([](double t) { return std::cos(t) * std::cos(t); }, spec) ==
          doctest::Approx(std::numbers::pi).epsilon(1e-12));
    // |sin 4t|^-0.4 has integrable singularities at every panel end
    boost::math::quadrature::tanh_sinh<double> ts;
    const double ref = 8 * ts.integrate([](double t) { return std::pow(std::sin(4 * t), -0.4); }, 0.0,
                                        std::numbers::pi / 4);
    const double got = angular_integrate([](double t) { return std::pow(std::abs(std::sin(4 * t)), -0.4); },
                                         spec);
    CHECK(got == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("normalization at k0 = 0 against a one-dimensional integral")
{
    // K11 = c |tan theta|^{2 k1}; int_0^{pi/2} tan^{2a} = pi / (2 cos(pi a))
    for (double k1 : {0.1, -0.3, 0.45}) {
        const double exact = std::cos(std::numbers::pi * k1) / (2 * std::numbers::pi);
        boost::math::quadrature::tanh_sinh<double> ts;
        // fold [pi/4, pi/2] onto [0, pi/4] so both singularities sit at 0
        const double I = 4 * ts.integrate(
                                 [&](double t) {
                                     const double u = std::tan(t);
                                     return std::pow(u, 2 * k1) + std::pow(u, -2 * k1);
                                 },
                                 0.0, std::numbers::pi / 4);
        CHECK(1 / I == doctest::Approx(exact).epsilon(1e-10));
        CHECK(estimate_c(0.0, k1, QuadSpec{}).estimate == doctest::Approx(exact).epsilon(1e-10));
    }
}

TEST_CASE("estimate_c against the conjectured value")
{
    for (auto [k0, k1] : {std::pair{0.3, 0.1}, {-0.2, 0.15}, {0.45, 0.04}}) {
        auto e = estimate_c(k0, k1, QuadSpec{});
        CHECK(e.abs_diff < 1e-8);
        CHECK(e.conjecture == doctest::Approx(c_conjecture(k0, k1)));
    }
    CHECK_THROWS_AS(estimate_c(0.5, 0.1, QuadSpec{}), DomainError);
    auto ext = estimate_c(0.3, 0.1, QuadSpec{}, Precision::extended);
    CHECK(ext.abs_diff < 1e-8);
}

TEST_CASE("quadrature against the exact Gaussian pairing")
{
    for (const Params& p : {Params(Rational(3, 10), Rational(1, 10)), Params(Rational(-1, 5), Rational(3, 20))}) {
        CHECK(checks::oracle_equivalence(p, 2, QuadSpec{}).pass);
        CHECK(checks::gauss_w_invariance(p, QuadSpec{}).pass);
        CHECK(checks::laguerre_transport(p, QuadSpec{}).pass);
    }
}

TEST_CASE("serial and parallel Gram matrices are bitwise equal")
{
    const Params p(Rational(3, 10), Rational(1, 10));
    const WeightParams wp = WeightParams::from(p);
    std::vector<VPoly> fs;
    for (int n = 0; n <= 3; ++n)
        for (int i = 1; i <= (n == 0 ? 2 : 4); ++i)
            fs.push_back(basis_poly(n, i, p));
    QuadSpec s, q;
    s.execution = Execution::serial;
    q.execution = Execution::parallel;
    auto a = gaussian_form_gram(fs, fs, wp, s);
    auto b = gaussian_form_gram(fs, fs, wp, q);
    REQUIRE(a.size() == b.size());
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

TEST_CASE("non-convergence is reported")
{
    QuadSpec spec;
    spec.angular_tol = 1e-30;
    spec.max_levels = 4;
    CHECK_THROWS_AS(angular_integrate([](double t) { return std::pow(std::abs(std::sin(4 * t)), -0.9); }, spec),
                    NonConvergence);
}

TEST_CASE("Fourier eigenfunctions")
{
    const Params p(Rational(1, 4), Rational(1, 8));
    const std::vector<std::array<double, 2>> ys = {{0.6, 0.3}};
    CHECK(checks::fourier(p, QuadSpec{}, ys, LaguerreArg::full, PhaseConvention::two_m_plus_n).pass);
    CHECK(!checks::fourier(p, QuadSpec{}, ys, LaguerreArg::full, PhaseConvention::m_plus_2n).pass);
    CHECK(!checks::fourier(p, QuadSpec{}, ys, LaguerreArg::half, PhaseConvention::two_m_plus_n).pass);
}
