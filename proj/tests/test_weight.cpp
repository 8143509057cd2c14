#include "doctest.h"

#include "b2dunkl/errors.hpp"
#include "b2dunkl/verify.hpp"
#include "b2dunkl/weight.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace b2dunkl;

namespace {

WeightParams wparams(double k0, double k1)
{
    WeightParams wp;
    wp.k0 = k0;
    wp.k1 = k1;
    return wp;
}

const WeightParams draws[] = {wparams(0.3, 0.1), wparams(-0.2, 0.15), wparams(0.1, -0.35),
                              wparams(0.45, 0.04), wparams(-0.05, -0.3)};

} // namespace

TEST_CASE("weight properties over parameter draws")
{
    for (const auto& wp : draws) {
        CAPTURE(wp.k0);
        CAPTURE(wp.k1);
        CHECK(checks::det_L(wp, 200).pass);
        CHECK(checks::branch_agreement(wp).pass);
        CHECK(checks::ode_residual(wp).pass);
        CHECK(checks::pde_residual(wp, 20).pass);
        CHECK(checks::positive_definite(wp, 300).pass);
        CHECK(checks::K_equivariance(wp).pass);
        CHECK(checks::K_homogeneity(wp).pass);
        CHECK(checks::det_K(wp).pass);
    }
}

TEST_CASE("boundary exponents")
{
    for (const auto& wp : {wparams(0.3, 0.1), wparams(-0.2, 0.15), wparams(0.1, -0.3)}) {
        CHECK(checks::boundary_slope_axis(wp).pass);
        CHECK(checks::boundary_slope_diagonal(wp).pass);
    }
    // the single-term exponent 1 + 2k0 only describes k0 <= 0
    CHECK(!checks::boundary_slope_diagonal(wparams(0.3, 0.1), true).pass);
    CHECK(checks::boundary_slope_diagonal(wparams(-0.2, 0.15), true).pass);
}

TEST_CASE("degenerate closed forms need exponent 2k")
{
    for (double k : {0.1, 0.2, -0.3}) {
        CHECK(checks::degenerate_form(Degenerate::k0_zero, k, 2).pass);
        CHECK(checks::degenerate_form(Degenerate::k1_zero, k, 2).pass);
        CHECK(!checks::degenerate_form(Degenerate::k0_zero, k, 1).pass);
        CHECK(!checks::degenerate_form(Degenerate::k1_zero, k, 1).pass);
    }
}

TEST_CASE("trivial multiplicity gives c times the identity")
{
    const WeightParams wp;
    const double c = 1 / (2 * std::numbers::pi);
    for (double th : {0.1, 1.0, 2.5, 4.0, 5.9}) {
        Mat2 K = K_angle(th, wp);
        CHECK(K.a11 == doctest::Approx(c).epsilon(1e-15));
        CHECK(K.a22 == doctest::Approx(c).epsilon(1e-15));
        CHECK(std::abs(K.a12) < 1e-15);
    }
}

TEST_CASE("normalization modes")
{
    WeightParams wp = wparams(0.3, 0.1);
    CHECK(wp.c() == doctest::Approx(c_conjecture(0.3, 0.1)));
    wp.c_mode = CMode::unit;
    CHECK(wp.c() == 1.0);
    wp.c_mode = CMode::numeric;
    wp.c_value = 0.25;
    CHECK(wp.c() == 0.25);
}

TEST_CASE("mirrors and validity square")
{
    const WeightParams wp = wparams(0.3, 0.1);
    CHECK_THROWS_AS(K_matrix(1, 0, wp), OnMirror);
    CHECK_THROWS_AS(K_matrix(0, -2, wp), OnMirror);
    CHECK_THROWS_AS(K_matrix(1, 1, wp), OnMirror);
    CHECK_THROWS_AS(K_matrix(-1, 1, wp), OnMirror);
    CHECK_THROWS_AS(K_angle(std::numbers::pi / 4, wp), OnMirror);
    CHECK_THROWS_AS(K_matrix(1, 0.3, wparams(0.5, 0.0)), DomainError);
    CHECK_THROWS_AS(wparams(0.3, 0.25).validate(), DomainError);
    CHECK_NOTHROW(wparams(0.3, 0.19).validate());
}

TEST_CASE("K_panel agrees with K_angle")
{
    const WeightParams wp = wparams(-0.2, 0.15);
    const double w = std::numbers::pi / 4;
    for (int j = 0; j < 8; ++j)
        for (double f : {0.01, 0.3, 0.5, 0.77, 0.999}) {
            Mat2 A = K_panel(j, f * w, (1 - f) * w, wp);
            Mat2 B = K_angle((j + f) * w, wp);
            CHECK((A - B).max_abs() / B.max_abs() < 1e-11);
        }
}

TEST_CASE("extended precision agrees with standard")
{
    WeightParams a = wparams(0.3, 0.1), b = a;
    b.precision = Precision::extended;
    for (double u : {0.05, 0.5, 0.7, 0.72, 0.95, 0.9999}) {
        CHECK((L_matrix(u, a) - L_matrix(u, b)).max_abs() < 1e-12 * L_matrix(u, b).max_abs());
    }
    CHECK(checks::branch_agreement(b).pass);
}

TEST_CASE("weight_sample serial and parallel are bitwise equal")
{
    const auto grid = fundamental_grid(300);
    for (bool conj : {false, true}) {
        auto s = weight_sample(grid, draws[0], conj, Execution::serial);
        auto p = weight_sample(grid, draws[0], conj, Execution::parallel);
        REQUIRE(s.size() == p.size());
        for (size_t j = 0; j < s.size(); ++j) {
            REQUIRE(s[j].k.has_value());
            CHECK(std::memcmp(&*s[j].k, &*p[j].k, sizeof(Mat2)) == 0);
        }
    }
}

TEST_CASE("fundamental grid")
{
    auto g = fundamental_grid(4);
    REQUIRE(g.size() == 4);
    CHECK(g[0] == doctest::Approx(std::numbers::pi / 32));
    CHECK(g[3] < std::numbers::pi / 4);
    CHECK_THROWS_AS(fundamental_grid(0), UsageError);
}

TEST_CASE("CSV round trip including mirror rows")
{
    std::vector<double> th = {0.1, std::numbers::pi / 4, 0.5};
    auto rows = weight_sample(th, draws[1]);
    CHECK(!rows[1].k.has_value());
    std::stringstream ss;
    write_weight_csv(ss, rows, {"k0=-0.2"});
    auto back = read_weight_csv(ss);
    REQUIRE(back.size() == rows.size());
    for (size_t j = 0; j < rows.size(); ++j) {
        CHECK(back[j].theta == rows[j].theta);
        CHECK(back[j].k.has_value() == rows[j].k.has_value());
        if (rows[j].k) {
            CHECK(back[j].k->a11 == rows[j].k->a11);
            CHECK(back[j].k->a12 == rows[j].k->a12);
            CHECK(back[j].k->a22 == rows[j].k->a22);
        }
    }
}

TEST_CASE("golden weight sample at (0.3, 0.1)")
{
    std::ifstream f(TEST_DATA_DIR "/weight_sample_0.3_0.1.csv");
    REQUIRE(f.good());
    auto golden = read_weight_csv(f);
    REQUIRE(golden.size() == 512);
    auto rows = weight_sample(fundamental_grid(512), wparams(0.3, 0.1));
    for (size_t j = 0; j < rows.size(); ++j) {
        CHECK(rows[j].theta == doctest::Approx(golden[j].theta).epsilon(1e-15));
        const Mat2& a = *rows[j].k;
        const Mat2& b = *golden[j].k;
        CHECK((a - b).max_abs() <= 1e-12 * b.max_abs());
    }
}

TEST_CASE("K is continuous as k0 -> 0")
{
    for (double th : {0.2, 0.6, 0.78, 2.0}) {
        const Mat2 K0 = K_angle(th, wparams(0.0, 0.2));
        for (double k0 : {1e-12, -1e-9, 1e-6}) {
            const Mat2 K = K_angle(th, wparams(k0, 0.2));
            CHECK((K - K0).max_abs() < 1e-4 * K0.max_abs());
        }
    }
}
