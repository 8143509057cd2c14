#include "doctest.h"

#include "b2dunkl/dunkl.hpp"
#include "b2dunkl/errors.hpp"
#include "b2dunkl/group.hpp"
#include "b2dunkl/verify.hpp"

#include <cmath>
#include <random>

using namespace b2dunkl;

namespace {

const Params draws[] = {
    {Rational(1, 4), Rational(1, 8)},
    {Rational(-1, 3), Rational(1, 5)},
    {Rational(2, 5), Rational(-1, 10)},
};

// D_i f at x in floating point, straight from the definition: central
// differences for the gradient, reflections applied to values and points.
std::array<double, 2> dunkl_pointwise(int i, const VPoly& f, const Params& p, double x1, double x2)
{
    const double h = 1e-5;
    auto F = [&](double a, double b) {
        auto [u, v] = f.eval(a, b);
        return std::array<double, 2>{u, v};
    };
    std::array<double, 2> out;
    auto plus = i == 1 ? F(x1 + h, x2) : F(x1, x2 + h);
    auto minus = i == 1 ? F(x1 - h, x2) : F(x1, x2 - h);
    for (int a = 0; a < 2; ++a)
        out[a] = (plus[a] - minus[a]) / (2 * h);
    const auto fx = F(x1, x2);
    for (const auto& r : positive_roots()) {
        const double k = r.kappa(p).get_d();
        const auto& s = r.reflection.m;
        const auto xs = r.reflection.apply(std::array<double, 2>{x1, x2});
        const auto fxs = F(xs[0], xs[1]);
        const double ip = x1 * r.v[0] + x2 * r.v[1];
        for (int a = 0; a < 2; ++a) {
            // value vector transforms as s F
            const double sf = s[a][0] * fx[0] + s[a][1] * fx[1];
            const double sfs = s[a][0] * fxs[0] + s[a][1] * fxs[1];
            out[a] += k * r.v[i - 1] * (sf - sfs) / ip;
        }
    }
    return out;
}

} // namespace

TEST_CASE("group has 8 elements, closed, left action")
{
    const auto& G = GroupElement::all();
    CHECK(G.size() == 8);
    for (const auto& a : G) {
        CHECK(a * a.inverse() == GroupElement::make(GroupId::e));
        for (const auto& b : G) {
            const auto ab = a * b;
            CHECK(std::find(G.begin(), G.end(), ab) != G.end());
        }
    }
    CHECK(GroupElement::reflections().size() == 4);
    for (const auto& s : GroupElement::reflections())
        CHECK(s.is_reflection());
    CHECK(checks::left_action().pass);
}

TEST_CASE("divide_linear rejects a remainder")
{
    VPoly f = VPoly::term(2, 0, 1, 0) - VPoly::term(0, 2, 1, 0); // (x1 - x2)(x1 + x2) t1
    CHECK(divide_linear(f, 1, -1) == VPoly::term(1, 0, 1, 0) + VPoly::term(0, 1, 1, 0));
    CHECK_THROWS_AS(divide_linear(VPoly::term(2, 0, 1, 0), 1, 1), InternalError);
}

TEST_CASE("Dunkl operator matches a pointwise floating-point evaluation")
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(0.2, 1.3);
    for (const auto& p : draws)
        for (int rep = 0; rep < 5; ++rep) {
            VPoly f = random_vpoly(rng, 4);
            const double x1 = U(rng), x2 = -U(rng) * 0.7;
            for (int i = 1; i <= 2; ++i) {
                auto exact = dunkl(i, f, p).eval(x1, x2);
                auto num = dunkl_pointwise(i, f, p, x1, x2);
                const double scale = 1 + std::abs(exact.first) + std::abs(exact.second);
                CHECK(std::abs(exact.first - num[0]) / scale < 1e-6);
                CHECK(std::abs(exact.second - num[1]) / scale < 1e-6);
            }
        }
}

TEST_CASE("Dunkl at k = 0 is the gradient")
{
    std::mt19937 rng(6);
    const Params zero;
    for (int rep = 0; rep < 5; ++rep) {
        VPoly f = random_vpoly(rng, 5);
        CHECK(dunkl(1, f, zero) == partial(1, f));
        CHECK(dunkl(2, f, zero) == partial(2, f));
    }
}

TEST_CASE("Dunkl lowers degree and kills constants of the 2-dim representation")
{
    const Params p(Rational(1, 4), Rational(1, 8));
    // D_i t_j = sum k v_i (s t_j - s t_j)/<x,v> = 0
    CHECK(dunkl(1, VPoly::t1(), p).is_zero());
    CHECK(dunkl(2, VPoly::t2(), p).is_zero());
    std::mt19937 rng(7);
    VPoly f = random_vpoly(rng, 5, true);
    auto d = dunkl(1, f, p).homogeneous_degree();
    if (d)
        CHECK(*d == 4);
}

TEST_CASE("algebra properties over parameter draws")
{
    for (const auto& p : draws) {
        CHECK(checks::commutation(p, 5).pass);
        CHECK(checks::dunkl_commute(p, 6, 8).pass);
        CHECK(checks::dunkl_equivariance(p, 4, 3).pass);
        CHECK(checks::euler_relation(p, 6, 8).pass);
    }
}
