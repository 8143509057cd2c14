#include "b2dunkl/forms.hpp"

#include "b2dunkl/dunkl.hpp"
#include "b2dunkl/errors.hpp"
#include "b2dunkl/harmonic.hpp"

#include <map>
#include <set>

namespace b2dunkl {

namespace {

// D1^a D2^b g, built up from smaller exponents and memoized per call.
class DunklPowers {
public:
    DunklPowers(const VPoly& g, const Params& p) : p_(p) { memo_[{0, 0}] = g; }

    const VPoly& get(int a, int b)
    {
        auto it = memo_.find({a, b});
        if (it != memo_.end())
            return it->second;
        VPoly v = a > 0 ? dunkl(1, get(a - 1, b), p_) : dunkl(2, get(a, b - 1), p_);
        return memo_.emplace(std::pair{a, b}, std::move(v)).first->second;
    }

private:
    const Params& p_;
    std::map<std::pair<int, int>, VPoly> memo_;
};

} // namespace

namespace {

Rational contract(const VPoly& f, const std::set<int>& gdegs, DunklPowers& pw)
{
    Rational out = 0;
    for (const auto& [m, c] : f.terms()) {
        // only the degree-|m| part of g survives to a constant
        if (!gdegs.count(m.degree()))
            continue;
        const VPoly& h = pw.get(m.a, m.b);
        auto it = h.terms().find(Monomial{0, 0});
        if (it == h.terms().end())
            continue;
        out += c.c1 * it->second.c1 + c.c2 * it->second.c2;
    }
    return out;
}

std::set<int> degrees_of(const VPoly& g)
{
    std::set<int> d;
    for (const auto& [m, c] : g.terms())
        d.insert(m.degree());
    return d;
}

} // namespace

Rational pair_tau(const VPoly& f, const VPoly& g, const Params& p)
{
    if (f.is_zero() || g.is_zero())
        return 0;
    DunklPowers pw(g, p);
    return contract(f, degrees_of(g), pw);
}

std::vector<Rational> pair_tau_column(const std::vector<VPoly>& fs, const VPoly& g, const Params& p)
{
    std::vector<Rational> out(fs.size(), Rational(0));
    if (g.is_zero())
        return out;
    DunklPowers pw(g, p);
    const auto gd = degrees_of(g);
    for (size_t a = 0; a < fs.size(); ++a)
        out[a] = contract(fs[a], gd, pw);
    return out;
}

Rational pair_gauss(const VPoly& f, const VPoly& g, const Params& p)
{
    const Rational half(1, 2);
    return pair_tau(exp_laplacian(f, half, p), exp_laplacian(g, half, p), p);
}

std::vector<Rational> laguerre_coeffs(int m, int n)
{
    if (m < 0 || n < 0)
        throw DomainError("Laguerre degree and index must be nonnegative");
    // L_m^{(n)}(s) = sum_j (-1)^j C(m+n, m-j) s^j / j!
    std::vector<Rational> out(m + 1);
    for (int j = 0; j <= m; ++j) {
        Rational binom = factorial_q(m + n) / (factorial_q(m - j) * factorial_q(n + j));
        out[j] = binom / factorial_q(j);
        if (j % 2)
            out[j] = -out[j];
    }
    return out;
}

LaguerreBasisElement laguerre_element(int m, int n, int i, const Params& p, LaguerreArg arg)
{
    LaguerreBasisElement e;
    e.m = m;
    e.n = n;
    e.i = i;
    const VPoly base = basis_poly(n, i, p);
    const auto lc = laguerre_coeffs(m, n);
    const Rational scale = arg == LaguerreArg::half ? Rational(1, 2) : Rational(1);
    Rational sp = 1;
    for (int j = 0; j <= m; ++j) {
        e.poly += base.mul_scalar_poly(ScalarPoly::norm_sq_pow(j)) * (lc[j] * sp);
        sp *= scale;
    }
    e.nu_g = pochhammer(Rational(n + 1), m) / factorial_q(m) * norm_pi(n, i, p);
    return e;
}

} // namespace b2dunkl
