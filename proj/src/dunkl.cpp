#include "b2dunkl/dunkl.hpp"

#include "b2dunkl/errors.hpp"

#include <map>
#include <vector>

namespace b2dunkl {

const std::array<PositiveRoot, 4>& positive_roots()
{
    static const std::array<PositiveRoot, 4> roots = {
        PositiveRoot{{1, -1}, GroupElement::make(GroupId::s12p), true},
        PositiveRoot{{1, 1}, GroupElement::make(GroupId::s12m), true},
        PositiveRoot{{1, 0}, GroupElement::make(GroupId::s1), false},
        PositiveRoot{{0, 1}, GroupElement::make(GroupId::s2), false},
    };
    return roots;
}

namespace {

// Coefficients of one homogeneous component, indexed by the x1 exponent.
using Row = std::vector<Rational>;

Row divide_row(const Row& c, int alpha, int beta, int d)
{
    // (alpha x1 + beta x2) q = c, q of degree d-1 with coefficients q[a] on
    // x1^a x2^(d-1-a). Matching x1^a x2^(d-a): alpha q[a-1] + beta q[a] = c[a].
    Row q(d > 0 ? d : 0, Rational(0));
    if (d == 0) {
        if (c[0] != 0)
            throw InternalError("difference quotient numerator has a constant term");
        return q;
    }
    if (alpha != 0) {
        Rational carry = 0; // q[a] for the current a, q[d] = 0
        for (int a = d; a >= 1; --a) {
            q[a - 1] = (c[a] - beta * carry) / alpha;
            carry = q[a - 1];
        }
        if (beta * q[0] != c[0])
            throw InternalError("difference quotient is not divisible by its linear form");
    } else {
        if (c[d] != 0)
            throw InternalError("difference quotient is not divisible by x2");
        for (int a = 0; a < d; ++a)
            q[a] = c[a] / beta;
    }
    return q;
}

} // namespace

VPoly divide_linear(const VPoly& f, int alpha, int beta)
{
    if (alpha == 0 && beta == 0)
        throw InternalError("division by the zero linear form");
    std::map<int, std::pair<Row, Row>> by_degree;
    for (const auto& [m, c] : f.terms()) {
        int d = m.degree();
        auto& rows = by_degree[d];
        if (rows.first.empty()) {
            rows.first.assign(d + 1, Rational(0));
            rows.second.assign(d + 1, Rational(0));
        }
        rows.first[m.a] = c.c1;
        rows.second[m.a] = c.c2;
    }
    VPoly out;
    for (const auto& [d, rows] : by_degree) {
        Row q1 = divide_row(rows.first, alpha, beta, d);
        Row q2 = divide_row(rows.second, alpha, beta, d);
        for (int a = 0; a < d; ++a)
            out.add_term({a, d - 1 - a}, q1[a], q2[a]);
    }
    return out;
}

VPoly partial(int i, const VPoly& f)
{
    VPoly out;
    for (const auto& [m, c] : f.terms()) {
        int e = i == 1 ? m.a : m.b;
        if (e == 0)
            continue;
        Monomial dm = i == 1 ? Monomial{m.a - 1, m.b} : Monomial{m.a, m.b - 1};
        out.add_term(dm, c.c1 * e, c.c2 * e);
    }
    return out;
}

VPoly dunkl(int i, const VPoly& f, const Params& p)
{
    if (i != 1 && i != 2)
        throw DomainError("Dunkl operator index must be 1 or 2");
    VPoly out = partial(i, f);
    for (const auto& root : positive_roots()) {
        int vi = root.v[i - 1];
        const Rational& k = root.kappa(p);
        if (vi == 0 || k == 0)
            continue;
        VPoly numer = act_on_t(root.reflection, f) - group_act(root.reflection, f);
        if (numer.is_zero())
            continue;
        out += divide_linear(numer, root.v[0], root.v[1]) * (k * vi);
    }
    return out;
}

VPoly laplacian(const VPoly& f, const Params& p)
{
    return dunkl(1, dunkl(1, f, p), p) + dunkl(2, dunkl(2, f, p), p);
}

VPoly exp_laplacian(const VPoly& f, const Rational& s, const Params& p)
{
    VPoly out = f;
    VPoly cur = f;
    Rational coef = 1;
    for (int j = 1; !cur.is_zero(); ++j) {
        cur = laplacian(cur, p);
        coef *= s / j;
        out += cur * coef;
    }
    return out;
}

} // namespace b2dunkl
