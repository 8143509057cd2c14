#include "b2dunkl/group.hpp"

#include "b2dunkl/errors.hpp"

namespace b2dunkl {

GroupElement GroupElement::make(GroupId id)
{
    GroupElement g;
    g.id = id;
    switch (id) {
    case GroupId::e: g.m = {{{1, 0}, {0, 1}}}; break;
    case GroupId::s1: g.m = {{{-1, 0}, {0, 1}}}; break;
    case GroupId::s2: g.m = {{{1, 0}, {0, -1}}}; break;
    case GroupId::s12p: g.m = {{{0, 1}, {1, 0}}}; break;
    case GroupId::s12m: g.m = {{{0, -1}, {-1, 0}}}; break;
    case GroupId::r: g.m = {{{0, 1}, {-1, 0}}}; break;
    case GroupId::r2: g.m = {{{-1, 0}, {0, -1}}}; break;
    case GroupId::r3: g.m = {{{0, -1}, {1, 0}}}; break;
    }
    return g;
}

const std::array<GroupElement, 8>& GroupElement::all()
{
    static const std::array<GroupElement, 8> elems = {
        make(GroupId::e),    make(GroupId::s1), make(GroupId::s2), make(GroupId::s12p),
        make(GroupId::s12m), make(GroupId::r),  make(GroupId::r2), make(GroupId::r3)};
    return elems;
}

const std::array<GroupElement, 4>& GroupElement::reflections()
{
    static const std::array<GroupElement, 4> refl = {make(GroupId::s12p), make(GroupId::s12m),
                                                     make(GroupId::s1), make(GroupId::s2)};
    return refl;
}

std::string_view GroupElement::name() const
{
    switch (id) {
    case GroupId::e: return "e";
    case GroupId::s1: return "s1";
    case GroupId::s2: return "s2";
    case GroupId::s12p: return "s12+";
    case GroupId::s12m: return "s12-";
    case GroupId::r: return "r";
    case GroupId::r2: return "r2";
    case GroupId::r3: return "r3";
    }
    return "?";
}

GroupElement GroupElement::operator*(const GroupElement& o) const
{
    std::array<std::array<int, 2>, 2> p{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            p[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
    for (const auto& g : all())
        if (g.m == p)
            return g;
    throw InternalError("group product left the group");
}

GroupElement GroupElement::inverse() const
{
    std::array<std::array<int, 2>, 2> t{{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
    for (const auto& g : all())
        if (g.m == t)
            return g;
    throw InternalError("inverse left the group");
}

VPoly act_on_x(const GroupElement& w, const VPoly& f)
{
    // x w = (x1 w11 + x2 w21, x1 w12 + x2 w22); each entry is +-x_k.
    auto image = [&](int col) {
        return w.m[0][col] != 0 ? std::pair{0, w.m[0][col]} : std::pair{1, w.m[1][col]};
    };
    const auto [v1, s1] = image(0);
    const auto [v2, s2] = image(1);
    VPoly out;
    for (const auto& [mono, c] : f.terms()) {
        int e[2] = {0, 0};
        e[v1] += mono.a;
        e[v2] += mono.b;
        int sign = ((mono.a % 2 && s1 < 0) != (mono.b % 2 && s2 < 0)) ? -1 : 1;
        out.add_term({e[0], e[1]}, sign * c.c1, sign * c.c2);
    }
    return out;
}

VPoly act_on_t(const GroupElement& w, const VPoly& f)
{
    // f(x, tw) = sum_j f_j(x) (tw)_j = sum_i t_i sum_j w_ij f_j(x).
    VPoly out;
    for (const auto& [mono, c] : f.terms()) {
        Rational n1 = w.m[0][0] * c.c1 + w.m[0][1] * c.c2;
        Rational n2 = w.m[1][0] * c.c1 + w.m[1][1] * c.c2;
        out.add_term(mono, n1, n2);
    }
    return out;
}

VPoly group_act(const GroupElement& w, const VPoly& f) { return act_on_t(w, act_on_x(w, f)); }

} // namespace b2dunkl
