#include "b2dunkl/vpoly.hpp"

#include "b2dunkl/errors.hpp"

#include <cmath>
#include <sstream>

namespace b2dunkl {

// ---------------------------------------------------------------- ScalarPoly

ScalarPoly ScalarPoly::constant(const Rational& c) { return monomial(0, 0, c); }

ScalarPoly ScalarPoly::monomial(int a, int b, const Rational& c)
{
    ScalarPoly p;
    p.add_term({a, b}, c);
    return p;
}

ScalarPoly ScalarPoly::norm_sq_pow(int m)
{
    ScalarPoly r2;
    r2.add_term({2, 0}, 1);
    r2.add_term({0, 2}, 1);
    ScalarPoly out = constant(1);
    for (int i = 0; i < m; ++i)
        out = out * r2;
    return out;
}

void ScalarPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

ScalarPoly ScalarPoly::operator+(const ScalarPoly& o) const
{
    ScalarPoly out = *this;
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, c);
    return out;
}

ScalarPoly ScalarPoly::operator-(const ScalarPoly& o) const
{
    ScalarPoly out = *this;
    for (const auto& [m, c] : o.terms_)
        out.add_term(m, -c);
    return out;
}

ScalarPoly ScalarPoly::operator*(const ScalarPoly& o) const
{
    ScalarPoly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            out.add_term({m1.a + m2.a, m1.b + m2.b}, c1 * c2);
    return out;
}

ScalarPoly ScalarPoly::operator*(const Rational& c) const
{
    ScalarPoly out;
    if (c == 0)
        return out;
    for (const auto& [m, v] : terms_)
        out.terms_.emplace(m, v * c);
    return out;
}

Rational ScalarPoly::eval(const Rational& x1, const Rational& x2) const
{
    Rational out = 0;
    for (const auto& [m, c] : terms_)
        out += c * pow_q(x1, m.a) * pow_q(x2, m.b);
    return out;
}

double ScalarPoly::eval(double x1, double x2) const
{
    double out = 0;
    for (const auto& [m, c] : terms_)
        out += c.get_d() * std::pow(x1, m.a) * std::pow(x2, m.b);
    return out;
}

// --------------------------------------------------------------------- VPoly

VPoly VPoly::term(int a, int b, const Rational& c1, const Rational& c2)
{
    VPoly p;
    p.add_term({a, b}, c1, c2);
    return p;
}

VPoly VPoly::from_components(const ScalarPoly& f1, const ScalarPoly& f2)
{
    VPoly out;
    for (const auto& [m, c] : f1.terms())
        out.add_term(m, c, 0);
    for (const auto& [m, c] : f2.terms())
        out.add_term(m, 0, c);
    return out;
}

void VPoly::add_term(const Monomial& m, const Rational& c1, const Rational& c2)
{
    if (c1 == 0 && c2 == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, Coeffs{c1, c2});
    if (!inserted) {
        it->second.c1 += c1;
        it->second.c2 += c2;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::optional<int> VPoly::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first.degree();
}

std::optional<int> VPoly::homogeneous_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    int lo = terms_.begin()->first.degree();
    int hi = terms_.rbegin()->first.degree();
    if (lo != hi)
        return std::nullopt;
    return lo;
}

VPoly VPoly::homogeneous_part(int d) const
{
    VPoly out;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d)
            out.terms_.emplace(m, c);
    return out;
}

ScalarPoly VPoly::component(int i) const
{
    ScalarPoly out;
    for (const auto& [m, c] : terms_)
        out.add_term(m, i == 1 ? c.c1 : c.c2);
    return out;
}

VPoly VPoly::operator+(const VPoly& o) const
{
    VPoly out = *this;
    out += o;
    return out;
}

VPoly VPoly::operator-(const VPoly& o) const
{
    VPoly out = *this;
    out -= o;
    return out;
}

VPoly VPoly::operator-() const
{
    VPoly out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, Coeffs{-c.c1, -c.c2});
    return out;
}

VPoly VPoly::operator*(const Rational& c) const
{
    VPoly out;
    if (c == 0)
        return out;
    for (const auto& [m, v] : terms_)
        out.terms_.emplace(m, Coeffs{v.c1 * c, v.c2 * c});
    return out;
}

VPoly& VPoly::operator+=(const VPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c.c1, c.c2);
    return *this;
}

VPoly& VPoly::operator-=(const VPoly& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c.c1, -c.c2);
    return *this;
}

VPoly VPoly::mul_monomial(int a, int b) const
{
    VPoly out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(Monomial{m.a + a, m.b + b}, c);
    return out;
}

VPoly VPoly::mul_scalar_poly(const ScalarPoly& p) const
{
    VPoly out;
    for (const auto& [ms, s] : p.terms())
        for (const auto& [m, c] : terms_)
            out.add_term({m.a + ms.a, m.b + ms.b}, c.c1 * s, c.c2 * s);
    return out;
}

std::pair<Rational, Rational> VPoly::eval(const Rational& x1, const Rational& x2) const
{
    Rational f1 = 0, f2 = 0;
    for (const auto& [m, c] : terms_) {
        Rational mono = pow_q(x1, m.a) * pow_q(x2, m.b);
        f1 += c.c1 * mono;
        f2 += c.c2 * mono;
    }
    return {f1, f2};
}

std::pair<double, double> VPoly::eval(double x1, double x2) const
{
    double f1 = 0, f2 = 0;
    for (const auto& [m, c] : terms_) {
        double mono = std::pow(x1, m.a) * std::pow(x2, m.b);
        f1 += c.c1.get_d() * mono;
        f2 += c.c2.get_d() * mono;
    }
    return {f1, f2};
}

nlohmann::json VPoly::to_json() const
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : terms_)
        out.push_back({{"a", m.a}, {"b", m.b}, {"c1", to_pq(c.c1)}, {"c2", to_pq(c.c2)}});
    return out;
}

VPoly VPoly::from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw UsageError("polynomial JSON must be an array of terms");
    VPoly out;
    for (const auto& t : j) {
        int a = t.at("a").get<int>();
        int b = t.at("b").get<int>();
        if (a < 0 || b < 0)
            throw UsageError("negative exponent in polynomial JSON");
        out.add_term({a, b}, parse_rational(t.at("c1").get<std::string>()),
                     parse_rational(t.at("c2").get<std::string>()));
    }
    return out;
}

std::string VPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.c1.get_str() << ", " << c.c2.get_str() << ")";
        if (m.a)
            os << "*x1^" << m.a;
        if (m.b)
            os << "*x2^" << m.b;
    }
    return os.str();
}

std::pair<ComplexQ, ComplexQ> eval_complex(const VPoly& f, const ComplexQ& x1, const ComplexQ& x2)
{
    ComplexQ f1, f2;
    for (const auto& [m, c] : f.terms()) {
        ComplexQ mono{1, 0};
        for (int i = 0; i < m.a; ++i)
            mono = mono * x1;
        for (int i = 0; i < m.b; ++i)
            mono = mono * x2;
        f1 = f1 + mono * c.c1;
        f2 = f2 + mono * c.c2;
    }
    return {f1, f2};
}

} // namespace b2dunkl
