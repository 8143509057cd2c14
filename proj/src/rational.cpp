#include "b2dunkl/rational.hpp"

#include "b2dunkl/errors.hpp"

#include <cctype>

namespace b2dunkl {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string strip_plus(std::string_view s)
{
    return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

} // namespace

Rational parse_rational(std::string_view text, bool allow_decimal)
{
    const std::string original(text);
    auto fail = [&]() -> Rational { throw UsageError("not a rational number: '" + original + "'"); };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den))
            return fail();
        mpz_class n(strip_plus(num), 10), d(strip_plus(den), 10);
        if (d == 0)
            throw UsageError("zero denominator in '" + original + "'");
        Rational r(n, d);
        r.canonicalize();
        return r;
    }
    if (is_integer_literal(text))
        return Rational(mpz_class(strip_plus(text), 10));

    auto dot = text.find('.');
    if (dot == std::string_view::npos)
        return fail();
    if (!allow_decimal)
        throw UsageError("decimal input '" + original + "' not accepted here; use p/q");

    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+'))
        whole.remove_prefix(1);
    if (whole.empty() && frac.empty())
        return fail();
    for (char c : whole)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return fail();
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return fail();

    std::string digits = std::string(whole) + std::string(frac);
    if (digits.empty())
        return fail();
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
        den *= 10;
    Rational r(negative ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
}

double to_double(const Rational& r)
{
    // exact integers below 2^53 divide with a single rounding
    const mpz_class lim = mpz_class(1) << 53;
    if (abs(r.get_num()) < lim && r.get_den() < lim)
        return r.get_num().get_d() / r.get_den().get_d();
    return r.get_d();
}

std::string to_pq(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace b2dunkl
