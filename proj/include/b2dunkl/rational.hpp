#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace b2dunkl {

using Rational = mpq_class;

/// Parse "p/q" or "p" exactly. Decimal strings ("0.3") are accepted only when
/// allow_decimal is set; they are converted to the exact rational they spell.
/// Throws UsageError on malformed input or zero denominator.
Rational parse_rational(std::string_view text, bool allow_decimal = false);

/// Nearest double for small numerators and denominators.
double to_double(const Rational& r);

/// Always "p/q", including q = 1.
std::string to_pq(const Rational& r);

inline Rational pochhammer(const Rational& a, int k)
{
    Rational out = 1;
    for (int i = 0; i < k; ++i)
        out *= a + i;
    return out;
}

inline Rational factorial_q(int n)
{
    Rational out = 1;
    for (int i = 2; i <= n; ++i)
        out *= i;
    return out;
}

inline Rational pow_q(const Rational& base, int e)
{
    Rational out = 1;
    for (int i = 0; i < e; ++i)
        out *= base;
    return out;
}

} // namespace b2dunkl
