#pragma once

#include "b2dunkl/errors.hpp"

#include <cmath>
#include <limits>

namespace b2dunkl {

template <class T>
bool is_nonpositive_integer(T x)
{
    return x <= 0 && x == std::floor(x);
}

/// Gamma function backed by std::tgamma. Throws PoleError at 0, -1, -2, ...
template <class T>
T gamma_fn(T x)
{
    if (is_nonpositive_integer(x))
        throw PoleError("gamma function pole");
    return std::tgamma(x);
}

/// 1 / Gamma(x), zero at the poles.
template <class T>
T rgamma(T x)
{
    if (is_nonpositive_integer(x))
        return T(0);
    return T(1) / std::tgamma(x);
}

namespace detail {

inline constexpr long hyp_term_cap = 100000;

// Direct Gauss series with Neumaier compensated summation.
template <class T>
T hyp_series(T a, T b, T c, T s)
{
    const T eps = std::numeric_limits<T>::epsilon();
    T sum = 1, comp = 0, term = 1;
    int small = 0;
    for (long k = 0; k < hyp_term_cap; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * s;
        if (term == 0)
            return sum + comp;
        T t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
        if (std::abs(term) <= eps * std::abs(sum + comp)) {
            if (++small >= 2)
                return sum + comp;
        } else {
            small = 0;
        }
    }
    throw NonConvergence("hypergeometric series exceeded the term cap");
}

} // namespace detail

/// 2F1(a, b; c; s) for 0 <= s < 1. The series is summed directly for s <= 1/2;
/// above that the (1 - s) connection formula is used unless c - a - b is
/// (close to) an integer, in which case the direct series is used.
template <class T>
T gauss_2f1(T a, T b, T c, T s)
{
    if (!(s >= 0) || s >= 1)
        throw DomainError("gauss_2f1 argument outside [0, 1)");
    if (is_nonpositive_integer(c))
        throw PoleError("gauss_2f1 with c a nonpositive integer");
    if (s <= T(0.5))
        return detail::hyp_series(a, b, c, s);
    const T d = c - a - b;
    if (std::abs(d - std::round(d)) < T(1e-6))
        return detail::hyp_series(a, b, c, s);
    const T t = 1 - s;
    T g = gamma_fn(c);
    T first = g * gamma_fn(d) * rgamma(c - a) * rgamma(c - b);
    T second = g * gamma_fn(-d) * rgamma(a) * rgamma(b);
    T out = 0;
    if (first != 0)
        out += first * detail::hyp_series(a, b, 1 - d, t);
    if (second != 0)
        out += second * std::pow(t, d) * detail::hyp_series(c - a, c - b, d + 1, t);
    return out;
}

} // namespace b2dunkl
