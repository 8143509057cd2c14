#pragma once

#include "b2dunkl/dunkl.hpp"
#include "b2dunkl/params.hpp"
#include "b2dunkl/vpoly.hpp"

#include <array>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace b2dunkl {

enum class TypeLabel { EE, EO, OE, OO };
std::string_view to_string(TypeLabel t);

/// One harmonic basis polynomial p_{n,i} with its parity type and exact norm
/// nu = <p, p>_tau.
struct BasisEntry {
    int n = 0;
    int i = 1;
    VPoly poly;
    TypeLabel type_label = TypeLabel::EE;
    Rational nu = 1;

    nlohmann::json to_json() const;
};

/// Entries for 0 <= n <= nmax: two at n = 0, four for each n >= 1. Results are
/// cached per parameter pair; concurrent calls are safe.
std::vector<BasisEntry> build_basis(int nmax, const Params& p);

/// p_{n,i} for 1 <= i <= 4, including the degree-0 aliases
/// p_{0,3} = p_{0,1} = t1 and p_{0,4} = -p_{0,2} = -t2.
VPoly basis_poly(int n, int i, const Params& p);

/// (sigma_1, sigma_2) eigenvalue pair. Throws NotEigenvector.
TypeLabel type_label(const VPoly& f);

/// sigma_12^+ (x2 D1 - x1 D2) f.
VPoly u12_apply(const VPoly& f, const Params& p);

/// Pochhammer quotient Pi(a, b, m, eps) with eps = {e1, e2, e3, e4} in {0,1}:
/// (1/4+a/2)_{m+e1} (1/4-a/2)_{m+e2} (3/4+b/2)_{m+e3} (3/4-b/2)_{m+e4}
/// over (1/4)_{m+e1} (1/4)_{m+e2} (3/4)_{m+e3} (3/4)_{m+e4}.
template <class T>
T pi_product(const T& a, const T& b, int m, const std::array<int, 4>& eps)
{
    auto poch = [](T x, int k) {
        T out(1);
        for (int j = 0; j < k; ++j)
            out *= x + j;
        return out;
    };
    const T q1 = T(1) / 4, q3 = T(3) / 4;
    T num = poch(q1 + a / 2, m + eps[0]) * poch(q1 - a / 2, m + eps[1]) *
            poch(q3 + b / 2, m + eps[2]) * poch(q3 - b / 2, m + eps[3]);
    T den = poch(q1, m + eps[0]) * poch(q1, m + eps[1]) * poch(q3, m + eps[2]) *
            poch(q3, m + eps[3]);
    return num / den;
}

/// Which Pi arguments give nu'(p_{n,i}) = nu(p_{n,i}) / (2^n n!): returns
/// (swap, m, eps) where swap means Pi(kminus, kplus, ...) instead of
/// Pi(kplus, kminus, ...).
struct NormBranch {
    bool swap;
    int m;
    std::array<int, 4> eps;
};
NormBranch norm_branch(int n, int i);

/// nu'(p_{n,i}) as a Pi product, for any scalar type (exact or floating).
template <class T>
T norm_prime(int n, int i, const T& kplus, const T& kminus)
{
    const NormBranch br = norm_branch(n, i);
    return br.swap ? pi_product(kminus, kplus, br.m, br.eps)
                   : pi_product(kplus, kminus, br.m, br.eps);
}

/// nu(p_{n,i}) = 2^n n! nu'(p_{n,i}), exact.
Rational norm_pi(int n, int i, const Params& p);

/// Harmonic projection of a homogeneous polynomial. Throws NotHomogeneous.
VPoly project_harmonic(const VPoly& f, const Params& p);

/// All (n, i) with n <= nmax whose norm vanishes exactly (n = 0 lists i = 1, 2).
std::vector<std::pair<int, int>> radical_indices(const Params& p, int nmax);

} // namespace b2dunkl
