#pragma once

#include "b2dunkl/params.hpp"
#include "b2dunkl/vpoly.hpp"

#include <vector>

namespace b2dunkl {

/// <f, g>_tau: apply the coefficient polynomials of f as polynomials in
/// (D1, D2) to g, evaluate at x = 0 and contract with <t_i, t_j> = delta_ij.
Rational pair_tau(const VPoly& f, const VPoly& g, const Params& p);

/// pair_tau(f, g) for every f in fs, sharing the Dunkl powers of g.
std::vector<Rational> pair_tau_column(const std::vector<VPoly>& fs, const VPoly& g, const Params& p);

/// <f, g>_G = <exp(Delta/2) f, exp(Delta/2) g>_tau.
Rational pair_gauss(const VPoly& f, const VPoly& g, const Params& p);

/// Coefficients of s^j in the Laguerre polynomial L_m^{(n)}(s).
std::vector<Rational> laguerre_coeffs(int m, int n);

/// Which radial argument goes into L_m^{(n)}: |x|^2/2 (half) or |x|^2 (full).
enum class LaguerreArg { half, full };

struct LaguerreBasisElement {
    int m = 0;
    int n = 0;
    int i = 1;
    VPoly poly;     // L_m^{(n)}(arg) p_{n,i}
    Rational nu_g;  // (n+1)_m / m! * nu(p_{n,i}); only meaningful for LaguerreArg::half
};

LaguerreBasisElement laguerre_element(int m, int n, int i, const Params& p,
                                      LaguerreArg arg = LaguerreArg::half);

} // namespace b2dunkl
