#pragma once

#include "b2dunkl/group.hpp"
#include "b2dunkl/params.hpp"
#include "b2dunkl/vpoly.hpp"

#include <array>

namespace b2dunkl {

/// Positive root v together with its reflection and multiplicity class.
struct PositiveRoot {
    std::array<int, 2> v;
    GroupElement reflection;
    bool diagonal; // k0 class if true, k1 class otherwise

    const Rational& kappa(const Params& p) const { return diagonal ? p.k0() : p.k1(); }
    int norm_sq() const { return v[0] * v[0] + v[1] * v[1]; }
};

/// (1,-1), (1,1), (1,0), (0,1).
const std::array<PositiveRoot, 4>& positive_roots();

/// Exact quotient f / (alpha x1 + beta x2). Throws InternalError if the
/// division leaves a remainder.
VPoly divide_linear(const VPoly& f, int alpha, int beta);

/// d/dx_i, i in {1, 2}.
VPoly partial(int i, const VPoly& f);

/// Dunkl operator D_i, i in {1, 2}:
///   D_i f = d_i f + sum_v kappa(v) v_i (f(x, t s_v) - f(x s_v, t s_v)) / <x, v>,
/// with every difference quotient divided symbolically.
VPoly dunkl(int i, const VPoly& f, const Params& p);

/// D_1^2 f + D_2^2 f.
VPoly laplacian(const VPoly& f, const Params& p);

/// exp(s Delta) f as the finite nilpotent sum over j of s^j Delta^j f / j!.
VPoly exp_laplacian(const VPoly& f, const Rational& s, const Params& p);

} // namespace b2dunkl
