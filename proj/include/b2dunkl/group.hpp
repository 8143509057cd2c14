#pragma once

#include "b2dunkl/vpoly.hpp"

#include <array>
#include <string_view>

namespace b2dunkl {

enum class GroupId { e, s1, s2, s12p, s12m, r, r2, r3 };

/// Element of the symmetry group of the square, as a 2x2 signed permutation
/// matrix acting on row vectors from the right (x -> xw).
struct GroupElement {
    GroupId id = GroupId::e;
    std::array<std::array<int, 2>, 2> m{{{1, 0}, {0, 1}}};

    static GroupElement make(GroupId id);
    static const std::array<GroupElement, 8>& all();
    /// sigma_12^+, sigma_12^-, sigma_1, sigma_2 (the order of the positive roots
    /// (1,-1), (1,1), (1,0), (0,1)).
    static const std::array<GroupElement, 4>& reflections();

    std::string_view name() const;
    int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    bool is_reflection() const { return det() == -1; }
    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    bool operator==(const GroupElement& o) const { return m == o.m; }

    /// Row vector times matrix.
    template <class T>
    std::array<T, 2> apply(const std::array<T, 2>& x) const
    {
        return {x[0] * m[0][0] + x[1] * m[1][0], x[0] * m[0][1] + x[1] * m[1][1]};
    }
};

/// (wf)(x, t) = f(xw, tw). This is a left action:
/// group_act(w1, group_act(w2, f)) == group_act(w1 * w2, f).
VPoly group_act(const GroupElement& w, const VPoly& f);

/// f(x, tw): the group acts on the t-variables only.
VPoly act_on_t(const GroupElement& w, const VPoly& f);

/// f(xw, t): the group acts on the x-variables only.
VPoly act_on_x(const GroupElement& w, const VPoly& f);

} // namespace b2dunkl
