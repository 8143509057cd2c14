#include "b2dunkl/harmonic.hpp"

#include "b2dunkl/errors.hpp"
#include "b2dunkl/group.hpp"

#include <map>
#include <mutex>
#include <string>

namespace b2dunkl {

std::string_view to_string(TypeLabel t)
{
    switch (t) {
    case TypeLabel::EE: return "EE";
    case TypeLabel::EO: return "EO";
    case TypeLabel::OE: return "OE";
    case TypeLabel::OO: return "OO";
    }
    return "?";
}

nlohmann::json BasisEntry::to_json() const
{
    return {{"degree", n},
            {"index", i},
            {"type", std::string(to_string(type_label))},
            {"nu", to_pq(nu)},
            {"poly", poly.to_json()}};
}

namespace {

using Level = std::array<VPoly, 4>;

// [q1; q2] -> [x1 q1 + x2 q2; -x2 q1 + x1 q2]
std::pair<VPoly, VPoly> apply_x(const VPoly& q1, const VPoly& q2)
{
    return {q1.mul_monomial(1, 0) + q2.mul_monomial(0, 1),
            q2.mul_monomial(1, 0) - q1.mul_monomial(0, 1)};
}

Level next_level(const Level& prev, int n, const Params& p)
{
    Level out;
    if (n % 2 == 1) {
        auto [a1, a2] = apply_x(prev[0], prev[1]);
        auto [a3, a4] = apply_x(prev[2], prev[3]);
        out = {a1, a2, a3, a4};
    } else {
        // n = 2m: p_{2m,1..2} from p_{2m-1,3..4} with k-, p_{2m,3..4} from p_{2m-1,1..2} with k+.
        const Rational odd = n - 1;
        auto step = [&](const VPoly& q1, const VPoly& q2, const Rational& lam) {
            return apply_x(q1 * ((odd + 2 * lam) / odd), q2 * ((odd - 2 * lam) / odd));
        };
        auto [a1, a2] = step(prev[2], prev[3], p.kminus());
        auto [a3, a4] = step(prev[0], prev[1], p.kplus());
        out = {a1, a2, a3, a4};
    }
    return out;
}

struct CacheSlot {
    std::mutex mu;
    std::vector<Level> levels;
};

std::shared_ptr<CacheSlot> cache_slot(const Params& p)
{
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<CacheSlot>> slots;
    std::lock_guard lock(mu);
    auto& slot = slots[p.key()];
    if (!slot)
        slot = std::make_shared<CacheSlot>();
    return slot;
}

std::vector<Level> levels_upto(int nmax, const Params& p)
{
    auto slot = cache_slot(p);
    std::lock_guard lock(slot->mu);
    auto& lv = slot->levels;
    if (lv.empty())
        lv.push_back({VPoly::t1(), VPoly::t2(), VPoly::t1(), -VPoly::t2()});
    while (static_cast<int>(lv.size()) <= nmax)
        lv.push_back(next_level(lv.back(), static_cast<int>(lv.size()), p));
    return {lv.begin(), lv.begin() + nmax + 1};
}

} // namespace

VPoly basis_poly(int n, int i, const Params& p)
{
    if (n < 0 || i < 1 || i > 4)
        throw DomainError("basis index out of range");
    return levels_upto(n, p)[n][i - 1];
}

std::vector<BasisEntry> build_basis(int nmax, const Params& p)
{
    if (nmax < 0)
        throw DomainError("nmax must be nonnegative");
    auto levels = levels_upto(nmax, p);
    std::vector<BasisEntry> out;
    for (int n = 0; n <= nmax; ++n) {
        int count = n == 0 ? 2 : 4;
        for (int i = 1; i <= count; ++i) {
            BasisEntry e;
            e.n = n;
            e.i = i;
            e.poly = levels[n][i - 1];
            e.type_label = type_label(e.poly);
            e.nu = norm_pi(n, i, p);
            out.push_back(std::move(e));
        }
    }
    return out;
}

TypeLabel type_label(const VPoly& f)
{
    if (f.is_zero())
        throw NotEigenvector("zero polynomial has no type");
    auto sign_of = [&](GroupId id) {
        VPoly g = group_act(GroupElement::make(id), f);
        if (g == f)
            return 1;
        if (g == -f)
            return -1;
        throw NotEigenvector("not an eigenvector of the coordinate reflections");
    };
    int e1 = sign_of(GroupId::s1);
    int e2 = sign_of(GroupId::s2);
    if (e1 > 0)
        return e2 > 0 ? TypeLabel::EE : TypeLabel::EO;
    return e2 > 0 ? TypeLabel::OE : TypeLabel::OO;
}

VPoly u12_apply(const VPoly& f, const Params& p)
{
    VPoly g = dunkl(1, f, p).mul_monomial(0, 1) - dunkl(2, f, p).mul_monomial(1, 0);
    return group_act(GroupElement::make(GroupId::s12p), g);
}

NormBranch norm_branch(int n, int i)
{
    if (n < 0 || i < 1 || i > 4)
        throw DomainError("norm index out of range");
    const int r = n % 4;
    const int m = n / 4;
    const bool low = i <= 2;
    switch (r) {
    case 0: return {!low, m, {0, 0, 0, 0}};
    case 2: return {low, m, {1, 1, 0, 0}};
    case 1: return {!low, m, (i % 2 == 1) ? std::array{0, 1, 0, 0} : std::array{1, 0, 0, 0}};
    default: return {low, m, (i % 2 == 1) ? std::array{1, 1, 0, 1} : std::array{1, 1, 1, 0}};
    }
}

Rational norm_pi(int n, int i, const Params& p)
{
    Rational scale = pow_q(Rational(2), n) * factorial_q(n);
    return scale * norm_prime<Rational>(n, i, p.kplus(), p.kminus());
}

VPoly project_harmonic(const VPoly& f, const Params& p)
{
    if (f.is_zero())
        return f;
    auto deg = f.homogeneous_degree();
    if (!deg)
        throw NotHomogeneous("project_harmonic needs a homogeneous polynomial");
    const int n = *deg;
    if (n == 0)
        return f;
    // sum_j |x|^{2j} Delta^j f / (4^j j! (1-n)_j), the gamma = 0, N = 2 case.
    VPoly out = f;
    VPoly lap = f;
    for (int j = 1; j <= n / 2; ++j) {
        lap = laplacian(lap, p);
        if (lap.is_zero())
            break;
        Rational denom = pow_q(Rational(4), j) * factorial_q(j) * pochhammer(Rational(1 - n), j);
        out += lap.mul_scalar_poly(ScalarPoly::norm_sq_pow(j)) * (Rational(1) / denom);
    }
    return out;
}

std::vector<std::pair<int, int>> radical_indices(const Params& p, int nmax)
{
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= nmax; ++n) {
        int count = n == 0 ? 2 : 4;
        for (int i = 1; i <= count; ++i)
            if (norm_pi(n, i, p) == 0)
                out.emplace_back(n, i);
    }
    return out;
}

} // namespace b2dunkl
