#include "b2dunkl/verify.hpp"

#include "b2dunkl/dunkl.hpp"
#include "b2dunkl/errors.hpp"
#include "b2dunkl/forms.hpp"
#include "b2dunkl/group.hpp"
#include "b2dunkl/harmonic.hpp"
#include "b2dunkl/kernel.hpp"
#include "b2dunkl/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace b2dunkl {

VPoly random_vpoly(std::mt19937& rng, int maxdeg, bool homogeneous)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::bernoulli_distribution keep(0.5);
    VPoly f;
    for (int d = homogeneous ? maxdeg : 0; d <= maxdeg; ++d)
        for (int a = 0; a <= d; ++a)
            if (keep(rng))
                f.add_term({a, d - a}, coef(rng), coef(rng));
    if (f.is_zero())
        f.add_term({maxdeg, 0}, 1, 0);
    return f;
}

nlohmann::json params_json(const Params& p)
{
    return {{"k0", to_pq(p.k0())}, {"k1", to_pq(p.k1())}};
}

nlohmann::json params_json(const WeightParams& wp)
{
    return {{"k0", wp.k0}, {"k1", wp.k1}};
}

namespace {

int count_n(int n) { return n == 0 ? 2 : 4; }

VPoly x_mul(int j, const VPoly& f) { return f.mul_monomial(j == 1 ? 1 : 0, j == 2 ? 1 : 0); }

CheckResult exact_check(std::string name, nlohmann::json params, long failures, std::string note = {})
{
    return make_check(std::move(name), std::move(params), 0, double(failures), std::move(note));
}

Mat2 group_mat(const GroupElement& g)
{
    return {double(g.m[0][0]), double(g.m[0][1]), double(g.m[1][0]), double(g.m[1][1])};
}

// Simple mixed polynomial set {p_{n,i}, |x|^2 p_{n,i} : n <= nmax}.
std::vector<VPoly> basis_and_radial(const Params& p, int nmax)
{
    std::vector<VPoly> out;
    for (int n = 0; n <= nmax; ++n)
        for (int i = 1; i <= count_n(n); ++i) {
            VPoly b = basis_poly(n, i, p);
            out.push_back(b);
            out.push_back(b.mul_scalar_poly(ScalarPoly::norm_sq_pow(1)));
        }
    return out;
}

double slope_fit(const std::vector<double>& xs, const std::vector<double>& ys)
{
    const double n = double(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t j = 0; j < xs.size(); ++j) {
        sx += xs[j];
        sy += ys[j];
        sxx += xs[j] * xs[j];
        sxy += xs[j] * ys[j];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

namespace checks {

CheckResult left_action()
{
    std::mt19937 rng(11);
    long bad = 0;
    for (int rep = 0; rep < 3; ++rep) {
        VPoly f = random_vpoly(rng, 3);
        for (const auto& w1 : GroupElement::all())
            for (const auto& w2 : GroupElement::all())
                if (group_act(w1, group_act(w2, f)) != group_act(w1 * w2, f))
                    ++bad;
    }
    return exact_check("group_act composition w1(w2 f) = (w1 w2) f", nlohmann::json::object(), bad);
}

CheckResult commutation(const Params& p, int maxdeg)
{
    long bad = 0;
    for (int d = 0; d <= maxdeg; ++d)
        for (int a = 0; a <= d; ++a)
            for (int comp = 0; comp < 2; ++comp) {
                VPoly f = VPoly::term(a, d - a, comp == 0 ? 1 : 0, comp == 1 ? 1 : 0);
                for (int i = 1; i <= 2; ++i)
                    for (int j = 1; j <= 2; ++j) {
                        VPoly lhs = dunkl(i, x_mul(j, f), p) - x_mul(j, dunkl(i, f, p));
                        VPoly rhs = i == j ? f : VPoly();
                        for (const auto& r : positive_roots()) {
                            Rational c = 2 * r.kappa(p) * r.v[i - 1] * r.v[j - 1] / r.norm_sq();
                            if (c != 0)
                                rhs += group_act(r.reflection, f) * c;
                        }
                        if (lhs != rhs)
                            ++bad;
                    }
            }
    return exact_check("commutation D_i x_j - x_j D_i", params_json(p), bad);
}

CheckResult dunkl_commute(const Params& p, int maxdeg, int samples)
{
    std::mt19937 rng(12);
    long bad = 0;
    for (int s = 0; s < samples; ++s) {
        VPoly f = random_vpoly(rng, maxdeg);
        if (dunkl(1, dunkl(2, f, p), p) != dunkl(2, dunkl(1, f, p), p))
            ++bad;
    }
    return exact_check("D1 D2 = D2 D1", params_json(p), bad);
}

CheckResult dunkl_equivariance(const Params& p, int maxdeg, int samples)
{
    std::mt19937 rng(13);
    long bad = 0;
    for (int s = 0; s < samples; ++s) {
        VPoly f = random_vpoly(rng, maxdeg);
        for (const auto& w : GroupElement::all())
            for (int k = 0; k < 2; ++k) {
                std::array<int, 2> u{k == 0 ? 1 : 0, k == 1 ? 1 : 0};
                auto uw = w.apply(u);
                VPoly wf = group_act(w, f);
                VPoly lhs = dunkl(1, wf, p) * Rational(u[0]) + dunkl(2, wf, p) * Rational(u[1]);
                VPoly inner = dunkl(1, f, p) * Rational(uw[0]) + dunkl(2, f, p) * Rational(uw[1]);
                if (lhs != group_act(w, inner))
                    ++bad;
            }
    }
    return exact_check("equivariance sum u_i D_i (w f) = w sum (uw)_i D_i f", params_json(p), bad);
}

CheckResult euler_relation(const Params& p, int maxdeg, int samples)
{
    std::mt19937 rng(14);
    long bad = 0;
    for (int s = 0; s < samples; ++s) {
        VPoly f = random_vpoly(rng, maxdeg);
        VPoly lhs = x_mul(1, dunkl(1, f, p)) + x_mul(2, dunkl(2, f, p));
        VPoly rhs = x_mul(1, partial(1, f)) + x_mul(2, partial(2, f));
        for (const auto& r : positive_roots())
            rhs += (act_on_t(r.reflection, f) - group_act(r.reflection, f)) * r.kappa(p);
        if (lhs != rhs)
            ++bad;
    }
    return exact_check("Euler relation sum x_i D_i", params_json(p), bad);
}

CheckResult harmonicity(const Params& p, int nmax)
{
    long bad = 0;
    for (int n = 1; n <= nmax; ++n)
        for (int i = 1; i <= 4; ++i)
            if (!laplacian(basis_poly(n, i, p), p).is_zero())
                ++bad;
    return exact_check("harmonicity of p_{n,i}", params_json(p), bad);
}

CheckResult pnonz(const Params& p, int nmax)
{
    const ComplexQ one{1, 0}, im{0, 1}, mim{0, -1};
    const std::pair<ComplexQ, ComplexQ> z{one, im}, zb{one, mim};
    auto times = [](const std::pair<ComplexQ, ComplexQ>& v, const ComplexQ& c) {
        return std::pair<ComplexQ, ComplexQ>{v.first * c, v.second * c};
    };
    long bad = 0;
    for (int n = 1; n <= nmax; ++n) {
        const Rational scale = pow_q(Rational(2), n - 1);
        const bool low = n % 4 == 0 || n % 4 == 1;
        const auto& a = low ? z : zb;
        const auto& b = low ? zb : z;
        std::array<std::pair<ComplexQ, ComplexQ>, 4> expect = {a, times(a, mim), b, times(b, mim)};
        for (int i = 1; i <= 4; ++i) {
            auto got = eval_complex(basis_poly(n, i, p), one, im);
            auto want = times(expect[i - 1], ComplexQ{scale, 0});
            if (!(got.first == want.first && got.second == want.second))
                ++bad;
        }
    }
    return exact_check("p_{n,i}(1, i) pattern", params_json(p), bad);
}

CheckResult s12_action(const Params& p, int nmax)
{
    const auto s = GroupElement::make(GroupId::s12p);
    long bad = 0;
    for (int n = 1; n <= nmax; ++n) {
        std::array<VPoly, 4> q;
        for (int i = 1; i <= 4; ++i)
            q[i - 1] = basis_poly(n, i, p);
        std::array<VPoly, 4> want;
        if (n % 2 == 1)
            want = {q[0], -q[1], -q[2], q[3]};
        else
            want = {q[1], q[0], -q[3], -q[2]};
        for (int i = 0; i < 4; ++i)
            if (group_act(s, q[i]) != want[i])
                ++bad;
    }
    return exact_check("sigma_12^+ action on p_{n,i}", params_json(p), bad);
}

CheckResult dunkl_action(const Params& p, int mmax)
{
    long bad = 0;
    auto P = [&](int n, int i) { return basis_poly(n, i, p); };
    for (int m = 1; m <= mmax; ++m) {
        const Rational o = 2 * m - 1;
        const Rational km = p.kminus(), kp = p.kplus();
        const Rational am = 2 * m * (o + 2 * km) / o, bm = 2 * m * (o - 2 * km) / o;
        const Rational ap = 2 * m * (o + 2 * kp) / o, bp = 2 * m * (o - 2 * kp) / o;
        const int e = 2 * m, d = 2 * m - 1;
        std::array<std::pair<VPoly, VPoly>, 8> cases = {{
            {dunkl(1, P(e, 1), p), P(d, 3) * am},
            {dunkl(2, P(e, 1), p), P(d, 4) * bm},
            {dunkl(1, P(e, 2), p), P(d, 4) * bm},
            {dunkl(2, P(e, 2), p), P(d, 3) * (-am)},
            {dunkl(1, P(e, 3), p), P(d, 1) * ap},
            {dunkl(2, P(e, 3), p), P(d, 2) * bp},
            {dunkl(1, P(e, 4), p), P(d, 2) * bp},
            {dunkl(2, P(e, 4), p), P(d, 1) * (-ap)},
        }};
        for (const auto& [got, want] : cases)
            if (got != want)
                ++bad;
    }
    for (int m = 0; m < mmax; ++m) {
        const int o = 2 * m + 1, e = 2 * m;
        const Rational kp = p.kplus(), km = p.kminus();
        struct Row {
            int i;
            Rational c;
            VPoly d1, d2;
        };
        std::array<Row, 4> rows = {{
            {1, o - 2 * kp, P(e, 1), P(e, 2)},
            {2, o + 2 * kp, P(e, 2), -P(e, 1)},
            {3, o - 2 * km, P(e, 3), P(e, 4)},
            {4, o + 2 * km, P(e, 4), -P(e, 3)},
        }};
        for (const auto& r : rows) {
            VPoly f = P(o, r.i);
            if (dunkl(1, f, p) != r.d1 * r.c || dunkl(2, f, p) != r.d2 * r.c)
                ++bad;
        }
    }
    return exact_check("Dunkl action on p_{n,i}", params_json(p), bad);
}

CheckResult u12_eigen(const Params& p, int mmax)
{
    const std::array<int, 4> eps = {-1, 1, 1, -1};
    long bad = 0;
    for (int m = 1; m <= mmax; ++m)
        for (int i = 1; i <= 4; ++i) {
            VPoly f = basis_poly(2 * m, i, p);
            if (u12_apply(f, p) != f * Rational(2 * m * eps[i - 1]))
                ++bad;
        }
    return exact_check("U12 eigenvalues on p_{2m,i}", params_json(p), bad);
}

CheckResult basis_rank(const Params& p, int nmax)
{
    long bad = 0;
    for (int n = 1; n <= nmax; ++n) {
        // rows = basis elements, columns = (monomial, component)
        std::vector<std::vector<Rational>> A(4, std::vector<Rational>(2 * (n + 1), Rational(0)));
        for (int i = 1; i <= 4; ++i)
            for (const auto& [mono, c] : basis_poly(n, i, p).terms()) {
                A[i - 1][2 * mono.a] = c.c1;
                A[i - 1][2 * mono.a + 1] = c.c2;
            }
        int rank = 0;
        const int cols = 2 * (n + 1);
        for (int col = 0; col < cols && rank < 4; ++col) {
            int piv = -1;
            for (int r = rank; r < 4; ++r)
                if (A[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                continue;
            std::swap(A[piv], A[rank]);
            for (int r = 0; r < 4; ++r)
                if (r != rank && A[r][col] != 0) {
                    Rational f = A[r][col] / A[rank][col];
                    for (int c = col; c < cols; ++c)
                        A[r][c] -= f * A[rank][c];
                }
            ++rank;
        }
        if (rank != 4)
            ++bad;
    }
    return exact_check("rank of {p_{n,1..4}} is 4", params_json(p), bad);
}

CheckResult norm_consistency(const Params& p, int nmax)
{
    long bad = 0;
    for (int n = 0; n <= nmax; ++n) {
        std::vector<VPoly> row;
        for (int i = 1; i <= count_n(n); ++i)
            row.push_back(basis_poly(n, i, p));
        for (int j = 1; j <= count_n(n); ++j) {
            auto col = pair_tau_column(row, row[j - 1], p);
            for (int i = 1; i <= count_n(n); ++i) {
                Rational want = i == j ? norm_pi(n, i, p) : Rational(0);
                if (col[i - 1] != want)
                    ++bad;
            }
        }
    }
    return exact_check("pair_tau(p_{n,i}, p_{n,j}) = delta_ij Pi-norm", params_json(p), bad);
}

CheckResult degree1_norms(const Params& p)
{
    const Rational k0 = p.k0(), k1 = p.k1();
    std::array<Rational, 4> want = {2 * (1 - 2 * k0 - 2 * k1), 2 * (1 + 2 * k0 + 2 * k1),
                                    2 * (1 + 2 * k0 - 2 * k1), 2 * (1 - 2 * k0 + 2 * k1)};
    long bad = 0;
    for (int i = 1; i <= 4; ++i) {
        VPoly f = basis_poly(1, i, p);
        if (pair_tau(f, f, p) != want[i - 1] || norm_pi(1, i, p) != want[i - 1])
            ++bad;
    }
    return exact_check("degree-1 norms 2(1 -+ 2k0 -+ 2k1)", params_json(p), bad);
}

CheckResult norm_recurrences(const Params& p, int mmax)
{
    long bad = 0;
    auto nu = [&](int n, int i) { return norm_pi(n, i, p); };
    const Rational kp = p.kplus(), km = p.kminus();
    for (int m = 0; m <= mmax; ++m) {
        const Rational o = 2 * m + 1;
        std::array<std::pair<Rational, Rational>, 6> rel = {{
            {nu(2 * m + 1, 1), 2 * (o - 2 * kp) * nu(2 * m, 1)},
            {nu(2 * m + 1, 2), 2 * (o + 2 * kp) * nu(2 * m, 1)},
            {nu(2 * m + 1, 3), 2 * (o - 2 * km) * nu(2 * m, 3)},
            {nu(2 * m + 1, 4), 2 * (o + 2 * km) * nu(2 * m, 3)},
            {nu(2 * m + 2, 1), 8 * (m + 1) * (o - 2 * km) * (o + 2 * km) / o * nu(2 * m, 3)},
            {nu(2 * m + 2, 3), 8 * (m + 1) * (o - 2 * kp) * (o + 2 * kp) / o * nu(2 * m, 1)},
        }};
        for (const auto& [a, b] : rel)
            if (a != b)
                ++bad;
    }
    return exact_check("norm recurrence relations", params_json(p), bad);
}

CheckResult tau_w_invariance(const Params& p, int maxdeg, int samples)
{
    std::mt19937 rng(21);
    long bad = 0;
    for (int s = 0; s < samples; ++s) {
        VPoly f = random_vpoly(rng, maxdeg), g = random_vpoly(rng, maxdeg);
        const Rational base = pair_tau(f, g, p);
        for (const auto& w : GroupElement::all())
            if (pair_tau(group_act(w, f), group_act(w, g), p) != base)
                ++bad;
    }
    return exact_check("W-invariance of pair_tau", params_json(p), bad);
}

CheckResult tau_adjoint(const Params& p, int maxdeg, int samples)
{
    std::mt19937 rng(22);
    long bad = 0;
    for (int s = 0; s < samples; ++s) {
        VPoly f = random_vpoly(rng, maxdeg - 1), g = random_vpoly(rng, maxdeg);
        for (int i = 1; i <= 2; ++i)
            if (pair_tau(x_mul(i, f), g, p) != pair_tau(f, dunkl(i, g, p), p))
                ++bad;
    }
    return exact_check("pair_tau(x_i f, g) = pair_tau(f, D_i g)", params_json(p), bad);
}

CheckResult gauss_adjoint(const Params& p, int maxdeg, int samples)
{
    std::mt19937 rng(23);
    long bad = 0;
    for (int s = 0; s < samples; ++s) {
        VPoly f = random_vpoly(rng, maxdeg), g = random_vpoly(rng, maxdeg);
        for (int i = 1; i <= 2; ++i)
            if (pair_gauss(x_mul(i, f) - dunkl(i, f, p), g, p) != pair_gauss(f, dunkl(i, g, p), p))
                ++bad;
    }
    return exact_check("pair_gauss((x_i - D_i) f, g) = pair_gauss(f, D_i g)", params_json(p), bad);
}

CheckResult orthogonality_grid(const Params& p)
{
    struct Item {
        int a, n, i;
        VPoly f;
    };
    std::vector<Item> items;
    for (int a = 0; a <= 2; ++a)
        for (int n = 0; n <= 4; ++n)
            for (int i = 1; i <= count_n(n); ++i)
                items.push_back({a, n, i, basis_poly(n, i, p).mul_scalar_poly(ScalarPoly::norm_sq_pow(a))});
    std::vector<VPoly> fs;
    for (const auto& it : items)
        fs.push_back(it.f);
    long bad = 0;
    for (size_t b = 0; b < items.size(); ++b) {
        auto col = pair_tau_column(fs, items[b].f, p);
        for (size_t a = 0; a < items.size(); ++a) {
            const auto& A = items[a];
            const auto& B = items[b];
            Rational want = 0;
            if (A.a == B.a && A.n == B.n && A.i == B.i)
                want = pow_q(Rational(4), A.a) * factorial_q(A.a) * pochhammer(Rational(A.n + 1), A.a) *
                       norm_pi(A.n, A.i, p);
            if (col[a] != want)
                ++bad;
        }
    }
    return exact_check("orthogonality of |x|^{2a} p_{n,i}", params_json(p), bad);
}

CheckResult positivity(const Params& p)
{
    if (!p.is_positive_region())
        return exact_check("positivity of pair_tau", params_json(p), 0,
                           "parameters outside the open square; not applicable");
    long bad = 0;
    for (int a = 0; a <= 2; ++a)
        for (int n = 0; n <= 4; ++n)
            for (int i = 1; i <= count_n(n); ++i) {
                VPoly f = basis_poly(n, i, p).mul_scalar_poly(ScalarPoly::norm_sq_pow(a));
                if (!(pair_tau(f, f, p) > 0))
                    ++bad;
            }
    return exact_check("positivity of pair_tau", params_json(p), bad);
}

CheckResult laguerre_orthogonality(const Params& p, int maxdeg)
{
    std::vector<LaguerreBasisElement> els;
    for (int n = 0; n <= maxdeg; ++n)
        for (int m = 0; n + 2 * m <= maxdeg; ++m)
            for (int i = 1; i <= count_n(n); ++i)
                els.push_back(laguerre_element(m, n, i, p));
    std::vector<VPoly> ex;
    for (const auto& e : els)
        ex.push_back(exp_laplacian(e.poly, Rational(1, 2), p));
    long bad = 0;
    for (size_t b = 0; b < els.size(); ++b) {
        auto col = pair_tau_column(ex, ex[b], p);
        for (size_t a = 0; a < els.size(); ++a) {
            Rational want = a == b ? els[a].nu_g : Rational(0);
            if (col[a] != want)
                ++bad;
        }
    }
    return exact_check("Gaussian orthogonality of Laguerre elements and nu_G", params_json(p), bad);
}

CheckResult kernel_reproduction(const Params& p, int nmax, const std::array<Rational, 2>& y)
{
    long bad = 0;
    for (int n = 0; n <= nmax; ++n) {
        auto rows = kernel_E_rows(n, y, p);
        std::vector<VPoly> fs;
        for (int i = 1; i <= count_n(n); ++i)
            fs.push_back(basis_poly(n, i, p));
        if (n >= 2)
            for (int i = 1; i <= count_n(n - 2); ++i)
                fs.push_back(basis_poly(n - 2, i, p).mul_scalar_poly(ScalarPoly::norm_sq_pow(1)));
        for (const auto& f : fs) {
            auto [f1, f2] = f.eval(y[0], y[1]);
            if (pair_tau(rows[0], f, p) != f1 || pair_tau(rows[1], f, p) != f2)
                ++bad;
        }
    }
    nlohmann::json pj = params_json(p);
    pj["y"] = {to_pq(y[0]), to_pq(y[1])};
    return exact_check("reproducing property of E_n", pj, bad);
}

CheckResult kernel_intertwining(const Params& p, int nmax, const std::array<Rational, 2>& y)
{
    long bad = 0;
    for (int n = 1; n <= nmax; ++n) {
        auto En = kernel_E_rows(n, y, p);
        auto Em = kernel_E_rows(n - 1, y, p);
        for (int i = 1; i <= 2; ++i)
            for (int a = 0; a < 2; ++a)
                if (dunkl(i, En[a], p) != Em[a] * y[i - 1])
                    ++bad;
    }
    nlohmann::json pj = params_json(p);
    pj["y"] = {to_pq(y[0]), to_pq(y[1])};
    return exact_check("D_i^(x) E_n = y_i E_{n-1}", pj, bad);
}

CheckResult kernel_equivariance(const Params& p, int nmax)
{
    const std::array<Rational, 2> x{Rational(2, 3), Rational(-1, 5)}, y{Rational(1, 4), Rational(3, 7)};
    long bad = 0;
    for (int n = 0; n <= nmax; ++n) {
        KernelValue base = kernel_E(n, x, y, p);
        for (const auto& w : GroupElement::all()) {
            KernelValue got = kernel_E(n, w.apply(x), w.apply(y), p);
            // w^{-1} E w with w^{-1} = w^T
            KernelValue want;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    Rational s = 0;
                    for (int c = 0; c < 2; ++c)
                        for (int d = 0; d < 2; ++d)
                            s += w.m[c][a] * base.e[c][d] * w.m[d][b];
                    want.e[a][b] = s;
                }
            if (!(got == want))
                ++bad;
        }
    }
    return exact_check("E_n(xw, yw) = w^{-1} E_n(x, y) w", params_json(p), bad);
}

CheckResult kernel_truncation(const Params& p)
{
    const std::vector<std::pair<std::array<double, 2>, std::array<double, 2>>> pts = {
        {{1.2, -0.7}, {0.9, 1.1}}, {{2.0, 0.0}, {0.0, 2.0}}, {{-1.0, 1.5}, {1.3, -1.4}}};
    const KernelEvaluator ev(p, 60);
    double worst = 0;
    for (const auto& [x, y] : pts) {
        auto r = ev.truncated(x, y, KernelMode::real);
        double scale = 1;
        for (const auto& row : r.value.e)
            for (const auto& v : row)
                scale = std::max(scale, std::abs(v));
        worst = std::max(worst, r.last_term / scale);
    }
    return make_check("truncated E: last term at N = 60 for |x|, |y| <= 2", params_json(p), 1e-12, worst);
}

CheckResult nu_limit(const Params& p)
{
    const double kp = to_double(p.kplus()), km = to_double(p.kminus());
    const double target = omega(0.25, kp / 2) * omega(0.75, km / 2);
    bool monotone = true;
    double e40 = 0, e80 = 0;
    for (int r : {0, 1})
        for (int i : {1, 2}) {
            double prev = INFINITY;
            for (int n = 8 + r; n <= 80 + r; n += 4) {
                const double err = std::abs(norm_prime<double>(n, i, kp, km) - target);
                if (!(err < prev))
                    monotone = false;
                prev = err;
                if (r == 0 && i == 1 && n == 40)
                    e40 = err;
                if (r == 0 && i == 1 && n == 80)
                    e80 = err;
            }
        }
    const double ratio = e40 / e80;
    CheckResult c = make_check("nu' limit: err(40) <= 10 err(80), decreasing along n = 0,1 mod 4",
                               params_json(p), 10, ratio);
    c.pass = c.pass && monotone && e80 < e40;
    std::ostringstream os;
    os.precision(6);
    os << "limit " << target << ", err(40) " << e40 << ", err(80) " << e80
       << (monotone ? ", monotone" : ", not monotone");
    c.note = os.str();
    return c;
}

CheckResult beta_bound(const Params& p)
{
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> U(-1.5, 1.5);
    const double s = 0.5 + std::abs(p.k0_d()) + std::abs(p.k1_d());
    long bad = 0;
    double worst = 0;
    for (int m = 1; m <= 4; ++m) {
        double ratio = 1;
        for (int j = 0; j < m; ++j)
            ratio *= (s + j) / (0.5 + j);
        const VPoly a = basis_poly(2 * m, 1, p), b = basis_poly(2 * m, 2, p);
        for (int k = 0; k < 100; ++k) {
            std::array<double, 2> x{U(rng), U(rng)};
            const double r2 = x[0] * x[0] + x[1] * x[1];
            const double lhs = beta_growth(a, x) + beta_growth(b, x);
            const double rhs = 2 * ratio * ratio * std::pow(r2, 2 * m);
            worst = std::max(worst, lhs / rhs);
            if (lhs > rhs * (1 + 1e-12))
                ++bad;
        }
    }
    CheckResult c = exact_check("beta growth bound for p_{2m,1}, p_{2m,2}", params_json(p), bad);
    c.note = "max lhs/rhs " + std::to_string(worst);
    return c;
}

CheckResult det_L(const WeightParams& wp, int points)
{
    double worst = 0;
    for (int j = 0; j < points; ++j) {
        const double u = (j + 0.5) / points;
        worst = std::max(worst, std::abs(L_matrix(u, wp).det() - 1));
    }
    return make_check("det L(u) = 1", params_json(wp), 1e-10, worst);
}

CheckResult branch_agreement(const WeightParams& wp)
{
    const double u = std::sqrt(theta_switch);
    const double w = 1 - theta_switch;
    double err;
    if (wp.precision == Precision::extended) {
        const long double ul = std::sqrt((long double)theta_switch);
        auto A = L_direct<long double>(ul, wp.k0, wp.k1);
        auto B = L_factored<long double>(ul, 1 - (long double)theta_switch, wp.k0, wp.k1);
        err = double((A - B).max_abs() / A.max_abs());
    } else {
        auto A = L_direct<double>(u, wp.k0, wp.k1);
        auto B = L_factored<double>(u, w, wp.k0, wp.k1);
        err = (A - B).max_abs() / A.max_abs();
    }
    return make_check("L branch agreement at u^2 = theta_switch", params_json(wp), 1e-10, err);
}

CheckResult ode_residual(const WeightParams& wp)
{
    const double h = 1e-5;
    double worst = 0;
    for (int j = 0; j <= 18; ++j) {
        const double u = 0.05 + 0.05 * j;
        Mat2 fd = (L_matrix(u + h, wp) - L_matrix(u - h, wp)) * (1 / (2 * h));
        const double off = -2 * wp.k0 / ((1 - u) * (1 + u));
        Mat2 A{wp.k1 / u, off, off, -wp.k1 / u};
        Mat2 rhs = L_matrix(u, wp) * A;
        worst = std::max(worst, (fd - rhs).max_abs() / std::max(rhs.max_abs(), 1e-300));
    }
    return make_check("ODE residual dL/du = L A(u)", params_json(wp), 1e-6, worst);
}

CheckResult pde_residual(const WeightParams& wp, int points)
{
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> R(0.5, 2.0), T(0.03, std::numbers::pi / 4 - 0.03);
    const double k[2] = {wp.k0, wp.k1};
    double worst = 0;
    for (int s = 0; s < points; ++s) {
        const double r = R(rng), th = T(rng);
        const std::array<double, 2> x{r * std::cos(th), r * std::sin(th)};
        const Mat2 K = K_matrix(x[0], x[1], wp);
        for (int i = 0; i < 2; ++i) {
            auto D = [&](double h) {
                std::array<double, 2> xp = x, xm = x;
                xp[i] += h;
                xm[i] -= h;
                return (K_matrix(xp[0], xp[1], wp) - K_matrix(xm[0], xm[1], wp)) * (1 / (2 * h));
            };
            const double h = 1e-3 * r;
            Mat2 lhs = (D(h / 2) * 4.0 - D(h)) * (1.0 / 3);
            Mat2 rhs;
            for (const auto& root : positive_roots()) {
                const double kap = root.diagonal ? k[0] : k[1];
                const double vi = root.v[i];
                if (vi == 0 || kap == 0)
                    continue;
                const double ip = x[0] * root.v[0] + x[1] * root.v[1];
                Mat2 S = group_mat(root.reflection);
                rhs = rhs + (S * K + K * S) * (kap * vi / ip);
            }
            const double scale = std::max(lhs.max_abs(), K.max_abs() / r);
            worst = std::max(worst, (lhs - rhs).max_abs() / scale);
        }
    }
    return make_check("PDE residual for K (Richardson central differences)", params_json(wp), 1e-6, worst);
}

CheckResult boundary_slope_axis(const WeightParams& wp)
{
    std::vector<double> xs, ys;
    for (int j = 0; j <= 20; ++j) {
        const double eps = std::pow(10.0, -4 + 0.1 * j);
        xs.push_back(std::log(eps));
        ys.push_back(std::log(std::abs(K_fundamental(eps, wp).a12)));
    }
    const double slope = slope_fit(xs, ys);
    const double want = 1 - 2 * std::abs(wp.k1);
    CheckResult c = make_check("slope of K12(1, eps) is 1 - 2|k1|", params_json(wp), 0.05,
                               std::abs(slope - want));
    c.note = "fitted slope " + std::to_string(slope) + ", expected " + std::to_string(want);
    return c;
}

CheckResult boundary_slope_diagonal(const WeightParams& wp, bool as_printed)
{
    std::vector<double> xs, ys;
    for (int j = 0; j <= 20; ++j) {
        const double eps = std::pow(10.0, -4 + 0.1 * j);
        const Mat2 K = K_fundamental(1 - eps, eps * (2 - eps), wp);
        xs.push_back(std::log(eps));
        ys.push_back(std::log(std::abs(K.a11 - K.a22)));
    }
    const double slope = slope_fit(xs, ys);
    const double want = as_printed ? 1 + 2 * wp.k0 : 1 - 2 * std::abs(wp.k0);
    CheckResult c = make_check(as_printed ? "slope of (K11 - K22)(1, 1 - eps) is 1 + 2k0"
                                          : "slope of (K11 - K22)(1, 1 - eps) is 1 - 2|k0|",
                               params_json(wp), 0.05,
                               std::abs(slope - want));
    c.note = "fitted slope " + std::to_string(slope) + ", expected " + std::to_string(want);
    return c;
}

CheckResult degenerate_form(Degenerate which, double k, double exponent_scale)
{
    WeightParams wp;
    if (which == Degenerate::k0_zero)
        wp.k1 = k;
    else
        wp.k0 = k;
    double worst = 0;
    const int steps = 96;
    for (int j = 0; j < steps; ++j) {
        const double th = (j + 0.37) * 2 * std::numbers::pi / steps;
        const double x1 = std::cos(th), x2 = std::sin(th);
        Mat2 K = K_matrix(x1, x2, wp);
        Mat2 D = K_degenerate(x1, x2, wp, which, exponent_scale);
        worst = std::max(worst, (K - D).max_abs() / K.max_abs());
    }
    std::string name = which == Degenerate::k0_zero ? "k0 = 0 closed form" : "k1 = 0 closed form";
    name += exponent_scale == 1 ? " (exponent k as printed)" : " (exponent 2k)";
    return make_check(name, params_json(wp), 1e-10, worst);
}

CheckResult positive_definite(const WeightParams& wp, int points)
{
    std::mt19937 rng(51);
    std::uniform_real_distribution<double> U(-1, 1);
    long bad = 0;
    for (int s = 0; s < points; ++s) {
        double x1 = U(rng), x2 = U(rng);
        if (x1 == 0 || x2 == 0 || std::abs(x1) == std::abs(x2))
            continue;
        Mat2 K = K_matrix(x1, x2, wp);
        if (!(K.a11 > 0 && K.det() > 0))
            ++bad;
    }
    return exact_check("K positive-definite", params_json(wp), bad);
}

CheckResult K_equivariance(const WeightParams& wp)
{
    std::mt19937 rng(52);
    std::uniform_real_distribution<double> U(-1, 1);
    double worst = 0;
    for (int s = 0; s < 20; ++s) {
        const std::array<double, 2> x{U(rng), U(rng)};
        const Mat2 K = K_matrix(x[0], x[1], wp);
        for (const auto& w : GroupElement::all()) {
            auto xw = w.apply(x);
            Mat2 W = group_mat(w);
            Mat2 want = W.transpose() * K * W;
            worst = std::max(worst, (K_matrix(xw[0], xw[1], wp) - want).max_abs() / K.max_abs());
        }
    }
    return make_check("K(xw) = w^{-1} K(x) w", params_json(wp), 1e-12, worst);
}

CheckResult K_homogeneity(const WeightParams& wp)
{
    double worst = 0;
    for (int j = 0; j < 32; ++j) {
        const double th = (j + 0.3) * 2 * std::numbers::pi / 32;
        const Mat2 K = K_angle(th, wp);
        for (double r : {0.5, 2.0})
            worst = std::max(worst, (K_matrix(r * std::cos(th), r * std::sin(th), wp) - K).max_abs() / K.max_abs());
    }
    return make_check("K homogeneous of degree 0", params_json(wp), 1e-12, worst);
}

CheckResult det_K(const WeightParams& wp)
{
    const double c = wp.c();
    const double tp = std::tan(std::numbers::pi * wp.k0), tq = std::tan(std::numbers::pi * wp.k1);
    const double want = c * c * (1 - tp * tp * tq * tq);
    auto [d1, d2] = d_coeffs<double>(wp.k0, wp.k1, c);
    double worst = std::abs(d1 * d2 - want) / (c * c);
    for (int j = 0; j < 16; ++j) {
        const double th = (j + 0.5) * 2 * std::numbers::pi / 16;
        worst = std::max(worst, std::abs(K_angle(th, wp).det() - want) / (c * c));
    }
    return make_check("det K = d1 d2 = c^2 (1 - tan^2 pi k0 tan^2 pi k1)", params_json(wp), 1e-9, worst);
}

CheckResult oracle_equivalence(const Params& p, int nmax, const QuadSpec& spec)
{
    const WeightParams wp = WeightParams::from(p);
    const auto fs = basis_and_radial(p, nmax);
    const auto num = gaussian_form_gram(fs, fs, wp, spec);
    std::vector<VPoly> ex;
    for (const auto& f : fs)
        ex.push_back(exp_laplacian(f, Rational(1, 2), p));
    double worst = 0;
    const size_t n = fs.size();
    for (size_t b = 0; b < n; ++b) {
        auto col = pair_tau_column(ex, ex[b], p);
        for (size_t a = 0; a < n; ++a) {
            const double exact = col[a].get_d();
            worst = std::max(worst, std::abs(num[a * n + b] - exact) / std::max(1.0, std::abs(exact)));
        }
    }
    nlohmann::json pj = params_json(p);
    pj["pairs"] = n * n;
    return make_check("gaussian_form_integral vs exact pair_gauss", pj, 1e-8, worst);
}

CheckResult gauss_w_invariance(const Params& p, const QuadSpec& spec)
{
    const WeightParams wp = WeightParams::from(p);
    const std::vector<VPoly> base = {basis_poly(1, 1, p), basis_poly(2, 3, p) + basis_poly(0, 1, p),
                                     basis_poly(3, 2, p).mul_scalar_poly(ScalarPoly::norm_sq_pow(1))};
    const auto ref = gaussian_form_gram(base, base, wp, spec);
    double worst = 0;
    for (const auto& w : GroupElement::all()) {
        std::vector<VPoly> moved;
        for (const auto& f : base)
            moved.push_back(group_act(w, f));
        const auto got = gaussian_form_gram(moved, moved, wp, spec);
        for (size_t j = 0; j < ref.size(); ++j)
            worst = std::max(worst, std::abs(got[j] - ref[j]));
    }
    return make_check("W-invariance of the Gaussian integral", params_json(p), 1e-10, worst);
}

CheckResult laguerre_transport(const Params& p, const QuadSpec& spec)
{
    const WeightParams wp = WeightParams::from(p);
    std::vector<LaguerreBasisElement> els;
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; n + 2 * m <= 4; ++m)
            for (int i = 1; i <= count_n(n); ++i)
                els.push_back(laguerre_element(m, n, i, p));
    std::vector<VPoly> fs;
    for (const auto& e : els)
        fs.push_back(e.poly);
    const auto g = gaussian_form_gram(fs, fs, wp, spec);
    const size_t n = fs.size();
    double worst = 0;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            const double want = a == b ? els[a].nu_g.get_d() : 0.0;
            worst = std::max(worst, std::abs(g[a * n + b] - want) / std::max(1.0, std::abs(want)));
        }
    return make_check("Gaussian integral on Laguerre elements", params_json(p), 1e-8, worst);
}

CheckResult conjecture_c(double k0, double k1, const QuadSpec& spec)
{
    const CEstimate e = estimate_c(k0, k1, spec);
    std::ostringstream os;
    os.precision(17);
    os << "estimate " << e.estimate << ", conjecture " << e.conjecture;
    return make_check("normalization c vs cos(pi k0) cos(pi k1) / (2 pi)", {{"k0", k0}, {"k1", k1}}, 1e-8,
                      e.abs_diff, os.str());
}

CheckResult fourier(const Params& p, const QuadSpec& spec, const std::vector<std::array<double, 2>>& ys,
                    LaguerreArg arg, PhaseConvention phase)
{
    const WeightParams wp = WeightParams::from(p);
    double worst = 0, tail = 0;
    for (int n = 0; 2 * n <= 4; ++n)
        for (int m = 0; m + 2 * n <= 4; ++m)
            for (int i = 1; i <= count_n(n); ++i)
                for (const auto& y : ys) {
                    auto r = fourier_eigen_check(m, n, i, y, p, wp, spec, arg, phase);
                    worst = std::max(worst, r.residual);
                    tail = std::max(tail, r.kernel_tail);
                }
    std::string name = std::string("Fourier eigenfunctions, Laguerre argument ") +
                       (arg == LaguerreArg::full ? "|x|^2" : "|x|^2/2") + ", phase " +
                       (phase == PhaseConvention::m_plus_2n ? "(-i)^(m+2n)" : "(-i)^(2m+n)");
    nlohmann::json pj = params_json(p);
    pj["truncN"] = spec.truncN;
    std::ostringstream os;
    os << "max kernel tail term " << tail;
    return make_check(name, pj, 1e-4, worst, os.str());
}

} // namespace checks

Report run_suite(std::string_view suite, const VerifyConfig& cfg)
{
    const Params& p = cfg.params;
    const int nmax = cfg.nmax;
    Report r;
    r.suite = std::string(suite);
    auto wparams = [&] {
        WeightParams wp = WeightParams::from(p);
        wp.precision = cfg.precision;
        wp.validate();
        return wp;
    };
    if (suite == "algebra") {
        r.checks.push_back(checks::left_action());
        r.checks.push_back(checks::commutation(p, 6));
        r.checks.push_back(checks::dunkl_commute(p, 6, 10));
        r.checks.push_back(checks::dunkl_equivariance(p, 5, 5));
        r.checks.push_back(checks::euler_relation(p, 6, 10));
    } else if (suite == "harmonic") {
        const int mmax = std::min(5, nmax / 2);
        r.checks.push_back(checks::harmonicity(p, nmax));
        r.checks.push_back(checks::pnonz(p, nmax));
        r.checks.push_back(checks::s12_action(p, nmax));
        r.checks.push_back(checks::dunkl_action(p, mmax));
        r.checks.push_back(checks::u12_eigen(p, mmax));
        r.checks.push_back(checks::basis_rank(p, nmax));
        r.checks.push_back(checks::norm_consistency(p, std::min(nmax, 10)));
        r.checks.push_back(checks::degree1_norms(p));
        r.checks.push_back(checks::norm_recurrences(p, mmax));
    } else if (suite == "forms") {
        r.checks.push_back(checks::tau_w_invariance(p, 4, 5));
        r.checks.push_back(checks::tau_adjoint(p, 5, 5));
        r.checks.push_back(checks::gauss_adjoint(p, 4, 5));
        r.checks.push_back(checks::orthogonality_grid(p));
        r.checks.push_back(checks::positivity(p));
        r.checks.push_back(checks::laguerre_orthogonality(p, 5));
    } else if (suite == "kernel") {
        const std::array<Rational, 2> y{Rational(1, 3), Rational(-2, 5)};
        r.checks.push_back(checks::kernel_reproduction(p, std::min(nmax, 6), y));
        r.checks.push_back(checks::kernel_intertwining(p, std::min(nmax, 4), y));
        r.checks.push_back(checks::kernel_equivariance(p, std::min(nmax, 3)));
        r.checks.push_back(checks::kernel_truncation(p));
        r.checks.push_back(checks::nu_limit(p));
        r.checks.push_back(checks::beta_bound(p));
    } else if (suite == "weight") {
        const WeightParams wp = wparams();
        r.checks.push_back(checks::det_L(wp, 200));
        r.checks.push_back(checks::branch_agreement(wp));
        r.checks.push_back(checks::ode_residual(wp));
        r.checks.push_back(checks::pde_residual(wp, 50));
        r.checks.push_back(checks::boundary_slope_axis(wp));
        r.checks.push_back(checks::boundary_slope_diagonal(wp));
        r.findings.push_back(checks::boundary_slope_diagonal(wp, true));
        r.checks.push_back(checks::positive_definite(wp, 1000));
        r.checks.push_back(checks::K_equivariance(wp));
        r.checks.push_back(checks::K_homogeneity(wp));
        r.checks.push_back(checks::det_K(wp));
        r.checks.push_back(checks::degenerate_form(Degenerate::k0_zero, 0.2, 2));
        r.checks.push_back(checks::degenerate_form(Degenerate::k1_zero, 0.2, 2));
        r.findings.push_back(checks::degenerate_form(Degenerate::k0_zero, 0.2, 1));
        r.findings.push_back(checks::degenerate_form(Degenerate::k1_zero, 0.2, 1));
    } else if (suite == "gaussian") {
        wparams();
        r.checks.push_back(checks::oracle_equivalence(p, std::min(nmax, 4), cfg.spec));
        r.checks.push_back(checks::gauss_w_invariance(p, cfg.spec));
        r.checks.push_back(checks::laguerre_transport(p, cfg.spec));
        r.findings.push_back(checks::conjecture_c(p.k0_d(), p.k1_d(), cfg.spec));
    } else if (suite == "fourier") {
        wparams();
        const std::vector<std::array<double, 2>> ys = {{0.6, 0.3}, {-0.5, 0.7}, {0.2, -0.9}};
        r.checks.push_back(checks::fourier(p, cfg.spec, ys, LaguerreArg::full, PhaseConvention::two_m_plus_n));
        r.findings.push_back(checks::fourier(p, cfg.spec, ys, LaguerreArg::full, PhaseConvention::m_plus_2n));
        r.findings.push_back(checks::fourier(p, cfg.spec, ys, LaguerreArg::half, PhaseConvention::two_m_plus_n));
        r.findings.push_back(checks::fourier(p, cfg.spec, ys, LaguerreArg::half, PhaseConvention::m_plus_2n));
    } else {
        throw UsageError("unknown suite: " + std::string(suite));
    }
    return r;
}

} // namespace b2dunkl
