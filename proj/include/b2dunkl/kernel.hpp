#pragma once

#include "b2dunkl/harmonic.hpp"
#include "b2dunkl/params.hpp"
#include "b2dunkl/vpoly.hpp"

#include <array>
#include <complex>
#include <vector>

namespace b2dunkl {

/// Entries E_ab of sum_ab E_ab(x, y) s_a t_b; a indexes s (the y side),
/// b indexes t (the x side).
template <class T>
struct KernelValueT {
    std::array<std::array<T, 2>, 2> e{};
    bool operator==(const KernelValueT&) const = default;
};
using KernelValue = KernelValueT<Rational>;

/// P_n with y fixed: row a is the x-polynomial sum_i p_{n,i}(y)_a p_{n,i}(x) / nu.
/// Throws ZeroNorm at radical parameters.
std::array<VPoly, 2> kernel_P_rows(int n, const std::array<Rational, 2>& y, const Params& p);

/// E_n with y fixed, rows as in kernel_P_rows.
std::array<VPoly, 2> kernel_E_rows(int n, const std::array<Rational, 2>& y, const Params& p);

KernelValue kernel_P(int n, const std::array<Rational, 2>& x, const std::array<Rational, 2>& y,
                     const Params& p);
KernelValue kernel_E(int n, const std::array<Rational, 2>& x, const std::array<Rational, 2>& y,
                     const Params& p);

/// p_{n,i}(x) for n <= nmax by running the recurrence on point values.
/// Entry [n][i-1] = (f1(x), f2(x)); at n = 0 entries 3, 4 hold the aliases.
template <class T>
std::vector<std::array<std::array<T, 2>, 4>> basis_values(int nmax, T x1, T x2, T kplus, T kminus)
{
    std::vector<std::array<std::array<T, 2>, 4>> v(nmax + 1);
    v[0] = {{{1, 0}, {0, 1}, {1, 0}, {0, -1}}};
    auto apply_x = [&](const std::array<T, 2>& q1, const std::array<T, 2>& q2, std::array<T, 2>& r1,
                       std::array<T, 2>& r2) {
        for (int c = 0; c < 2; ++c) {
            r1[c] = x1 * q1[c] + x2 * q2[c];
            r2[c] = -x2 * q1[c] + x1 * q2[c];
        }
    };
    for (int n = 1; n <= nmax; ++n) {
        const auto& pr = v[n - 1];
        auto& cur = v[n];
        if (n % 2 == 1) {
            apply_x(pr[0], pr[1], cur[0], cur[1]);
            apply_x(pr[2], pr[3], cur[2], cur[3]);
        } else {
            const T odd = T(n - 1);
            auto step = [&](const std::array<T, 2>& q1, const std::array<T, 2>& q2, T lam,
                            std::array<T, 2>& r1, std::array<T, 2>& r2) {
                const T a = (odd + 2 * lam) / odd, b = (odd - 2 * lam) / odd;
                apply_x({a * q1[0], a * q1[1]}, {b * q2[0], b * q2[1]}, r1, r2);
            };
            step(pr[2], pr[3], kminus, cur[0], cur[1]);
            step(pr[0], pr[1], kplus, cur[2], cur[3]);
        }
    }
    return v;
}

enum class KernelMode { real, complex_y_rotation };

struct KernelSeries {
    KernelValueT<std::complex<double>> value;
    double last_term = 0; // max-entry magnitude of the n = N term
};

/// Floating-point evaluator for truncated E(x, y) = sum_{n <= N} E_n(x, y).
/// Norms are computed once at construction.
class KernelEvaluator {
public:
    KernelEvaluator(const Params& p, int N);

    int cutoff() const { return N_; }

    /// P_n(x, y) for n <= N, entries as in KernelValue.
    std::vector<KernelValueT<double>> P_values(const std::array<double, 2>& x,
                                               const std::array<double, 2>& y) const;
    /// In complex_y_rotation mode the n-th term carries (-i)^n, giving the
    /// truncation of E(x, -iy).
    KernelSeries truncated(const std::array<double, 2>& x, const std::array<double, 2>& y,
                           KernelMode mode) const;

private:
    Params p_;
    int N_;
    double kplus_, kminus_;
    std::vector<std::array<double, 4>> inv_nu_;
};

KernelSeries kernel_E_truncated(const std::array<double, 2>& x, const std::array<double, 2>& y,
                                int N, const Params& p, KernelMode mode = KernelMode::real);

/// Gamma(u)^2 / (Gamma(u+z) Gamma(u-z)). DomainError if u <= 0.
double omega(double u, double z);

/// f1(x)^2 + f2(x)^2.
double beta_growth(const VPoly& f, const std::array<double, 2>& x);

} // namespace b2dunkl
