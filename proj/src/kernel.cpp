#include "b2dunkl/kernel.hpp"

#include "b2dunkl/errors.hpp"
#include "b2dunkl/special.hpp"

#include <cmath>

namespace b2dunkl {

namespace {

int index_count(int n) { return n == 0 ? 2 : 4; }

Rational e_coeff(int n, int m)
{
    // 1 / (4^m m! (n-2m+1)_m)
    return Rational(1) / (pow_q(Rational(4), m) * factorial_q(m) * pochhammer(Rational(n - 2 * m + 1), m));
}

KernelValue eval_rows(const std::array<VPoly, 2>& rows, const std::array<Rational, 2>& x)
{
    KernelValue out;
    for (int a = 0; a < 2; ++a) {
        auto [v1, v2] = rows[a].eval(x[0], x[1]);
        out.e[a] = {v1, v2};
    }
    return out;
}

} // namespace

std::array<VPoly, 2> kernel_P_rows(int n, const std::array<Rational, 2>& y, const Params& p)
{
    if (n < 0)
        throw DomainError("kernel degree must be nonnegative");
    std::array<VPoly, 2> rows;
    for (int i = 1; i <= index_count(n); ++i) {
        Rational nu = norm_pi(n, i, p);
        if (nu == 0)
            throw ZeroNorm("basis element has zero norm at these parameters");
        VPoly pi = basis_poly(n, i, p);
        auto [py1, py2] = pi.eval(y[0], y[1]);
        rows[0] += pi * (py1 / nu);
        rows[1] += pi * (py2 / nu);
    }
    return rows;
}

std::array<VPoly, 2> kernel_E_rows(int n, const std::array<Rational, 2>& y, const Params& p)
{
    std::array<VPoly, 2> rows;
    const Rational ysq = y[0] * y[0] + y[1] * y[1];
    for (int m = 0; 2 * m <= n; ++m) {
        auto P = kernel_P_rows(n - 2 * m, y, p);
        const Rational c = e_coeff(n, m) * pow_q(ysq, m);
        const ScalarPoly xsq = ScalarPoly::norm_sq_pow(m);
        for (int a = 0; a < 2; ++a)
            rows[a] += P[a].mul_scalar_poly(xsq) * c;
    }
    return rows;
}

KernelValue kernel_P(int n, const std::array<Rational, 2>& x, const std::array<Rational, 2>& y,
                     const Params& p)
{
    return eval_rows(kernel_P_rows(n, y, p), x);
}

KernelValue kernel_E(int n, const std::array<Rational, 2>& x, const std::array<Rational, 2>& y,
                     const Params& p)
{
    return eval_rows(kernel_E_rows(n, y, p), x);
}

KernelEvaluator::KernelEvaluator(const Params& p, int N)
    : p_(p), N_(N), kplus_(to_double(p.kplus())), kminus_(to_double(p.kminus()))
{
    if (N < 0)
        throw DomainError("kernel cutoff must be nonnegative");
    inv_nu_.resize(N + 1);
    double scale = 1; // 2^n n!
    for (int n = 0; n <= N; ++n) {
        if (n > 0)
            scale *= 2.0 * n;
        for (int i = 1; i <= 4; ++i) {
            if (i > index_count(n)) {
                inv_nu_[n][i - 1] = 0;
                continue;
            }
            if (norm_prime<Rational>(n, i, p.kplus(), p.kminus()) == 0)
                throw ZeroNorm("basis element has zero norm at these parameters");
            inv_nu_[n][i - 1] = 1.0 / (scale * norm_prime<double>(n, i, kplus_, kminus_));
        }
    }
}

std::vector<KernelValueT<double>> KernelEvaluator::P_values(const std::array<double, 2>& x,
                                                            const std::array<double, 2>& y) const
{
    auto bx = basis_values<double>(N_, x[0], x[1], kplus_, kminus_);
    auto by = basis_values<double>(N_, y[0], y[1], kplus_, kminus_);
    std::vector<KernelValueT<double>> out(N_ + 1);
    for (int n = 0; n <= N_; ++n)
        for (int i = 0; i < index_count(n); ++i)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    out[n].e[a][b] += by[n][i][a] * bx[n][i][b] * inv_nu_[n][i];
    return out;
}

KernelSeries KernelEvaluator::truncated(const std::array<double, 2>& x, const std::array<double, 2>& y,
                                        KernelMode mode) const
{
    const auto P = P_values(x, y);
    const double r = (x[0] * x[0] + x[1] * x[1]) * (y[0] * y[0] + y[1] * y[1]);
    KernelSeries out;
    const std::complex<double> phases[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    for (int n = 0; n <= N_; ++n) {
        KernelValueT<double> En;
        double c = 1; // r^m / (4^m m! (n-2m+1)_m)
        for (int m = 0; 2 * m <= n; ++m) {
            if (m > 0)
                c *= r / (4.0 * m) * (n - m + 1) / (double(n - 2 * m + 1) * (n - 2 * m + 2));
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    En.e[a][b] += c * P[n - 2 * m].e[a][b];
        }
        const std::complex<double> ph = mode == KernelMode::real ? std::complex<double>(1) : phases[n % 4];
        double mag = 0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                out.value.e[a][b] += ph * En.e[a][b];
                mag = std::max(mag, std::abs(En.e[a][b]));
            }
        if (n == N_)
            out.last_term = mag;
    }
    return out;
}

KernelSeries kernel_E_truncated(const std::array<double, 2>& x, const std::array<double, 2>& y,
                                int N, const Params& p, KernelMode mode)
{
    return KernelEvaluator(p, N).truncated(x, y, mode);
}

double omega(double u, double z)
{
    if (!(u > 0))
        throw DomainError("omega needs u > 0");
    const double g = gamma_fn(u);
    return g * g * rgamma(u + z) * rgamma(u - z);
}

double beta_growth(const VPoly& f, const std::array<double, 2>& x)
{
    auto [a, b] = f.eval(x[0], x[1]);
    return a * a + b * b;
}

} // namespace b2dunkl
