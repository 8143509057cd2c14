#include "b2dunkl/errors.hpp"
#include "b2dunkl/kernel.hpp"
#include "b2dunkl/quad.hpp"

#include <cmath>
#include <map>

namespace b2dunkl {

FourierCheck fourier_eigen_check(int m, int n, int i, const std::array<double, 2>& y,
                                 const Params& p, const WeightParams& wp, const QuadSpec& spec,
                                 LaguerreArg arg, PhaseConvention phase)
{
    wp.validate();
    if (m < 0 || n < 0)
        throw DomainError("Fourier check needs m, n >= 0");
    const VPoly g = laguerre_element(m, n, i, p, arg).poly;
    std::map<int, std::vector<std::pair<Monomial, std::array<double, 2>>>> parts;
    for (const auto& [mono, c] : g.terms())
        parts[mono.degree()].push_back({mono, {c.c1.get_d(), c.c2.get_d()}});

    const int N = spec.truncN;
    const KernelEvaluator ev(p, N);
    const int dmax = N + parts.rbegin()->first;
    std::vector<double> M(dmax + 1);
    for (int k = 0; k <= dmax; ++k)
        M[k] = gaussian_moment(k);
    const double ysq = y[0] * y[0] + y[1] * y[1];

    // Components: Re/Im of the two output entries, then the tail magnitude.
    auto integrand = [&](const AngularNode& nd, double* out) {
        const double c = std::cos(nd.theta), s = std::sin(nd.theta);
        const Mat2 K = K_panel(nd.panel, nd.dl, nd.dr, wp);
        std::map<int, std::array<double, 2>> kg;
        for (const auto& [k, terms] : parts) {
            std::array<double, 2> v{0, 0};
            for (const auto& [mono, cf] : terms) {
                const double mv = std::pow(c, mono.a) * std::pow(s, mono.b);
                v[0] += cf[0] * mv;
                v[1] += cf[1] * mv;
            }
            kg[k] = {K.a11 * v[0] + K.a12 * v[1], K.a21 * v[0] + K.a22 * v[1]};
        }
        const auto P = ev.P_values({c, s}, y);
        std::array<std::complex<double>, 2> acc{};
        double tail = 0;
        const std::complex<double> phases[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
        for (int d = 0; d <= N; ++d) {
            // E_d at (theta-hat, y); |x| = 1 on the circle.
            std::array<std::array<double, 2>, 2> E{};
            double coef = 1;
            for (int j = 0; 2 * j <= d; ++j) {
                if (j > 0)
                    coef *= ysq / (4.0 * j) * (d - j + 1) / (double(d - 2 * j + 1) * (d - 2 * j + 2));
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        E[a][b] += coef * P[d - 2 * j].e[a][b];
            }
            double term_mag = 0;
            for (const auto& [k, w] : kg)
                for (int a = 0; a < 2; ++a) {
                    const double v = M[d + k] * (E[a][0] * w[0] + E[a][1] * w[1]);
                    acc[a] += phases[d % 4] * v;
                    term_mag = std::max(term_mag, std::abs(v));
                }
            if (d == N)
                tail = term_mag;
        }
        out[0] = acc[0].real();
        out[1] = acc[0].imag();
        out[2] = acc[1].real();
        out[3] = acc[1].imag();
        out[4] = tail;
    };
    auto r = angular_integrate(integrand, 5, spec);

    FourierCheck fc;
    fc.lhs = {std::complex<double>(r.values[0], r.values[1]),
              std::complex<double>(r.values[2], r.values[3])};
    fc.kernel_tail = r.values[4];
    auto [g1, g2] = g.eval(y[0], y[1]);
    const double gauss = std::exp(-ysq / 2);
    const int e = phase == PhaseConvention::m_plus_2n ? m + 2 * n : 2 * m + n;
    const std::complex<double> phases[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    fc.rhs = {phases[e % 4] * (g1 * gauss), phases[e % 4] * (g2 * gauss)};
    fc.residual = std::max(std::abs(fc.lhs[0] - fc.rhs[0]), std::abs(fc.lhs[1] - fc.rhs[1]));
    return fc;
}

} // namespace b2dunkl
