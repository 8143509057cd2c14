// Acceptance criteria 1-13. One PASS/FAIL line per criterion; criterion 11
// is reported but does not change the exit status.
#include "b2dunkl/verify.hpp"

#include <chrono>
#include <exception>
#include <cstdio>
#include <string>
#include <vector>

using namespace b2dunkl;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    void add(const CheckResult& c)
    {
        pass = pass && c.pass;
        char buf[512];
        std::snprintf(buf, sizeof buf, "    %s %s: measured %.3g, tol %.3g%s%s %s", c.pass ? "ok  " : "FAIL",
                      c.test.c_str(), c.measured, c.tolerance, c.note.empty() ? "" : "; ", c.note.c_str(),
                      c.params.dump().c_str());
        lines.emplace_back(buf);
    }
    void info(const CheckResult& c)
    {
        char buf[512];
        std::snprintf(buf, sizeof buf, "    info %s: measured %.3g, tol %.3g%s%s", c.test.c_str(), c.measured,
                      c.tolerance, c.note.empty() ? "" : "; ", c.note.c_str());
        lines.emplace_back(buf);
    }
};

// Pinned tolerances.
constexpr double tol_detL = 1e-10;
constexpr double tol_pde = 1e-6;
constexpr double tol_slope = 0.05;
constexpr double tol_degenerate = 1e-10;
constexpr double tol_oracle = 1e-8;
constexpr double tol_conjecture = 1e-8;
constexpr double tol_fourier = 1e-4;

const std::vector<Params> exact_draws = {
    {Rational(1, 4), Rational(1, 8)},
    {Rational(-1, 3), Rational(1, 5)},
    {Rational(2, 5), Rational(-1, 10)},
};

WeightParams wparams(double k0, double k1)
{
    WeightParams wp;
    wp.k0 = k0;
    wp.k1 = k1;
    return wp;
}

void require_tol(const CheckResult& c, double tol)
{
    if (c.tolerance != tol) {
        std::fprintf(stderr, "tolerance drift in '%s'\n", c.test.c_str());
        std::exit(3);
    }
}

Outcome ac1()
{
    Outcome o;
    for (const auto& p : exact_draws)
        o.add(checks::norm_consistency(p, 10));
    return o;
}

Outcome ac2()
{
    Outcome o;
    for (const auto& p : exact_draws)
        o.add(checks::degree1_norms(p));
    return o;
}

Outcome ac3()
{
    Outcome o;
    for (const auto& p : exact_draws)
        o.add(checks::harmonicity(p, 12));
    return o;
}

Outcome ac4()
{
    Outcome o;
    for (const auto& p : exact_draws)
        o.add(checks::pnonz(p, 12));
    return o;
}

Outcome ac5()
{
    Outcome o;
    const std::array<Rational, 2> ys[] = {{Rational(1, 3), Rational(-2, 5)}, {Rational(7, 4), Rational(2, 9)}};
    // (2/5, -1/10) has nu(p_{1,4}) = 0, so no kernel there
    for (const auto& p : {exact_draws[0], exact_draws[1], Params(Rational(1, 7), Rational(2, 9))})
        for (const auto& y : ys)
            o.add(checks::kernel_reproduction(p, 6, y));
    return o;
}

Outcome ac6()
{
    Outcome o;
    for (auto wp : {wparams(0.3, 0.1), wparams(-0.2, 0.15), wparams(0.1, -0.35), wparams(0.45, 0.04),
                    wparams(-0.05, -0.3)}) {
        auto d = checks::det_L(wp, 200);
        auto b = checks::branch_agreement(wp);
        require_tol(d, tol_detL);
        require_tol(b, tol_detL);
        o.add(d);
        o.add(b);
    }
    return o;
}

Outcome ac7()
{
    Outcome o;
    for (auto wp : {wparams(0.3, 0.1), wparams(-0.2, 0.15)}) {
        auto c = checks::pde_residual(wp, 50);
        require_tol(c, tol_pde);
        o.add(c);
    }
    return o;
}

Outcome ac8()
{
    Outcome o;
    const auto wp = wparams(0.3, 0.1);
    auto axis = checks::boundary_slope_axis(wp);
    auto diag = checks::boundary_slope_diagonal(wp, true); // 1 + 2k0 as stated
    require_tol(axis, tol_slope);
    require_tol(diag, tol_slope);
    o.add(axis);
    o.add(diag);
    o.info(checks::boundary_slope_diagonal(wp, false));
    return o;
}

Outcome ac9()
{
    Outcome o;
    for (double k : {0.1, 0.3}) {
        for (auto which : {Degenerate::k0_zero, Degenerate::k1_zero}) {
            auto c = checks::degenerate_form(which, k, 1); // exponents as printed
            require_tol(c, tol_degenerate);
            o.add(c);
            o.info(checks::degenerate_form(which, k, 2));
        }
    }
    return o;
}

Outcome ac10()
{
    Outcome o;
    for (const auto& p : {Params(Rational(3, 10), Rational(1, 10)), Params(Rational(-1, 5), Rational(3, 20))}) {
        auto c = checks::oracle_equivalence(p, 4, QuadSpec{});
        require_tol(c, tol_oracle);
        o.add(c);
    }
    return o;
}

Outcome ac11()
{
    Outcome o;
    const std::pair<double, double> draws[] = {{0.3, 0.1}, {-0.2, 0.15}, {0.45, 0.04}, {0.1, -0.35}, {0.0, 0.25}};
    for (auto [k0, k1] : draws) {
        auto c = checks::conjecture_c(k0, k1, QuadSpec{});
        require_tol(c, tol_conjecture);
        o.add(c);
    }
    return o;
}

Outcome ac12()
{
    Outcome o;
    o.add(checks::nu_limit(Params(Rational(1, 4), Rational(1, 8))));
    return o;
}

Outcome ac13()
{
    Outcome o;
    const std::vector<std::array<double, 2>> ys = {{0.6, 0.3}, {-0.5, 0.7}, {0.2, -0.9}, {0.0, 1.0}};
    const Params p(Rational(1, 4), Rational(1, 8));
    auto c = checks::fourier(p, QuadSpec{}, ys, LaguerreArg::full, PhaseConvention::two_m_plus_n);
    require_tol(c, tol_fourier);
    o.add(c);
    o.lines.emplace_back("    convention: L_m^(n)(|x|^2) p_{n,i}(x) exp(-|x|^2/2), eigenvalue (-i)^(2m+n)");
    o.info(checks::fourier(p, QuadSpec{}, ys, LaguerreArg::full, PhaseConvention::m_plus_2n));
    o.info(checks::fourier(p, QuadSpec{}, ys, LaguerreArg::half, PhaseConvention::two_m_plus_n));
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        Outcome (*run)();
        bool gating;
    };
    const Criterion all[] = {
        {1, "exact norms n <= 10", ac1, true},
        {2, "degree-1 norms", ac2, true},
        {3, "harmonicity n <= 12", ac3, true},
        {4, "values at (1, i) n <= 12", ac4, true},
        {5, "kernel reproduction n <= 6", ac5, true},
        {6, "det L = 1 and branch agreement", ac6, true},
        {7, "PDE residual for K", ac7, true},
        {8, "boundary exponents", ac8, true},
        {9, "degenerate closed forms", ac9, true},
        {10, "Gaussian form oracle equivalence", ac10, true},
        {11, "normalization conjecture (finding)", ac11, false},
        {12, "nu' limits", ac12, true},
        {13, "Fourier eigenfunctions", ac13, true},
    };
    bool ok = true;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.lines.push_back(std::string("    error: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("AC%d %s: %s (%.1fs)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs);
        for (const auto& l : o.lines)
            std::printf("%s\n", l.c_str());
        std::fflush(stdout);
        if (c.gating && !o.pass)
            ok = false;
    }
    return ok ? 0 : 1;
}
