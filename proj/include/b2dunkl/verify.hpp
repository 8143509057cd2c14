#pragma once

#include "b2dunkl/params.hpp"
#include "b2dunkl/quad.hpp"
#include "b2dunkl/report.hpp"
#include "b2dunkl/weight.hpp"

#include <array>
#include <random>
#include <string_view>
#include <vector>

namespace b2dunkl {

/// Random polynomial with small integer coefficients and every monomial of
/// degree <= maxdeg present with probability 1/2 (or only degree maxdeg).
VPoly random_vpoly(std::mt19937& rng, int maxdeg, bool homogeneous = false);

nlohmann::json params_json(const Params& p);
nlohmann::json params_json(const WeightParams& wp);

// Exact checks report the number of failing cases as `measured` with
// tolerance 0.
namespace checks {

// algebra
CheckResult left_action();
CheckResult commutation(const Params& p, int maxdeg);
CheckResult dunkl_commute(const Params& p, int maxdeg, int samples);
CheckResult dunkl_equivariance(const Params& p, int maxdeg, int samples);
CheckResult euler_relation(const Params& p, int maxdeg, int samples);

// harmonic
CheckResult harmonicity(const Params& p, int nmax);
CheckResult pnonz(const Params& p, int nmax);
CheckResult s12_action(const Params& p, int nmax);
CheckResult dunkl_action(const Params& p, int mmax);
CheckResult u12_eigen(const Params& p, int mmax);
CheckResult basis_rank(const Params& p, int nmax);
CheckResult norm_consistency(const Params& p, int nmax);
CheckResult degree1_norms(const Params& p);
CheckResult norm_recurrences(const Params& p, int mmax);

// forms
CheckResult tau_w_invariance(const Params& p, int maxdeg, int samples);
CheckResult tau_adjoint(const Params& p, int maxdeg, int samples);
CheckResult gauss_adjoint(const Params& p, int maxdeg, int samples);
CheckResult orthogonality_grid(const Params& p);
CheckResult positivity(const Params& p);
CheckResult laguerre_orthogonality(const Params& p, int maxdeg);

// kernel
CheckResult kernel_reproduction(const Params& p, int nmax, const std::array<Rational, 2>& y);
CheckResult kernel_intertwining(const Params& p, int nmax, const std::array<Rational, 2>& y);
CheckResult kernel_equivariance(const Params& p, int nmax);
CheckResult kernel_truncation(const Params& p);
CheckResult nu_limit(const Params& p);
CheckResult beta_bound(const Params& p);

// weight
CheckResult det_L(const WeightParams& wp, int points);
CheckResult branch_agreement(const WeightParams& wp);
CheckResult ode_residual(const WeightParams& wp);
CheckResult pde_residual(const WeightParams& wp, int points);
CheckResult boundary_slope_axis(const WeightParams& wp);
// Expected slope 1 - 2|k0| (dominant term) or, with as_printed, 1 + 2k0.
CheckResult boundary_slope_diagonal(const WeightParams& wp, bool as_printed = false);
CheckResult degenerate_form(Degenerate which, double k, double exponent_scale);
CheckResult positive_definite(const WeightParams& wp, int points);
CheckResult K_equivariance(const WeightParams& wp);
CheckResult K_homogeneity(const WeightParams& wp);
CheckResult det_K(const WeightParams& wp);

// gaussian
CheckResult oracle_equivalence(const Params& p, int nmax, const QuadSpec& spec);
CheckResult gauss_w_invariance(const Params& p, const QuadSpec& spec);
CheckResult laguerre_transport(const Params& p, const QuadSpec& spec);
CheckResult conjecture_c(double k0, double k1, const QuadSpec& spec);

// fourier
CheckResult fourier(const Params& p, const QuadSpec& spec, const std::vector<std::array<double, 2>>& ys,
                    LaguerreArg arg, PhaseConvention phase);

} // namespace checks

struct VerifyConfig {
    Params params;
    int nmax = 10;
    QuadSpec spec;
    Precision precision = Precision::standard;
};

/// Runs a named suite: algebra, harmonic, forms, kernel, weight, gaussian,
/// fourier. UsageError for an unknown name, DomainError when the parameters
/// fall outside the suite's validity region.
Report run_suite(std::string_view suite, const VerifyConfig& cfg);

} // namespace b2dunkl
