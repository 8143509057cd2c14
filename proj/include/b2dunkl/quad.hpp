#pragma once

#include "b2dunkl/execution.hpp"
#include "b2dunkl/forms.hpp"
#include "b2dunkl/params.hpp"
#include "b2dunkl/vpoly.hpp"
#include "b2dunkl/weight.hpp"

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace b2dunkl {

/// Angular quadrature over [0, 2pi) split into the eight octant panels
/// [j pi/4, (j+1) pi/4]; tanh-sinh on each panel.
struct QuadSpec {
    double angular_tol = 1e-10;
    int max_levels = 9;   // step h = 2^-level in the tanh-sinh variable
    int min_levels = 3;
    double tmax = 6.0;    // truncation of the tanh-sinh variable
    int truncN = 60;      // kernel series cutoff for the Fourier check
    Execution execution = Execution::parallel;
};

inline constexpr int panel_count = 8;

/// M_k = int_0^inf r^{k+1} exp(-r^2/2) dr = 2^{k/2} Gamma(k/2 + 1).
double gaussian_moment(int k);

/// One quadrature node: panel index, angle, and its distances to the left and
/// right ends of the panel (accurate even when tiny).
struct AngularNode {
    int panel = 0;
    double theta = 0;
    double dl = 0;
    double dr = 0;
};

/// Writes dim values for the node into out.
using PanelIntegrand = std::function<void(const AngularNode&, double* out)>;

struct QuadResult {
    std::vector<double> values;
    double error_estimate = 0;
    int levels = 0;
    long evaluations = 0;
};

/// Vector-valued angular integral. Every component must meet
/// |I_l - I_{l-1}| <= angular_tol * max(1, |I_l|); NonConvergence otherwise.
/// Serial and parallel execution give bitwise-identical results.
QuadResult angular_integrate(const PanelIntegrand& f, int dim, const QuadSpec& spec);

/// Scalar convenience form over [0, 2pi).
double angular_integrate(const std::function<double(double)>& f, const QuadSpec& spec);

/// int f(x) K(x) g(x)^T exp(-|x|^2/2) dx with exact radial moments.
double gaussian_form_integral(const VPoly& f, const VPoly& g, const WeightParams& wp,
                              const QuadSpec& spec);

/// All pairs at once: entry [a * gs.size() + b] is the integral for (fs[a], gs[b]).
std::vector<double> gaussian_form_gram(const std::vector<VPoly>& fs, const std::vector<VPoly>& gs,
                                       const WeightParams& wp, const QuadSpec& spec);

struct CEstimate {
    double estimate = 0;
    double conjecture = 0;
    double abs_diff = 0;
};

/// 1 / int K_11 exp(-|x|^2/2) dx computed with c = 1.
CEstimate estimate_c(double k0, double k1, const QuadSpec& spec,
                     Precision precision = Precision::standard);

enum class PhaseConvention { m_plus_2n, two_m_plus_n }; // (-i)^{m+2n} or (-i)^{2m+n}

struct FourierCheck {
    std::array<std::complex<double>, 2> lhs{};
    std::array<std::complex<double>, 2> rhs{};
    double residual = 0;
    double kernel_tail = 0; // magnitude of the last kernel term at the quadrature nodes
};

/// Numerical F phi_{m,n,i}(y) against (-i)^{phase} phi_{m,n,i}(y)*, where
/// phi = L_m^{(n)}(arg) p_{n,i} exp(-|x|^2/2).
FourierCheck fourier_eigen_check(int m, int n, int i, const std::array<double, 2>& y,
                                 const Params& p, const WeightParams& wp, const QuadSpec& spec,
                                 LaguerreArg arg, PhaseConvention phase);

} // namespace b2dunkl
