#pragma once

#include "b2dunkl/execution.hpp"
#include "b2dunkl/params.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace b2dunkl {

template <class T>
struct Mat2T {
    T a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    static Mat2T identity() { return {1, 0, 0, 1}; }
    T det() const { return a11 * a22 - a12 * a21; }
    Mat2T transpose() const { return {a11, a21, a12, a22}; }
    Mat2T operator*(const Mat2T& o) const
    {
        return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
                a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
    }
    Mat2T operator+(const Mat2T& o) const { return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22}; }
    Mat2T operator-(const Mat2T& o) const { return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22}; }
    Mat2T operator*(T s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }
    T max_abs() const
    {
        using std::abs;
        T m = abs(a11);
        for (T v : {a12, a21, a22})
            if (abs(v) > m)
                m = abs(v);
        return m;
    }
    template <class U>
    Mat2T<U> cast() const
    {
        return {U(a11), U(a12), U(a21), U(a22)};
    }
};

using Mat2 = Mat2T<double>;

/// sigma = (1/sqrt 2) [[1, 1], [1, -1]].
Mat2 sigma_matrix();

enum class CMode { conjecture, unit, numeric };
enum class Precision { standard, extended };

struct WeightParams {
    double k0 = 0;
    double k1 = 0;
    CMode c_mode = CMode::conjecture;
    double c_value = 1; // used when c_mode == numeric
    Precision precision = Precision::standard;

    static WeightParams from(const Params& p, CMode mode = CMode::conjecture);

    /// |k0 +- k1| < 1/2, else DomainError.
    void validate() const;
    double c() const;
};

/// cos(pi k0) cos(pi k1) / (2 pi).
double c_conjecture(double k0, double k1);

/// 2^{2k0-1}/sqrt(pi) * Gamma(1/2+k1) Gamma(1/2+k0) / Gamma(1/2+k0+k1).
template <class T>
T eta(T k0, T k1);

/// (d1, d2) for normalization c.
template <class T>
std::pair<T, T> d_coeffs(T k0, T k1, T c);

/// Series form of L(u), valid for any 0 < u < 1 but used for u^2 <= 1/2.
template <class T>
Mat2T<T> L_direct(T u, T k0, T k1);

/// Connection form of L(u) around u = 1. omega = 1 - u^2 is passed separately
/// so callers near the diagonal can supply it without cancellation.
template <class T>
Mat2T<T> L_factored(T u, T omega, T k0, T k1);

inline constexpr double theta_switch = 0.5;

/// L(u) for 0 < u < 1, switching between the two forms at u^2 = theta_switch.
Mat2 L_matrix(double u, const WeightParams& wp);
Mat2 L_matrix(double u, double omega, const WeightParams& wp);

/// K(u) = L^T diag(d1, d2) L on the fundamental region 0 < x2 < x1, u = x2/x1.
Mat2 K_fundamental(double u, const WeightParams& wp);
Mat2 K_fundamental(double u, double omega, const WeightParams& wp);

/// K(x) anywhere off the mirrors via K(x0 w) = w^{-1} K(x0) w.
/// Throws OnMirror on a mirror and DomainError outside the validity square.
Mat2 K_matrix(double x1, double x2, const WeightParams& wp);

/// K(cos theta, sin theta).
Mat2 K_angle(double theta, const WeightParams& wp);

/// K on octant panel j (covering [j pi/4, (j+1) pi/4]) at the node whose
/// distances to the left and right panel ends are dl and dr. Both distances
/// are used directly so the mirror singularities are resolved accurately.
Mat2 K_panel(int j, double dl, double dr, const WeightParams& wp);

/// Closed forms at k0 = 0 or k1 = 0. exponent_scale multiplies k in the
/// exponents: 1 is the form as usually printed, 2 the one consistent with
/// L^T D L.
enum class Degenerate { k0_zero, k1_zero };
Mat2 K_degenerate(double x1, double x2, const WeightParams& wp, Degenerate which,
                  double exponent_scale);

struct SampleRow {
    double theta = 0;
    std::optional<Mat2> k; // nullopt on a mirror
};

/// K(cos theta, sin theta) on the grid; conjugated gives sigma K sigma.
std::vector<SampleRow> weight_sample(const std::vector<double>& thetas, const WeightParams& wp,
                                     bool conjugated = false,
                                     Execution ex = Execution::parallel);

/// theta_j = (j + 1/2) (pi/4) / steps, inside the open fundamental sector.
std::vector<double> fundamental_grid(int steps);

/// CSV with header theta,k11,k12,k22 and 17 significant digits; metadata
/// lines start with '#'. Mirror points are written as empty fields.
void write_weight_csv(std::ostream& os, const std::vector<SampleRow>& rows,
                      const std::vector<std::string>& metadata = {});
std::vector<SampleRow> read_weight_csv(std::istream& is);

} // namespace b2dunkl
