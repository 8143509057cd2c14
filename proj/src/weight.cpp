#include "b2dunkl/weight.hpp"

#include "b2dunkl/errors.hpp"
#include "b2dunkl/group.hpp"
#include "b2dunkl/special.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace b2dunkl {

Mat2 sigma_matrix()
{
    const double s = 1 / std::numbers::sqrt2;
    return {s, s, s, -s};
}

WeightParams WeightParams::from(const Params& p, CMode mode)
{
    WeightParams wp;
    wp.k0 = p.k0_d();
    wp.k1 = p.k1_d();
    wp.c_mode = mode;
    return wp;
}

void WeightParams::validate() const
{
    if (!(std::abs(k0 + k1) < 0.5 && std::abs(k0 - k1) < 0.5))
        throw DomainError("weight parameters must satisfy |k0 +- k1| < 1/2");
}

double c_conjecture(double k0, double k1)
{
    return std::cos(std::numbers::pi * k0) * std::cos(std::numbers::pi * k1) / (2 * std::numbers::pi);
}

double WeightParams::c() const
{
    switch (c_mode) {
    case CMode::conjecture: return c_conjecture(k0, k1);
    case CMode::unit: return 1.0;
    case CMode::numeric: return c_value;
    }
    return 1.0;
}

template <class T>
T eta(T k0, T k1)
{
    const T half = T(1) / 2;
    const T sqrt_pi = std::sqrt(std::numbers::pi_v<T>);
    return std::pow(T(2), 2 * k0 - 1) / sqrt_pi * gamma_fn(half + k1) * gamma_fn(half + k0) *
           rgamma(half + k0 + k1);
}

template <class T>
std::pair<T, T> d_coeffs(T k0, T k1, T c)
{
    const T half = T(1) / 2;
    const T cp = std::cos(std::numbers::pi_v<T> * k0);
    const T g1 = gamma_fn(half - k1), g2 = gamma_fn(half + k1);
    T d1 = c * g1 * g1 / (cp * gamma_fn(half + k0 - k1) * gamma_fn(half - k0 - k1));
    T d2 = c * g2 * g2 / (cp * gamma_fn(half + k0 + k1) * gamma_fn(half - k0 + k1));
    return {d1, d2};
}

template <class T>
Mat2T<T> L_direct(T u, T k0, T k1)
{
    const T half = T(1) / 2;
    const T s = u * u;
    const T w = (1 - u) * (1 + u);
    const T up = std::pow(u, k1), um = std::pow(u, -k1);
    const T wk = std::pow(w, -k0);
    Mat2T<T> L;
    L.a11 = up * wk * gauss_2f1(-k0, half - k0 + k1, k1 + half, s);
    L.a12 = -k0 / (k1 + half) * up * wk * u * gauss_2f1(1 - k0, half - k0 + k1, k1 + 3 * half, s);
    L.a21 = -k0 / (half - k1) * um * wk * u * gauss_2f1(1 - k0, half - k0 - k1, 3 * half - k1, s);
    L.a22 = um * wk * gauss_2f1(-k0, half - k0 - k1, half - k1, s);
    return L;
}

template <class T>
Mat2T<T> L_factored(T u, T omega, T k0, T k1)
{
    const T half = T(1) / 2;
    auto H = [&](T a, T b) { return gauss_2f1(a, a + b + half, 2 * a + 1, omega); };
    Mat2T<T> G{eta(-k0, k1), eta(k0, k1), eta(-k0, -k1), -eta(k0, -k1)};
    const T wp = std::pow(omega, k0), wm = std::pow(omega, -k0);
    const T up = std::pow(u, k1), um = std::pow(u, -k1);
    Mat2T<T> mid{wp * H(k0, k1) * up, wp * H(k0, -k1) * um,
                 wm * H(-k0, k1) * up, -wm * H(-k0, -k1) * um};
    return G * mid;
}

template double eta<double>(double, double);
template long double eta<long double>(long double, long double);
template std::pair<double, double> d_coeffs<double>(double, double, double);
template std::pair<long double, long double> d_coeffs<long double>(long double, long double, long double);
template Mat2T<double> L_direct<double>(double, double, double);
template Mat2T<long double> L_direct<long double>(long double, long double, long double);
template Mat2T<double> L_factored<double>(double, double, double, double);
template Mat2T<long double> L_factored<long double>(long double, long double, long double, long double);

namespace {

template <class T>
Mat2T<T> L_impl(T u, T omega, const WeightParams& wp)
{
    if (!(u > 0 && u < 1))
        throw DomainError("L(u) needs 0 < u < 1");
    if (u * u <= T(theta_switch))
        return L_direct<T>(u, T(wp.k0), T(wp.k1));
    return L_factored<T>(u, omega, T(wp.k0), T(wp.k1));
}

template <class T>
Mat2 K_impl(T u, T omega, const WeightParams& wp)
{
    Mat2T<T> L = L_impl<T>(u, omega, wp);
    auto [d1, d2] = d_coeffs<T>(T(wp.k0), T(wp.k1), T(wp.c()));
    Mat2T<T> K;
    K.a11 = d1 * L.a11 * L.a11 + d2 * L.a21 * L.a21;
    K.a12 = d1 * L.a11 * L.a12 + d2 * L.a21 * L.a22;
    K.a21 = K.a12;
    K.a22 = d1 * L.a12 * L.a12 + d2 * L.a22 * L.a22;
    return K.template cast<double>();
}

Mat2 to_mat(const GroupElement& g)
{
    return {double(g.m[0][0]), double(g.m[0][1]), double(g.m[1][0]), double(g.m[1][1])};
}

// g with x g in the open fundamental region.
const GroupElement& fold(double x1, double x2)
{
    for (const auto& g : GroupElement::all()) {
        auto y = g.apply(std::array<double, 2>{x1, x2});
        if (0 < y[1] && y[1] < y[0])
            return g;
    }
    throw OnMirror("point lies on a mirror");
}

} // namespace

Mat2 L_matrix(double u, const WeightParams& wp)
{
    return L_matrix(u, (1 - u) * (1 + u), wp);
}

Mat2 L_matrix(double u, double omega, const WeightParams& wp)
{
    if (wp.precision == Precision::extended)
        return L_impl<long double>(u, omega, wp).cast<double>();
    return L_impl<double>(u, omega, wp);
}

Mat2 K_fundamental(double u, const WeightParams& wp)
{
    return K_fundamental(u, (1 - u) * (1 + u), wp);
}

Mat2 K_fundamental(double u, double omega, const WeightParams& wp)
{
    wp.validate();
    if (wp.precision == Precision::extended)
        return K_impl<long double>(u, omega, wp);
    return K_impl<double>(u, omega, wp);
}

Mat2 K_matrix(double x1, double x2, const WeightParams& wp)
{
    wp.validate();
    if (x1 == 0 || x2 == 0 || std::abs(x1) == std::abs(x2))
        throw OnMirror("point lies on a mirror");
    const GroupElement& g = fold(x1, x2);
    auto y = g.apply(std::array<double, 2>{x1, x2});
    const double u = y[1] / y[0];
    Mat2 K0 = K_fundamental(u, wp);
    Mat2 G = to_mat(g);
    return G * K0 * G.transpose();
}

Mat2 K_angle(double theta, const WeightParams& wp)
{
    const double q = std::numbers::pi / 4;
    double r = std::fmod(theta, q);
    if (r < 0)
        r += q;
    const double tol = 8 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(theta));
    if (r < tol || q - r < tol)
        throw OnMirror("angle is a multiple of pi/4");
    return K_matrix(std::cos(theta), std::sin(theta), wp);
}

Mat2 K_panel(int j, double dl, double dr, const WeightParams& wp)
{
    const double q = std::numbers::pi / 4;
    const double mid = (j + 0.5) * q;
    const GroupElement& g = fold(std::cos(mid), std::sin(mid));
    const double th0 = (j % 2 == 0) ? dl : dr;
    const double delta = (j % 2 == 0) ? dr : dl;
    const double u = std::tan(th0);
    const double tau = std::tan(delta);
    const double one_minus_u = 2 * tau / (1 + tau);
    Mat2 K0 = K_fundamental(u, one_minus_u * (1 + u), wp);
    Mat2 G = to_mat(g);
    return G * K0 * G.transpose();
}

Mat2 K_degenerate(double x1, double x2, const WeightParams& wp, Degenerate which,
                  double exponent_scale)
{
    if (x1 == 0 || x2 == 0 || std::abs(x1) == std::abs(x2))
        throw OnMirror("point lies on a mirror");
    const double c = wp.c();
    if (which == Degenerate::k0_zero) {
        const double e = exponent_scale * wp.k1;
        const double r = std::abs(x2 / x1);
        return {c * std::pow(r, e), 0, 0, c * std::pow(r, -e)};
    }
    const double e = exponent_scale * wp.k0;
    const double m = std::abs(x1 - x2), p = std::abs(x1 + x2);
    Mat2 D{std::pow(m, e) * std::pow(p, -e), 0, 0, std::pow(m, -e) * std::pow(p, e)};
    Mat2 S = sigma_matrix();
    return (S * D * S) * c;
}

std::vector<double> fundamental_grid(int steps)
{
    if (steps <= 0)
        throw UsageError("steps must be positive");
    std::vector<double> out(steps);
    for (int j = 0; j < steps; ++j)
        out[j] = (j + 0.5) * (std::numbers::pi / 4) / steps;
    return out;
}

std::vector<SampleRow> weight_sample(const std::vector<double>& thetas, const WeightParams& wp,
                                     bool conjugated, Execution ex)
{
    wp.validate();
    const long n = static_cast<long>(thetas.size());
    std::vector<SampleRow> rows(n);
    const Mat2 S = sigma_matrix();
    auto one = [&](long j) {
        rows[j].theta = thetas[j];
        try {
            Mat2 K = K_angle(thetas[j], wp);
            rows[j].k = conjugated ? S * K * S : K;
        } catch (const OnMirror&) {
            rows[j].k.reset();
        }
    };
    if (ex == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long j = 0; j < n; ++j)
            one(j);
    } else {
        for (long j = 0; j < n; ++j)
            one(j);
    }
    return rows;
}

void write_weight_csv(std::ostream& os, const std::vector<SampleRow>& rows,
                      const std::vector<std::string>& metadata)
{
    for (const auto& m : metadata)
        os << "# " << m << '\n';
    os << "theta,k11,k12,k22\n";
    os << std::setprecision(17);
    for (const auto& r : rows) {
        os << r.theta << ',';
        if (r.k)
            os << r.k->a11 << ',' << r.k->a12 << ',' << r.k->a22;
        else
            os << ",,";
        os << '\n';
    }
}

std::vector<SampleRow> read_weight_csv(std::istream& is)
{
    std::vector<SampleRow> out;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        if (!header) {
            if (line != "theta,k11,k12,k22")
                throw UsageError("unexpected CSV header: " + line);
            header = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            f.push_back(cell);
        while (f.size() < 4)
            f.emplace_back();
        SampleRow r;
        r.theta = std::stod(f[0]);
        if (!f[1].empty()) {
            double k11 = std::stod(f[1]), k12 = std::stod(f[2]), k22 = std::stod(f[3]);
            r.k = Mat2{k11, k12, k12, k22};
        }
        out.push_back(r);
    }
    return out;
}

} // namespace b2dunkl
