#include "b2dunkl/quad.hpp"

#include "b2dunkl/errors.hpp"
#include "b2dunkl/special.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace b2dunkl {

double gaussian_moment(int k)
{
    if (k < 0)
        throw DomainError("gaussian_moment needs k >= 0");
    return std::pow(2.0, 0.5 * k) * std::tgamma(0.5 * k + 1);
}

namespace {

struct Node {
    AngularNode at;
    double weight; // without the step h
};

// Nodes for the tanh-sinh abscissae t on every panel, panel-major.
std::vector<Node> make_nodes(const std::vector<double>& ts)
{
    const double w = std::numbers::pi / 4;
    const double hw = w / 2;
    std::vector<Node> out;
    out.reserve(ts.size() * panel_count);
    for (int j = 0; j < panel_count; ++j) {
        const double a = j * w, b = (j + 1) * w;
        for (double t : ts) {
            const double s = std::numbers::pi / 2 * std::sinh(t);
            const double ch = std::cosh(s);
            const double wt = hw * (std::numbers::pi / 2) * std::cosh(t) / (ch * ch);
            Node n;
            n.at.panel = j;
            if (t >= 0) {
                n.at.dr = w / (1 + std::exp(2 * s));
                n.at.dl = w - n.at.dr;
                n.at.theta = b - n.at.dr;
            } else {
                n.at.dl = w / (1 + std::exp(-2 * s));
                n.at.dr = w - n.at.dl;
                n.at.theta = a + n.at.dl;
            }
            n.weight = wt;
            if (n.at.dl > 0 && n.at.dr > 0 && wt > 0 && std::isfinite(wt))
                out.push_back(n);
        }
    }
    return out;
}

std::vector<double> level_abscissae(int level, double tmax)
{
    std::vector<double> ts;
    if (level == 0) {
        for (int k = -static_cast<int>(tmax); k <= static_cast<int>(tmax); ++k)
            ts.push_back(k);
        return ts;
    }
    const double h = std::ldexp(1.0, -level);
    const long kmax = static_cast<long>(tmax / h);
    for (long k = -kmax; k <= kmax; ++k)
        if (k % 2 != 0)
            ts.push_back(k * h);
    return ts;
}

} // namespace

QuadResult angular_integrate(const PanelIntegrand& f, int dim, const QuadSpec& spec)
{
    if (dim <= 0)
        throw DomainError("integrand dimension must be positive");
    QuadResult res;
    std::vector<double> raw(dim, 0.0), prev(dim, 0.0), cur(dim, 0.0);
    std::vector<double> buf;
    for (int level = 0; level <= spec.max_levels; ++level) {
        const auto nodes = make_nodes(level_abscissae(level, spec.tmax));
        const long nn = static_cast<long>(nodes.size());
        buf.assign(static_cast<size_t>(nn) * dim, 0.0);
        if (spec.execution == Execution::parallel) {
            std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 16)
            for (long q = 0; q < nn; ++q) {
                try {
                    f(nodes[q].at, &buf[q * dim]);
                } catch (...) {
#pragma omp critical
                    if (!err)
                        err = std::current_exception();
                }
            }
            if (err)
                std::rethrow_exception(err);
        } else {
            for (long q = 0; q < nn; ++q)
                f(nodes[q].at, &buf[q * dim]);
        }
        for (long q = 0; q < nn; ++q)
            for (int d = 0; d < dim; ++d)
                raw[d] += nodes[q].weight * buf[q * dim + d];
        res.evaluations += nn;
        const double h = std::ldexp(1.0, -level);
        for (int d = 0; d < dim; ++d)
            cur[d] = h * raw[d];
        if (level >= spec.min_levels) {
            double err = 0;
            bool ok = true;
            for (int d = 0; d < dim; ++d) {
                const double diff = std::abs(cur[d] - prev[d]);
                err = std::max(err, diff);
                if (diff > spec.angular_tol * std::max(1.0, std::abs(cur[d])))
                    ok = false;
            }
            res.error_estimate = err;
            if (ok) {
                res.values = cur;
                res.levels = level;
                return res;
            }
        }
        prev = cur;
    }
    throw NonConvergence("angular quadrature did not reach the requested tolerance");
}

double angular_integrate(const std::function<double(double)>& f, const QuadSpec& spec)
{
    auto r = angular_integrate([&](const AngularNode& n, double* out) { out[0] = f(n.theta); }, 1,
                               spec);
    return r.values[0];
}

namespace {

struct PartTerm {
    int a, b;
    double c1, c2;
};

// Homogeneous parts of a VPoly with double coefficients, by degree.
using Parts = std::map<int, std::vector<PartTerm>>;

Parts split_parts(const VPoly& f)
{
    Parts out;
    for (const auto& [m, c] : f.terms())
        out[m.degree()].push_back({m.a, m.b, c.c1.get_d(), c.c2.get_d()});
    return out;
}

std::array<double, 2> eval_part(const std::vector<PartTerm>& terms, double c, double s)
{
    std::array<double, 2> v{0, 0};
    for (const auto& t : terms) {
        const double mono = std::pow(c, t.a) * std::pow(s, t.b);
        v[0] += t.c1 * mono;
        v[1] += t.c2 * mono;
    }
    return v;
}

int max_degree(const std::vector<Parts>& ps)
{
    int d = 0;
    for (const auto& p : ps)
        if (!p.empty())
            d = std::max(d, p.rbegin()->first);
    return d;
}

} // namespace

std::vector<double> gaussian_form_gram(const std::vector<VPoly>& fs, const std::vector<VPoly>& gs,
                                       const WeightParams& wp, const QuadSpec& spec)
{
    wp.validate();
    std::vector<Parts> fp, gp;
    for (const auto& f : fs)
        fp.push_back(split_parts(f));
    for (const auto& g : gs)
        gp.push_back(split_parts(g));
    const int dmax = max_degree(fp) + max_degree(gp);
    std::vector<double> M(dmax + 1);
    for (int k = 0; k <= dmax; ++k)
        M[k] = gaussian_moment(k);
    const size_t nf = fs.size(), ng = gs.size();
    if (nf == 0 || ng == 0)
        return {};

    auto integrand = [&](const AngularNode& n, double* out) {
        const double c = std::cos(n.theta), s = std::sin(n.theta);
        const Mat2 K = K_panel(n.panel, n.dl, n.dr, wp);
        // K g_l^T for each g and part
        std::vector<std::vector<std::pair<int, std::array<double, 2>>>> kg(ng);
        for (size_t b = 0; b < ng; ++b)
            for (const auto& [l, terms] : gp[b]) {
                auto v = eval_part(terms, c, s);
                kg[b].push_back({l, {K.a11 * v[0] + K.a12 * v[1], K.a21 * v[0] + K.a22 * v[1]}});
            }
        for (size_t a = 0; a < nf; ++a) {
            std::vector<std::pair<int, std::array<double, 2>>> fv;
            for (const auto& [k, terms] : fp[a])
                fv.push_back({k, eval_part(terms, c, s)});
            for (size_t b = 0; b < ng; ++b) {
                double acc = 0;
                for (const auto& [k, v] : fv)
                    for (const auto& [l, w] : kg[b])
                        acc += M[k + l] * (v[0] * w[0] + v[1] * w[1]);
                out[a * ng + b] = acc;
            }
        }
    };
    return angular_integrate(integrand, static_cast<int>(nf * ng), spec).values;
}

double gaussian_form_integral(const VPoly& f, const VPoly& g, const WeightParams& wp,
                              const QuadSpec& spec)
{
    return gaussian_form_gram({f}, {g}, wp, spec)[0];
}

CEstimate estimate_c(double k0, double k1, const QuadSpec& spec, Precision precision)
{
    WeightParams wp;
    wp.k0 = k0;
    wp.k1 = k1;
    wp.c_mode = CMode::unit;
    wp.precision = precision;
    const double I = gaussian_form_integral(VPoly::t1(), VPoly::t1(), wp, spec);
    CEstimate out;
    out.estimate = 1 / I;
    out.conjecture = c_conjecture(k0, k1);
    out.abs_diff = std::abs(out.estimate - out.conjecture);
    return out;
}

} // namespace b2dunkl
