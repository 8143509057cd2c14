#include "b2dunkl/cli.hpp"

#include "CLI11.hpp"
#include "b2dunkl/errors.hpp"
#include "b2dunkl/harmonic.hpp"
#include "b2dunkl/verify.hpp"

#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

namespace b2dunkl {

namespace {

struct Options {
    std::string k0 = "0";
    std::string k1 = "0";
    int nmax = 10;
    int steps = 512;
    std::optional<double> tol;
    std::string format;
    std::string out;
    std::string precision = "standard";
    std::string suite;
    bool conjugate = false;
};

bool exact_suite(const std::string& s)
{
    return s == "algebra" || s == "harmonic" || s == "forms" || s == "kernel";
}

Params parse_params(const Options& o, bool allow_decimal)
{
    return Params(parse_rational(o.k0, allow_decimal), parse_rational(o.k1, allow_decimal));
}

Precision parse_precision(const std::string& s)
{
    if (s == "standard")
        return Precision::standard;
    if (s == "extended")
        return Precision::extended;
    throw UsageError("unknown precision: " + s);
}

QuadSpec quad_spec(const Options& o)
{
    QuadSpec spec;
    if (o.tol) {
        if (!(*o.tol > 0))
            throw UsageError("--tol must be positive");
        spec.angular_tol = *o.tol;
    }
    return spec;
}

std::string fmt_or(const Options& o, const std::string& dflt)
{
    const std::string f = o.format.empty() ? dflt : o.format;
    if (f != "json" && f != "csv")
        throw UsageError("unknown format: " + f);
    return f;
}

void emit(const Options& o, std::ostream& out, const std::string& text)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw UsageError("cannot open output file: " + o.out);
    f << text;
    if (!f)
        throw Error("write failed: " + o.out);
}

int cmd_basis(const Options& o, std::ostream& out)
{
    const Params p = parse_params(o, false);
    if (o.nmax < 0)
        throw UsageError("--nmax must be nonnegative");
    const auto entries = build_basis(o.nmax, p);
    std::ostringstream os;
    if (fmt_or(o, "json") == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& e : entries)
            j.push_back(e.to_json());
        os << j.dump(2) << "\n";
    } else {
        os << "n,i,type,nu\n";
        for (const auto& e : entries)
            os << e.n << ',' << e.i << ',' << to_string(e.type_label) << ',' << to_pq(e.nu) << "\n";
    }
    emit(o, out, os.str());
    return exit_ok;
}

int cmd_norms(const Options& o, std::ostream& out)
{
    const Params p = parse_params(o, false);
    if (o.nmax < 0)
        throw UsageError("--nmax must be nonnegative");
    std::ostringstream os;
    os << std::setprecision(17);
    const bool json = fmt_or(o, "json") == "json";
    nlohmann::json j = nlohmann::json::array();
    if (!json)
        os << "n,i,nu,nu_prime\n";
    for (int n = 0; n <= o.nmax; ++n)
        for (int i = 1; i <= (n == 0 ? 2 : 4); ++i) {
            const Rational nu = norm_pi(n, i, p);
            const double np = norm_prime<Rational>(n, i, p.kplus(), p.kminus()).get_d();
            if (json)
                j.push_back({{"degree", n}, {"index", i}, {"nu", to_pq(nu)}, {"nu_prime", np}});
            else
                os << n << ',' << i << ',' << to_pq(nu) << ',' << np << "\n";
        }
    if (json)
        os << j.dump(2) << "\n";
    emit(o, out, os.str());
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    VerifyConfig cfg;
    cfg.params = parse_params(o, !exact_suite(o.suite));
    cfg.nmax = o.nmax;
    if (cfg.nmax < 1)
        throw UsageError("--nmax must be at least 1");
    cfg.spec = quad_spec(o);
    cfg.precision = parse_precision(o.precision);
    fmt_or(o, "json");
    const Report r = run_suite(o.suite, cfg);
    emit(o, out, r.to_json().dump(2) + "\n");
    return r.all_pass() ? exit_ok : exit_failure;
}

int cmd_weight_sample(const Options& o, std::ostream& out)
{
    if (o.steps <= 0)
        throw UsageError("--steps must be positive");
    const Params p = parse_params(o, true);
    WeightParams wp = WeightParams::from(p);
    wp.precision = parse_precision(o.precision);
    wp.validate();
    const auto rows = weight_sample(fundamental_grid(o.steps), wp, o.conjugate);
    std::ostringstream os;
    if (fmt_or(o, "csv") == "csv") {
        std::ostringstream k0s, k1s, cs;
        k0s << std::setprecision(17) << wp.k0;
        k1s << std::setprecision(17) << wp.k1;
        cs << std::setprecision(17) << wp.c();
        std::vector<std::string> meta = {"k0=" + k0s.str(), "k1=" + k1s.str(), "c=" + cs.str(),
                                         "steps=" + std::to_string(o.steps),
                                         std::string("frame=") + (o.conjugate ? "sigma K sigma" : "K")};
        write_weight_csv(os, rows, meta);
    } else {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            if (r.k)
                j.push_back({{"theta", r.theta}, {"k11", r.k->a11}, {"k12", r.k->a12}, {"k22", r.k->a22}});
            else
                j.push_back({{"theta", r.theta}, {"k11", nullptr}, {"k12", nullptr}, {"k22", nullptr}});
        }
        os << j.dump(2) << "\n";
    }
    emit(o, out, os.str());
    return exit_ok;
}

int cmd_estimate_c(const Options& o, std::ostream& out)
{
    const Params p = parse_params(o, true);
    WeightParams wp = WeightParams::from(p);
    wp.validate();
    const CEstimate e = estimate_c(wp.k0, wp.k1, quad_spec(o), parse_precision(o.precision));
    std::ostringstream os;
    os << std::setprecision(17);
    if (fmt_or(o, "json") == "json") {
        nlohmann::json j = {{"k0", wp.k0}, {"k1", wp.k1}, {"estimate", e.estimate},
                            {"conjecture", e.conjecture}, {"abs_diff", e.abs_diff}};
        os << j.dump(2) << "\n";
    } else {
        os << "k0,k1,estimate,conjecture,abs_diff\n"
           << wp.k0 << ',' << wp.k1 << ',' << e.estimate << ',' << e.conjecture << ',' << e.abs_diff << "\n";
    }
    emit(o, out, os.str());
    return exit_ok;
}

int cmd_fourier_check(const Options& o, std::ostream& out)
{
    VerifyConfig cfg;
    cfg.params = parse_params(o, true);
    cfg.spec = quad_spec(o);
    cfg.precision = parse_precision(o.precision);
    fmt_or(o, "json");
    const Report r = run_suite("fourier", cfg);
    emit(o, out, r.to_json().dump(2) + "\n");
    return r.all_pass() ? exit_ok : exit_failure;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dunkl operators and matrix weights for B2 with the 2-dimensional representation"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--k0", o.k0, "multiplicity on the diagonal reflections (p/q)");
        sub->add_option("--k1", o.k1, "multiplicity on the coordinate reflections (p/q)");
        sub->add_option("--format", o.format, "json or csv");
        sub->add_option("--out", o.out, "output file (default stdout)");
    };
    auto* basis = app.add_subcommand("basis", "harmonic basis p_{n,i} with norms");
    common(basis);
    basis->add_option("--nmax", o.nmax, "maximum degree");
    auto* norms = app.add_subcommand("norms", "closed-form norms");
    common(norms);
    norms->add_option("--nmax", o.nmax, "maximum degree");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    verify->add_option("suite", o.suite, "algebra, harmonic, forms, kernel, weight, gaussian or fourier")
        ->required();
    verify->add_option("--nmax", o.nmax, "maximum degree");
    verify->add_option("--tol", o.tol, "angular quadrature tolerance");
    verify->add_option("--precision", o.precision, "standard or extended");
    auto* ws = app.add_subcommand("weight-sample", "K on a grid of the fundamental sector");
    common(ws);
    ws->add_option("--steps", o.steps, "number of grid points");
    ws->add_option("--precision", o.precision, "standard or extended");
    ws->add_flag("--conjugate", o.conjugate, "emit sigma K sigma");
    auto* ec = app.add_subcommand("estimate-c", "numerical normalization constant");
    common(ec);
    ec->add_option("--tol", o.tol, "angular quadrature tolerance");
    ec->add_option("--precision", o.precision, "standard or extended");
    auto* fc = app.add_subcommand("fourier-check", "Fourier eigenfunction experiment");
    common(fc);
    fc->add_option("--tol", o.tol, "angular quadrature tolerance");
    fc->add_option("--precision", o.precision, "standard or extended");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*basis)
            return cmd_basis(o, out);
        if (*norms)
            return cmd_norms(o, out);
        if (*verify)
            return cmd_verify(o, out);
        if (*ws)
            return cmd_weight_sample(o, out);
        if (*ec)
            return cmd_estimate_c(o, out);
        if (*fc)
            return cmd_fourier_check(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DomainError& e) {
        err << "rejected: " << e.what() << "\n";
        return exit_usage;
    } catch (const ZeroNorm& e) {
        err << "rejected: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}

} // namespace b2dunkl
