#include "doctest.h"

#include "b2dunkl/cli.hpp"
#include "b2dunkl/report.hpp"
#include "b2dunkl/vpoly.hpp"
#include "b2dunkl/weight.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace b2dunkl;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("basis command")
{
    auto r = run({"basis", "--k0", "1/4", "--k1", "1/8", "--nmax", "3"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 14);
    auto z = nlohmann::json::parse(run({"basis", "--k0", "0", "--k1", "0", "--nmax", "1"}).out);
    CHECK(z[0]["nu"] == "1/1");
    CHECK(z[2]["nu"] == "2/1");
    CHECK(VPoly::from_json(z[3]["poly"]).homogeneous_degree() == 1);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run({"basis", "--k0", "abc"}).code == exit_usage);
    CHECK(run({"basis", "--k0", "0.25"}).code == exit_usage);
    CHECK(run({"norms", "--k1", "1/0"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
    CHECK(run({"frobnicate"}).code == exit_usage);
    CHECK(run({"verify", "nosuch"}).code == exit_usage);
    CHECK(run({"weight-sample", "--steps", "0"}).code == exit_usage);
    CHECK(run({"weight-sample", "--format", "xml"}).code == exit_usage);
    CHECK(run({"estimate-c", "--precision", "quad"}).code == exit_usage);
    CHECK(run({"verify", "gaussian", "--k0", "1/2", "--k1", "0"}).code == exit_usage);
    CHECK(run({"estimate-c", "--k0", "0.3", "--k1", "0.3"}).code == exit_usage);
}

TEST_CASE("verify emits a parseable report")
{
    auto r = run({"verify", "harmonic", "--k0", "1/4", "--k1", "1/8", "--nmax", "10"});
    CHECK(r.code == 0);
    Report rep = Report::from_json(nlohmann::json::parse(r.out));
    CHECK(rep.suite == "harmonic");
    CHECK(rep.all_pass());
    CHECK(!rep.checks.empty());
    CHECK(Report::from_json(rep.to_json()).to_json() == rep.to_json());
}

TEST_CASE("verify weight passes and records findings")
{
    auto r = run({"verify", "weight", "--k0", "3/10", "--k1", "1/10"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    bool pde = false;
    for (const auto& c : j["checks"])
        if (c["test"].get<std::string>().find("PDE") != std::string::npos) {
            pde = true;
            CHECK(c["measured"].get<double>() <= 1e-6);
        }
    CHECK(pde);
    CHECK(!j["findings"].empty());
}

TEST_CASE("weight-sample CSV")
{
    auto r = run({"weight-sample", "--k0", "3/10", "--k1", "1/10", "--steps", "512"});
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    auto rows = read_weight_csv(is);
    CHECK(rows.size() == 512);

    auto t = run({"weight-sample", "--k0", "0", "--k1", "0", "--steps", "8"});
    std::istringstream it(t.out);
    for (const auto& row : read_weight_csv(it)) {
        CHECK(row.k->a11 == doctest::Approx(0.15915494309189535));
        CHECK(row.k->a12 == 0);
        CHECK(row.k->a22 == doctest::Approx(0.15915494309189535));
    }

    auto s = run({"weight-sample", "--k0", "0.3", "--k1", "0.1", "--steps", "4", "--conjugate"});
    CHECK(s.code == 0);
    CHECK(s.out.find("frame=sigma K sigma") != std::string::npos);
}

TEST_CASE("--out writes a file")
{
    const std::string path = "cli_test_out.json";
    auto r = run({"norms", "--k0", "1/4", "--k1", "1/8", "--nmax", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    auto j = nlohmann::json::parse(f);
    CHECK(j.size() == 10);
    CHECK(j[2]["nu"] == "1/2");
    std::remove(path.c_str());
}

TEST_CASE("estimate-c")
{
    auto r = run({"estimate-c", "--k0", "0", "--k1", "0"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["estimate"].get<double>() == doctest::Approx(0.15915494309189535).epsilon(1e-12));
    CHECK(j["abs_diff"].get<double>() < 1e-12);
}
