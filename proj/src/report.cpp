#include "b2dunkl/report.hpp"

#include <cmath>

namespace b2dunkl {

nlohmann::json CheckResult::to_json() const
{
    nlohmann::json j = {{"test", test},
                        {"params", params},
                        {"tolerance", tolerance},
                        {"measured", std::isfinite(measured) ? nlohmann::json(measured) : nlohmann::json(nullptr)},
                        {"pass", pass}};
    if (!note.empty())
        j["note"] = note;
    return j;
}

bool Report::all_pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json j = {{"suite", suite}, {"pass", all_pass()}};
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        j["checks"].push_back(c.to_json());
    j["findings"] = nlohmann::json::array();
    for (const auto& c : findings)
        j["findings"].push_back(c.to_json());
    return j;
}

namespace {

CheckResult check_from_json(const nlohmann::json& j)
{
    CheckResult c;
    c.test = j.at("test").get<std::string>();
    c.params = j.at("params");
    c.tolerance = j.at("tolerance").get<double>();
    c.measured = j.at("measured").is_null() ? NAN : j.at("measured").get<double>();
    c.pass = j.at("pass").get<bool>();
    if (j.contains("note"))
        c.note = j.at("note").get<std::string>();
    return c;
}

} // namespace

Report Report::from_json(const nlohmann::json& j)
{
    Report r;
    r.suite = j.at("suite").get<std::string>();
    for (const auto& c : j.at("checks"))
        r.checks.push_back(check_from_json(c));
    for (const auto& c : j.at("findings"))
        r.findings.push_back(check_from_json(c));
    return r;
}

CheckResult make_check(std::string test, nlohmann::json params, double tolerance, double measured,
                       std::string note)
{
    CheckResult c;
    c.test = std::move(test);
    c.params = std::move(params);
    c.tolerance = tolerance;
    c.measured = measured;
    c.pass = std::isfinite(measured) && measured <= tolerance;
    c.note = std::move(note);
    return c;
}

} // namespace b2dunkl
