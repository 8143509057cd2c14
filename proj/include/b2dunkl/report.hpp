#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace b2dunkl {

/// One verification result: {test, params, tolerance, measured, pass}.
struct CheckResult {
    std::string test;
    nlohmann::json params = nlohmann::json::object();
    double tolerance = 0;
    double measured = 0;
    bool pass = false;
    std::string note;

    nlohmann::json to_json() const;
};

/// A suite run. findings are reported but never affect all_pass(); they hold
/// experiments whose outcome is information rather than a requirement.
struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    std::vector<CheckResult> findings;

    bool all_pass() const;
    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
};

/// measured <= tolerance, treating NaN as failure.
CheckResult make_check(std::string test, nlohmann::json params, double tolerance, double measured,
                       std::string note = {});

} // namespace b2dunkl
