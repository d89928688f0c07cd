#pragma once

// Structural validation of torsionkit JSON reports, mirroring
// docs/report.schema.json.  Returns human-readable violations so a failing
// test names the offending field directly.

#include <string>
#include <vector>

#include "json.hpp"

namespace torsionkit_tests {

// Reports must serialize identically across runs, so every number in them is
// an integer; any float is a determinism hazard and a schema violation.
inline void collect_float_violations(const nlohmann::json& node, const std::string& path,
                                     std::vector<std::string>& out) {
    if (node.is_number_float()) {
        out.push_back(path + ": floating-point number");
    } else if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            collect_float_violations(value, path + "." + key, out);
    } else if (node.is_array()) {
        for (std::size_t i = 0; i < node.size(); ++i)
            collect_float_violations(node[i], path + "[" + std::to_string(i) + "]", out);
    }
}

inline std::vector<std::string> schema_violations(const nlohmann::json& report) {
    std::vector<std::string> out;
    const auto expect = [&out](bool ok, const std::string& message) {
        if (!ok) out.push_back(message);
    };

    if (!report.is_object()) return {"report is not an object"};
    for (const auto& [key, value] : report.items())
        expect(key == "toolVersion" || key == "config" || key == "checks" || key == "summary",
               "unexpected top-level key '" + key + "'");

    expect(report.contains("toolVersion") && report["toolVersion"].is_string(),
           "toolVersion missing or not a string");

    if (!report.contains("config") || !report["config"].is_object()) {
        out.push_back("config missing or not an object");
    } else {
        const nlohmann::json& config = report["config"];
        const auto string_field = [&](const char* name) {
            expect(config.contains(name) && config[name].is_string(),
                   std::string("config.") + name + " missing or not a string");
        };
        const auto string_array_field = [&](const char* name) {
            bool ok = config.contains(name) && config[name].is_array();
            if (ok)
                for (const auto& entry : config[name]) ok = ok && entry.is_string();
            expect(ok, std::string("config.") + name + " missing or not an array of strings");
        };
        string_field("command");
        string_field("corpus");
        string_field("group");
        string_field("matrix");
        string_array_field("rings");
        string_array_field("modules");
        expect(config.contains("seed") && config["seed"].is_number_integer(),
               "config.seed missing or not an integer");
        expect(config.contains("cases") && config["cases"].is_number_integer(),
               "config.cases missing or not an integer");
        if (!config.contains("caps") || !config["caps"].is_object()) {
            out.push_back("config.caps missing or not an object");
        } else {
            for (const char* name : {"ringOrder", "moduleOrder", "tensorIntermediate",
                                     "latticeSize", "searchBudget"})
                expect(config["caps"].contains(name) &&
                           config["caps"][name].is_number_integer(),
                       std::string("config.caps.") + name + " missing or not an integer");
        }
        expect(config.size() == 9, "config has an unexpected number of keys");
    }

    int failing = 0;
    if (!report.contains("checks") || !report["checks"].is_array()) {
        out.push_back("checks missing or not an array");
    } else {
        for (std::size_t i = 0; i < report["checks"].size(); ++i) {
            const nlohmann::json& check = report["checks"][i];
            const std::string where = "checks[" + std::to_string(i) + "]";
            if (!check.is_object()) {
                out.push_back(where + " is not an object");
                continue;
            }
            expect(check.contains("name") && check["name"].is_string() &&
                       !check["name"].get<std::string>().empty(),
                   where + ".name missing or empty");
            expect(check.contains("pass") && check["pass"].is_boolean(),
                   where + ".pass missing or not a boolean");
            if (check.contains("pass") && check["pass"].is_boolean() && !check["pass"].get<bool>())
                ++failing;
            for (const auto& [key, value] : check.items()) {
                if (key == "name" || key == "pass") continue;
                if (key == "witness")
                    expect(value.is_string(), where + ".witness is not a string");
                else if (key == "data")
                    expect(value.is_object(), where + ".data is not an object");
                else
                    out.push_back(where + " has unexpected key '" + key + "'");
            }
        }
    }

    if (!report.contains("summary") || !report["summary"].is_object()) {
        out.push_back("summary missing or not an object");
    } else {
        const nlohmann::json& summary = report["summary"];
        bool integers = true;
        for (const char* name : {"checks", "passed", "failed", "exitCode"}) {
            const bool ok = summary.contains(name) && summary[name].is_number_integer();
            expect(ok, std::string("summary.") + name + " missing or not an integer");
            integers = integers && ok;
        }
        expect(summary.size() == 4, "summary has an unexpected number of keys");
        if (integers) {
            const int checks = summary["checks"].get<int>();
            const int passed = summary["passed"].get<int>();
            const int failed = summary["failed"].get<int>();
            const int exit_code = summary["exitCode"].get<int>();
            expect(passed + failed == checks, "summary.passed + summary.failed != summary.checks");
            expect(exit_code == (failed == 0 ? 0 : 1), "summary.exitCode inconsistent with failed");
            if (report.contains("checks") && report["checks"].is_array()) {
                expect(checks == static_cast<int>(report["checks"].size()),
                       "summary.checks != number of check objects");
                expect(failed == failing, "summary.failed != number of failing check objects");
            }
        }
    }

    collect_float_violations(report, "report", out);
    return out;
}

}  // namespace torsionkit_tests
