#pragma once

#include <json.hpp>

#include "qhpp/scenario.hpp"

namespace qhpp {

// Machine-readable form of a scenario report. Insertion order is preserved
// so the output is byte-stable across runs.
inline nlohmann::ordered_json report_json(const Report& report) {
    nlohmann::ordered_json j;
    j["scenario"] = report.scenario_name;
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& step : report.steps) {
        nlohmann::ordered_json s;
        s["id"] = step.id;
        s["op"] = step.op;
        s["fields"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : step.fields) s["fields"][k] = v;
        j["steps"].push_back(std::move(s));
    }
    j["expectations"] = nlohmann::ordered_json::array();
    for (const auto& e : report.expectations) {
        nlohmann::ordered_json x;
        x["step"] = e.expectation.step;
        x["field"] = e.expectation.field;
        x["expected"] = e.expectation.expected;
        x["actual"] = e.actual;
        x["pass"] = e.passed;
        j["expectations"].push_back(std::move(x));
    }
    j["status"] = report.passed ? "PASS" : "FAIL";
    return j;
}

} // namespace qhpp
