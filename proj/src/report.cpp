#include "hbl/report.hpp"

namespace hbl {

using nlohmann::ordered_json;

std::vector<std::string> CheckRecord::routes() const {
    std::vector<std::string> r;
    for (const auto& [k, v] : computed.items()) r.push_back(k);
    return r;
}

bool VerificationReport::pass() const { return failed() == 0; }

std::size_t VerificationReport::failed() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.pass ? 0 : 1;
    return f;
}

void VerificationReport::add_note(const std::string& topic, const std::string& text, ordered_json data) {
    ordered_json n;
    n["topic"] = topic;
    n["text"] = text;
    if (!data.is_null()) n["data"] = std::move(data);
    notes.push_back(std::move(n));
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    for (const auto& t : other.tables) tables.push_back(t);
    for (const auto& n : other.notes) notes.push_back(n);
}

namespace {

ordered_json check_json(const CheckRecord& c, bool timing) {
    ordered_json j;
    j["name"] = c.name;
    j["degree"] = c.degree ? ordered_json(*c.degree) : ordered_json(nullptr);
    j["expected"] = c.expected;
    j["computed"] = c.computed;
    j["routes"] = c.routes();
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (timing) j["elapsed_ms"] = c.elapsed_ms;
    return j;
}

ordered_json report_json(const VerificationReport& r, bool timing) {
    ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = r.command;
    j["operator"] = r.operator_info;
    j["parameters"] = r.parameters;
    ordered_json checks = ordered_json::array();
    double total = 0;
    for (const auto& c : r.checks) {
        checks.push_back(check_json(c, timing));
        total += c.elapsed_ms;
    }
    j["checks"] = std::move(checks);
    j["tables"] = r.tables;
    j["notes"] = r.notes;
    ordered_json s;
    s["checks"] = r.checks.size();
    s["passed"] = r.checks.size() - r.failed();
    s["failed"] = r.failed();
    s["pass"] = r.pass();
    if (timing) s["elapsed_ms"] = total;
    j["summary"] = std::move(s);
    return j;
}

}  // namespace

ordered_json VerificationReport::to_json() const { return report_json(*this, true); }
ordered_json VerificationReport::to_json_without_timing() const { return report_json(*this, false); }

}  // namespace hbl
