#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hbl {

inline constexpr const char* kToolName = "hbl";
inline constexpr const char* kToolVersion = "1.0.0";

/// One verified claim. `computed` maps each route name to its value.
struct CheckRecord {
    std::string name;
    std::optional<std::size_t> degree;
    nlohmann::ordered_json expected;  // null when no independent expectation exists
    nlohmann::ordered_json computed = nlohmann::ordered_json::object();
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0;

    std::vector<std::string> routes() const;
};

/// Checks, tables and notes from one or more subcommands. Apart from
/// elapsed_ms fields, the JSON form depends only on the inputs.
struct VerificationReport {
    std::string command;
    nlohmann::ordered_json operator_info = nlohmann::ordered_json::object();
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<CheckRecord> checks;
    nlohmann::ordered_json tables = nlohmann::ordered_json::array();
    nlohmann::ordered_json notes = nlohmann::ordered_json::array();

    bool pass() const;
    std::size_t failed() const;
    void add_note(const std::string& topic, const std::string& text, nlohmann::ordered_json data = nullptr);
    void append(const VerificationReport& other);
    nlohmann::ordered_json to_json() const;
    /// to_json() with every elapsed_ms removed.
    nlohmann::ordered_json to_json_without_timing() const;
};

/// Wall-clock milliseconds spent in fn.
template <class Fn>
double time_ms(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace hbl
