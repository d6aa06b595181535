#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chronoscale {

enum class Command { Verify, Sweep, Refine, Search, Selftest };

std::string_view command_name(Command c);

// Validated run description. The JSON form of this struct doubles as the
// config-file format; parse_config(serialize_config(c)) == c.
struct RunConfig {
    Command command = Command::Selftest;
    std::string theorem;          // "qi-3.1" .. "qi-3.7", or classical ids for refine
    std::optional<double> exponent;
    std::string scale;            // "h:a,b,h" | "q:base,q,kmin,kmax" | "pts:v1,v2,..."
    std::string scale_family = "mixed";  // sweep: h | q | scattered | mixed
    std::string function;         // "zero" | "linear:c0,slope" | "power:k" | "file:<path>"
    std::string strategy = "steep";      // steep | rejection | equality
    std::optional<double> a;
    std::optional<double> b;
    std::uint64_t seed = 0;
    int trials = 1000;
    int budget = 200;
    double min_admissible = 0.8;
    std::string h_seq;            // comma list for refine; empty = 2^-3 .. 2^-12
    std::string format = "json";  // json | csv | human
    std::string out;              // empty = stdout

    bool operator==(const RunConfig&) const = default;
};

// Throws UsageError on bad flags, unknown keys, or an exponent outside the
// theorem's domain.
RunConfig parse_config(const std::vector<std::string>& args);
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json serialize_config(const RunConfig& c);

// Executes the run and writes the report. Exit codes: 0 ok, 1 violated
// verdict, 2 usage, 3 generator starvation, 4 i/o.
int run(const RunConfig& c);

// argv convenience wrapper: parses, runs, maps errors to exit codes.
int run_main(int argc, const char* const* argv);

}  // namespace chronoscale
