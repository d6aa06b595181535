#pragma once

#include <string>

#include <json.hpp>

#include "chronoscale/harness.hpp"

namespace chronoscale {

// Shortest round-trip decimal representation (bit-reproducible outputs).
std::string format_double(double v);

nlohmann::json to_json(const TimeScale& ts);
TimeScale scale_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GridFunction& f);
GridFunction grid_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DerivativeField& d);

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const ConvergenceReport& r);

// Fixed columns:
// trial,theorem,exponent,a,b,n_points,lhs,rhs,margin,verdict,worst_slack,saturated
std::string csv_header();
std::string to_csv_row(const TrialRecord& t, TheoremId id);
std::string to_csv(const SweepReport& r);
std::string to_csv(const VerificationReport& r);
std::string to_csv(const ConvergenceReport& r);

std::string to_human(const VerificationReport& r);
std::string to_human(const SweepReport& r);
std::string to_human(const ConvergenceReport& r);

}  // namespace chronoscale
