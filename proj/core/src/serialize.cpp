#include "chronoscale/serialize.hpp"

#include <charconv>
#include <sstream>

using nlohmann::json;

namespace chronoscale {

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

namespace {

std::string tag_name(ScaleTag t) {
    switch (t) {
        case ScaleTag::Explicit: return "explicit";
        case ScaleTag::HLattice: return "h-lattice";
        case ScaleTag::QPower: return "q-power";
        case ScaleTag::SampledInterval: return "sampled-interval";
    }
    return "?";
}

}  // namespace

json to_json(const TimeScale& ts) {
    json params = json::object();
    switch (ts.tag()) {
        case ScaleTag::HLattice: params["h"] = ts.tag_h(); break;
        case ScaleTag::QPower: params["q"] = ts.tag_q(); break;
        case ScaleTag::SampledInterval: params["n"] = ts.tag_n(); break;
        case ScaleTag::Explicit: break;
    }
    return json{{"tag", tag_name(ts.tag())}, {"params", params}, {"points", ts.points()}};
}

TimeScale scale_from_json(const json& j) {
    // Points are always materialized; the tag is provenance only, so every
    // scale reconstructs through from_points.
    if (!j.contains("points")) throw IoError("scale JSON needs a points array");
    return TimeScale::from_points(j.at("points").get<std::vector<double>>());
}

json to_json(const GridFunction& f) {
    return json{{"scale", to_json(f.scale())}, {"values", f.values()}};
}

GridFunction grid_from_json(const json& j) {
    TimeScale ts = scale_from_json(j.at("scale"));
    return GridFunction(std::move(ts), j.at("values").get<std::vector<double>>());
}

json to_json(const DerivativeField& d) {
    return json{{"points", d.domain.points()}, {"values", d.values}};
}

json to_json(const VerificationReport& r) {
    return json{{"theorem", theorem_name(r.tcase.id)},
                {"exponent", r.tcase.exponent},
                {"a", r.tcase.a},
                {"b", r.tcase.b},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"margin", r.margin},
                {"verdict", verdict_name(r.verdict)},
                {"saturated", r.hypothesis.saturated},
                {"worst_slack", r.hypothesis.worst_slack}};
}

json to_json(const SweepReport& r) {
    json j{{"theorem", theorem_name(r.id)},
           {"exponent_min", r.exponent_min},
           {"exponent_max", r.exponent_max},
           {"seed", r.seed},
           {"trials", r.trials},
           {"admissible", r.admissible},
           {"starved", r.starved},
           {"verdicts",
            {{"holds", r.holds},
             {"violated", r.violated},
             {"hypothesis-failed", r.hypothesis_failed}}},
           {"worst_margin", r.worst_margin},
           {"negative_margin_found", r.negative_margin_found}};
    if (!r.violation_witnesses.empty()) {
        json w = json::array();
        for (const auto& s : r.violation_witnesses) w.push_back(json::parse(s));
        j["violation_witnesses"] = w;
    }
    return j;
}

json to_json(const ConvergenceReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(
            json{{"h", row.h}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"margin", row.margin}});
    json j{{"theorem", r.theorem},
           {"exponent", r.exponent},
           {"rows", rows},
           {"successive_diffs", r.successive_diffs},
           {"converged", r.converged}};
    if (r.continuum_margin) j["continuum_margin"] = *r.continuum_margin;
    return j;
}

std::string csv_header() {
    return "trial,theorem,exponent,a,b,n_points,lhs,rhs,margin,verdict,worst_slack,saturated";
}

std::string to_csv_row(const TrialRecord& t, TheoremId id) {
    const VerificationReport& r = t.report;
    std::ostringstream os;
    os << t.trial << ',' << theorem_name(id) << ',' << format_double(r.tcase.exponent) << ','
       << format_double(r.tcase.a) << ',' << format_double(r.tcase.b) << ',' << t.n_points
       << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
       << format_double(r.margin) << ',' << verdict_name(r.verdict) << ','
       << format_double(r.hypothesis.worst_slack) << ','
       << (r.hypothesis.saturated ? "true" : "false");
    return os.str();
}

std::string to_csv(const SweepReport& r) {
    std::ostringstream os;
    os << csv_header() << '\n';
    for (const auto& t : r.rows) os << to_csv_row(t, r.id) << '\n';
    return os.str();
}

std::string to_csv(const VerificationReport& r) {
    TrialRecord t{0, 0, r};
    return csv_header() + "\n" + to_csv_row(t, r.tcase.id) + "\n";
}

std::string to_csv(const ConvergenceReport& r) {
    std::ostringstream os;
    os << "h,theorem,exponent,lhs,rhs,margin\n";
    for (const auto& row : r.rows)
        os << format_double(row.h) << ',' << r.theorem << ',' << format_double(r.exponent)
           << ',' << format_double(row.lhs) << ',' << format_double(row.rhs) << ','
           << format_double(row.margin) << '\n';
    return os.str();
}

std::string to_human(const VerificationReport& r) {
    std::ostringstream os;
    os << theorem_name(r.tcase.id) << " [" << format_double(r.tcase.a) << ","
       << format_double(r.tcase.b) << "] exponent=" << format_double(r.tcase.exponent) << ": "
       << verdict_name(r.verdict) << " margin=" << format_double(r.margin) << "\n";
    return os.str();
}

std::string to_human(const SweepReport& r) {
    std::ostringstream os;
    os << theorem_name(r.id) << " sweep: trials=" << r.trials << " admissible=" << r.admissible
       << " holds=" << r.holds << " violated=" << r.violated
       << " hypothesis-failed=" << r.hypothesis_failed << " starved=" << r.starved;
    if (r.holds > 0) os << " worst_margin=" << format_double(r.worst_margin);
    if (r.negative_margin_found > 0)
        os << " negative_margin_found=" << r.negative_margin_found;
    os << " wall=" << r.wall_seconds << "s\n";
    return os.str();
}

std::string to_human(const ConvergenceReport& r) {
    std::ostringstream os;
    os << r.theorem << " refinement: " << r.rows.size() << " lattices, "
       << (r.converged ? "converged" : "not converged");
    if (!r.rows.empty()) os << ", final margin=" << format_double(r.rows.back().margin);
    if (r.continuum_margin) os << ", continuum margin=" << format_double(*r.continuum_margin);
    os << "\n";
    return os.str();
}

}  // namespace chronoscale
