#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chronoscale/rng.hpp"
#include "chronoscale/theorems.hpp"

namespace chronoscale {

enum class ScaleFamily { Explicit, HLattice, QPower, RandomScattered, Mixed };

struct ScaleSpec {
    ScaleFamily family = ScaleFamily::RandomScattered;

    // explicit
    std::vector<double> points;

    // h-lattice over [origin, origin + length], h drawn log-uniformly
    double origin = 0.0;
    double length = 5.0;
    double h_min = 0.05;
    double h_max = 1.0;

    // q-power
    double base = 1.0;
    double q_min = 1.05;
    double q_max = 2.0;
    int k_count = 10;

    // random-scattered: gaps drawn log-uniformly in [gap_min, gap_max]
    int size_min = 2;
    int size_max = 40;
    double gap_min = 1e-3;
    double gap_max = 10.0;
};

TimeScale gen_scale(const ScaleSpec& spec, std::uint64_t seed);

enum class WitnessStrategy { SteepFamily, Rejection, EqualityCase };

struct WitnessSpec {
    WitnessStrategy strategy = WitnessStrategy::SteepFamily;
    double f0_min = 0.0;
    double f0_max = 2.0;
    double slope_floor = 0.0;
    double amp_min = 0.0;
    double amp_max = 1.0;        // rejection-sampling slope amplitude
    int attempt_budget = 200;
};

// Nonnegative nondecreasing f passing check_hypothesis, or nullopt after
// the attempt budget (starvation is reported, never silently papered over).
std::optional<GridFunction> gen_witness(const TheoremCase& c, const TimeScale& ts,
                                        const WitnessSpec& spec, std::uint64_t seed);

struct TrialRecord {
    int trial = 0;
    std::size_t n_points = 0;
    VerificationReport report;
};

struct GeneratorStarvation;

struct SweepReport {
    TheoremId id = TheoremId::Qi3_1;
    double exponent_min = 0.0;
    double exponent_max = 0.0;
    std::uint64_t seed = 0;
    int trials = 0;
    int admissible = 0;
    int starved = 0;
    int holds = 0;
    int violated = 0;
    int hypothesis_failed = 0;
    int negative_margin_found = 0;  // search mode: inadmissible f with margin < 0
    double worst_margin = 0.0;      // minimum margin among holds
    std::vector<TrialRecord> rows;
    std::vector<std::string> violation_witnesses;  // serialized grid functions
    double wall_seconds = 0.0;                     // excluded from CSV/JSON output
};

struct GeneratorStarvation : Error {
    explicit GeneratorStarvation(SweepReport rep)
        : Error("witness generator starved below the configured minimum"),
          report(std::move(rep)) {}
    SweepReport report;
};

struct SweepConfig {
    int trials = 1000;
    std::uint64_t seed = 0;
    // Exponent drawn uniformly per trial; [min_exponent, min_exponent + span]
    // when exponent_min < 0 (i.e. unset).
    double exponent_min = -1.0;
    double exponent_max = -1.0;
    double min_admissible_fraction = 0.0;  // below this, GeneratorStarvation
};

SweepReport sweep(TheoremId id, const ScaleSpec& sspec, const WitnessSpec& wspec,
                  const SweepConfig& cfg);

// Non-vacuity probe: nonnegative nondecreasing f that FAIL the hypothesis;
// counts how often the conclusion fails too.
SweepReport counterexample_search(TheoremId id, double exponent, int trials,
                                  std::uint64_t seed);

struct RefineRow {
    double h = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

struct ConvergenceReport {
    std::string theorem;
    double exponent = 0.0;
    std::vector<RefineRow> rows;
    std::vector<double> successive_diffs;  // |margin_k - margin_{k+1}|
    bool converged = false;
    std::optional<double> continuum_margin;  // classical closed form, caller-supplied
};

using StudyId = std::variant<TheoremId, ClassicalId>;

ConvergenceReport refine_study(const StudyId& id, double exponent, double a, double b,
                               const std::function<double(double)>& f,
                               const std::function<double(double)>& fprime,
                               const std::vector<double>& h_seq,
                               std::optional<double> continuum_margin = std::nullopt,
                               double tol = 1e-6);

}  // namespace chronoscale
