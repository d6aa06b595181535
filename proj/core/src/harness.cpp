#include "chronoscale/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "chronoscale/serialize.hpp"

namespace chronoscale {

TimeScale gen_scale(const ScaleSpec& spec, std::uint64_t seed) {
    SplitMix64 rng(seed);
    switch (spec.family) {
        case ScaleFamily::Explicit:
            if (spec.points.empty()) throw BadSpec("explicit scale spec needs points");
            return TimeScale::from_points(spec.points);
        case ScaleFamily::HLattice: {
            if (!(spec.h_min > 0.0) || spec.h_min > spec.h_max)
                throw BadSpec("h-lattice spec needs 0 < h_min <= h_max");
            double h = std::exp(rng.uniform(std::log(spec.h_min), std::log(spec.h_max)));
            return TimeScale::h_lattice(spec.origin, spec.origin + spec.length, h);
        }
        case ScaleFamily::QPower: {
            if (!(spec.q_min > 1.0) || spec.q_min > spec.q_max)
                throw BadSpec("q-power spec needs 1 < q_min <= q_max");
            if (spec.k_count < 1) throw BadSpec("q-power spec needs k_count >= 1");
            double q = std::exp(rng.uniform(std::log(spec.q_min), std::log(spec.q_max)));
            return TimeScale::q_power(spec.base, q, 0, spec.k_count - 1);
        }
        case ScaleFamily::RandomScattered: {
            if (!(spec.gap_min > 0.0) || spec.gap_min > spec.gap_max)
                throw BadSpec("scattered spec needs 0 < gap_min <= gap_max");
            if (spec.size_min < 1 || spec.size_min > spec.size_max)
                throw BadSpec("scattered spec needs 1 <= size_min <= size_max");
            int n = spec.size_min +
                    static_cast<int>(rng.next_below(
                        static_cast<std::uint64_t>(spec.size_max - spec.size_min) + 1));
            std::vector<double> pts;
            pts.reserve(static_cast<std::size_t>(n));
            double t = spec.origin;
            pts.push_back(t);
            double lg_lo = std::log(spec.gap_min), lg_hi = std::log(spec.gap_max);
            for (int i = 1; i < n; ++i) {
                t += std::exp(rng.uniform(lg_lo, lg_hi));
                pts.push_back(t);
            }
            return TimeScale::from_points(std::move(pts));
        }
        case ScaleFamily::Mixed: {
            ScaleSpec sub = spec;
            switch (rng.next_below(3)) {
                case 0: sub.family = ScaleFamily::HLattice; break;
                case 1: sub.family = ScaleFamily::QPower; break;
                default: sub.family = ScaleFamily::RandomScattered; break;
            }
            return gen_scale(sub, rng.next_u64());
        }
    }
    throw BadSpec("unknown scale family");
}

namespace {

// f-independent part of the pointwise hypothesis RHS for the segment slope
// constraints, plus the exponent with which the two-step growth ratio of f
// enters the condition.
struct SteepPlan {
    std::vector<double> req;  // per segment j: x_j -> x_{j+1}
    double ratio_exp = 0.0;   // 0 when the condition does not reference f's growth
};

SteepPlan steep_plan(const TheoremCase& c, const TimeScale& ts) {
    const std::size_t n = ts.size();
    const std::size_t ia = ts.index_of(c.a);
    const std::size_t ib = ts.index_of(c.b);
    const double e = c.exponent;
    SteepPlan plan;
    plan.req.assign(n > 0 ? n - 1 : 0, 0.0);

    auto sig_geom = [&](std::size_t i, double& sig2_minus_a, double& sig_d) {
        std::size_t s1 = i + 1;
        std::size_t s2 = ts.sigma_index(s1);
        sig2_minus_a = ts[s2] - c.a;
        sig_d = (ts[s2] - ts[s1]) / (ts[i + 1] - ts[i]);
    };

    switch (c.id) {
        case TheoremId::Qi3_1:
            plan.ratio_exp = e - 2.0;
            for (std::size_t i = ia; i < ib; ++i) {
                double s2a, sd;
                sig_geom(i, s2a, sd);
                plan.req[i] = (e - 2.0) * pow_nn(s2a, e - 3.0) * sd;
            }
            break;
        case TheoremId::Qi3_2:
            plan.ratio_exp = e;
            for (std::size_t i = ia; i < ib; ++i) {
                double s2a, sd;
                sig_geom(i, s2a, sd);
                plan.req[i] = e / pow_nn(c.b - c.a, e - 1.0) * pow_nn(s2a, e - 1.0) * sd;
            }
            break;
        case TheoremId::Qi3_3:
            plan.ratio_exp = e - 3.0;
            for (std::size_t i = ia; i < ib; ++i) {
                double s2a, sd;
                sig_geom(i, s2a, sd);
                plan.req[i] = (e - 2.0) * pow_nn(s2a, e - 3.0) * sd;
            }
            break;
        case TheoremId::Qi3_4:
            // Condition at x_i pins the slope of the next segment: needs
            // f(sigma^2) - f(sigma) >= e * (sigma^2 - sigma).
            for (std::size_t i = ia; i < ib; ++i)
                if (i + 2 < n) plan.req[i + 1] = std::max(plan.req[i + 1], e);
            break;
        case TheoremId::Qi3_5:
            for (std::size_t i = ia; i < ib; ++i)
                if (i + 2 < n)
                    plan.req[i + 1] = std::max(
                        plan.req[i + 1], (e - 2.0) * pow_nn(ts[i + 2] - c.a, e - 3.0));
            break;
        case TheoremId::Qi3_6Nabla:
            plan.ratio_exp = e - 2.0;
            for (std::size_t i = ia + 1; i <= ib; ++i)
                plan.req[i - 1] = (e - 2.0) * pow_nn(ts[i] - c.a, e - 3.0);
            break;
        case TheoremId::Qi3_7Nabla:
            plan.ratio_exp = e;
            for (std::size_t i = ia + 1; i <= ib; ++i)
                plan.req[i - 1] =
                    e / pow_nn(c.b - c.a, e - 1.0) * pow_nn(ts[i] - c.a, e - 1.0);
            break;
    }
    return plan;
}

// Base value that keeps the growth ratio (f_max/f_min)^ratio_exp below 2
// under a total-increase budget; the exact checker re-validates afterwards.
double base_for_budget(double budget, double ratio_exp) {
    if (ratio_exp <= 0.0 || budget <= 0.0) return 0.0;
    double arg = std::log(2.0) / ratio_exp;
    if (arg > 700.0) return budget * 1e-6;  // ratio bound is astronomically loose
    return budget / std::expm1(arg);
}

std::optional<GridFunction> try_steep(const TheoremCase& c, const TimeScale& ts,
                                      const WitnessSpec& spec, SplitMix64& rng,
                                      double safety) {
    const std::size_t n = ts.size();
    SteepPlan plan = steep_plan(c, ts);
    double req_max = 0.0;
    for (double r : plan.req) req_max = std::max(req_max, r);
    const double total_len = ts.max() - ts.min();
    // Slopes below stay <= 1.5 * safety * req + 0.3 * req_max + slope_floor,
    // so the total increase is bounded by this budget.
    const double budget =
        (1.5 * safety + 0.3) * std::max(req_max, spec.slope_floor) * total_len +
        spec.slope_floor * total_len;
    double f0 = spec.f0_min + (spec.f0_max - spec.f0_min) * rng.next_double();
    if (plan.ratio_exp > 0.0 && req_max > 0.0)
        f0 += base_for_budget(budget, plan.ratio_exp) * (1.0 + rng.next_double());

    std::vector<double> vals(n);
    vals[0] = f0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        double extra = 0.3 * req_max * rng.next_double();
        double slope = safety * plan.req[j] * (1.0 + rng.next_double() * 0.5) + extra +
                       spec.slope_floor;
        vals[j + 1] = vals[j] + slope * (ts[j + 1] - ts[j]);
    }
    for (double v : vals)
        if (!std::isfinite(v)) return std::nullopt;
    GridFunction f(ts, std::move(vals));
    if (check_hypothesis(c, f).holds) return f;
    return std::nullopt;
}

std::optional<GridFunction> try_rejection(const TheoremCase& c, const TimeScale& ts,
                                          const WitnessSpec& spec, SplitMix64& rng) {
    std::vector<double> vals(ts.size());
    vals[0] = spec.f0_min + (spec.f0_max - spec.f0_min) * rng.next_double();
    for (std::size_t j = 0; j + 1 < ts.size(); ++j) {
        double slope = spec.amp_min + (spec.amp_max - spec.amp_min) * rng.next_double();
        vals[j + 1] = vals[j] + slope * (ts[j + 1] - ts[j]);
    }
    GridFunction f(ts, std::move(vals));
    if (check_hypothesis(c, f).holds) return f;
    return std::nullopt;
}

std::optional<GridFunction> try_equality(const TheoremCase& c, const TimeScale& ts,
                                         const WitnessSpec& spec, SplitMix64& rng) {
    if (c.id == TheoremId::Qi3_4) {
        double f0 = spec.f0_min + (spec.f0_max - spec.f0_min) * rng.next_double();
        GridFunction f =
            tabulate(ts, [&](double x) { return f0 + c.exponent * (x - ts.min()); });
        if (check_hypothesis(c, f).holds) return f;
    }
    // Classical tight profile; exact only in the continuum, so it must pass
    // the checker to be emitted.
    GridFunction prof = tabulate(ts, [&](double x) {
        return pow_nn(std::max(x - c.a, 0.0), std::max(c.exponent - 2.0, 1.0));
    });
    if (check_hypothesis(c, prof).holds) return prof;
    GridFunction zero = tabulate(ts, [](double) { return 0.0; });
    if (check_hypothesis(c, zero).holds) return zero;
    return std::nullopt;
}

}  // namespace

std::optional<GridFunction> gen_witness(const TheoremCase& c, const TimeScale& ts,
                                        const WitnessSpec& spec, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < spec.attempt_budget; ++attempt) {
        std::optional<GridFunction> w;
        switch (spec.strategy) {
            case WitnessStrategy::SteepFamily:
                // Escalate the safety factor if rounding ever defeats the
                // conservative construction.
                w = try_steep(c, ts, spec, rng, 2.0 * static_cast<double>(1 << std::min(attempt, 8)));
                break;
            case WitnessStrategy::Rejection:
                w = try_rejection(c, ts, spec, rng);
                break;
            case WitnessStrategy::EqualityCase:
                w = try_equality(c, ts, spec, rng);
                break;
        }
        if (w) return w;
        if (spec.strategy == WitnessStrategy::EqualityCase) break;  // deterministic profiles
    }
    return std::nullopt;
}

SweepReport sweep(TheoremId id, const ScaleSpec& sspec, const WitnessSpec& wspec,
                  const SweepConfig& cfg) {
    if (cfg.trials < 1) throw BadSpec("sweep requires trials >= 1");
    auto t0 = std::chrono::steady_clock::now();

    SweepReport rep;
    rep.id = id;
    rep.seed = cfg.seed;
    rep.trials = cfg.trials;
    rep.exponent_min = cfg.exponent_min >= min_exponent(id) ? cfg.exponent_min
                                                            : min_exponent(id);
    rep.exponent_max = cfg.exponent_max >= rep.exponent_min ? cfg.exponent_max
                                                            : rep.exponent_min + 3.0;
    bool first_margin = true;
    for (int k = 0; k < cfg.trials; ++k) {
        SplitMix64 rng(trial_seed(cfg.seed, static_cast<std::uint64_t>(k)));
        std::uint64_t scale_seed = rng.next_u64();
        std::uint64_t witness_seed = rng.next_u64();
        double expn = rng.uniform(rep.exponent_min, rep.exponent_max);

        TimeScale ts = gen_scale(sspec, scale_seed);
        if (ts.size() < 2) {
            ++rep.starved;
            continue;
        }
        TheoremCase c{id, expn, ts.min(), ts.max()};
        std::optional<GridFunction> w = gen_witness(c, ts, wspec, witness_seed);
        if (!w) {
            ++rep.starved;
            continue;
        }
        VerificationReport vr = verify(c, *w);
        if (vr.hypothesis.holds) ++rep.admissible;
        switch (vr.verdict) {
            case Verdict::Holds:
                ++rep.holds;
                if (first_margin || vr.margin < rep.worst_margin) {
                    rep.worst_margin = vr.margin;
                    first_margin = false;
                }
                break;
            case Verdict::Violated:
                ++rep.violated;
                rep.violation_witnesses.push_back(to_json(*w).dump());
                break;
            case Verdict::HypothesisFailed: ++rep.hypothesis_failed; break;
        }
        rep.rows.push_back(TrialRecord{k, ts.size(), std::move(vr)});
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (rep.admissible <
        static_cast<int>(cfg.min_admissible_fraction * static_cast<double>(cfg.trials)))
        throw GeneratorStarvation(std::move(rep));
    return rep;
}

SweepReport counterexample_search(TheoremId id, double exponent, int trials,
                                  std::uint64_t seed) {
    if (trials < 1) throw BadSpec("counterexample_search requires trials >= 1");
    auto t0 = std::chrono::steady_clock::now();

    SweepReport rep;
    rep.id = id;
    rep.seed = seed;
    rep.trials = trials;
    rep.exponent_min = rep.exponent_max = exponent;
    for (int k = 0; k < trials; ++k) {
        SplitMix64 rng(trial_seed(seed, static_cast<std::uint64_t>(k)));
        // Small positive near-constants on long unit lattices: nonnegative
        // and nondecreasing, but far too flat for the derivative-growth
        // hypotheses.
        double len = 4.0 + static_cast<double>(rng.next_below(17));
        TimeScale ts = TimeScale::h_lattice(0.0, len, 1.0);
        double c0 = rng.uniform(0.01, 0.5);
        double eps = rng.next_double() < 0.5 ? 0.0 : rng.uniform(0.0, 1e-3) * c0 / len;
        GridFunction f = tabulate(ts, [&](double x) { return c0 + eps * x; });

        TheoremCase c{id, exponent, ts.min(), ts.max()};
        VerificationReport vr = verify(c, f);
        if (vr.verdict != Verdict::HypothesisFailed) continue;  // admissible: excluded
        if (vr.margin < 0.0) ++rep.negative_margin_found;
        ++rep.hypothesis_failed;
        rep.rows.push_back(TrialRecord{k, ts.size(), std::move(vr)});
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ConvergenceReport refine_study(const StudyId& id, double exponent, double a, double b,
                               const std::function<double(double)>& f,
                               const std::function<double(double)>& fprime,
                               const std::vector<double>& h_seq,
                               std::optional<double> continuum_margin, double tol) {
    if (h_seq.empty()) throw BadSequence();
    for (std::size_t i = 0; i < h_seq.size(); ++i) {
        if (!(h_seq[i] > 0.0)) throw BadSequence();
        if (i > 0 && h_seq[i] >= h_seq[i - 1]) throw BadSequence();
    }

    ConvergenceReport rep;
    rep.exponent = exponent;
    rep.continuum_margin = continuum_margin;
    if (std::holds_alternative<TheoremId>(id))
        rep.theorem = theorem_name(std::get<TheoremId>(id));
    else
        rep.theorem = classical_name(std::get<ClassicalId>(id));

    for (double h : h_seq) {
        RefineRow row;
        row.h = h;
        if (std::holds_alternative<ClassicalId>(id)) {
            ClassicalResult cr =
                classical_case(std::get<ClassicalId>(id), exponent, a, b, f, fprime, h);
            row.lhs = cr.lhs;
            row.rhs = cr.rhs;
        } else {
            TimeScale lat = TimeScale::h_lattice(a, b, h);
            GridFunction g = tabulate(lat, f);
            TheoremCase c{std::get<TheoremId>(id), exponent, lat.min(), lat.max()};
            auto [lhs, rhs] = eval_conclusion(c, g);
            row.lhs = lhs;
            row.rhs = rhs;
        }
        row.margin = row.lhs - row.rhs;
        rep.rows.push_back(row);
    }
    for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i)
        rep.successive_diffs.push_back(std::abs(rep.rows[i].margin - rep.rows[i + 1].margin));

    const auto& d = rep.successive_diffs;
    if (d.size() >= 3) {
        std::size_t m = d.size();
        rep.converged = d[m - 3] >= d[m - 2] && d[m - 2] >= d[m - 1] && d[m - 1] < tol;
    }
    return rep;
}

}  // namespace chronoscale
