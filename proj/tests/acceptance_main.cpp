// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each check pins its own tolerance and runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "chronoscale/harness.hpp"
#include "chronoscale/serialize.hpp"

using namespace chronoscale;

namespace {

int g_failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
    std::printf("%s  %s (%s)\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

TimeScale random_scale(SplitMix64& rng, int max_pts) {
    int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_pts - 1)));
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(n));
    double t = rng.uniform(-5.0, 5.0);
    pts.push_back(t);
    for (int i = 1; i < n; ++i) {
        t += std::exp(rng.uniform(std::log(1e-3), std::log(10.0)));
        pts.push_back(t);
    }
    return TimeScale::from_points(std::move(pts));
}

bool close_rel(double x, double y, double tol) {
    return std::abs(x - y) <= tol * problem_scale(x, y);
}

// 1. Exact identities on random scales: single-jump integral, fundamental
//    theorem, integral additivity, both product-rule expansions.
void criterion_exact_identities() {
    auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(0xC1);
    bool ok = true;
    std::string why;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        TimeScale ts = random_scale(rng, 200);
        std::vector<double> fv(ts.size()), gv(ts.size());
        for (double& v : fv) v = rng.uniform(-5.0, 5.0);
        for (double& v : gv) v = rng.uniform(-5.0, 5.0);
        GridFunction f(ts, std::move(fv)), g(ts, std::move(gv));

        for (std::size_t i = 0; i + 1 < ts.size() && ok; ++i) {
            double t = ts[i];
            double jump = delta_integral(f, t, ts.sigma(t));
            if (!close_rel(jump, f[i] * ts.mu(t), 1e-12)) { ok = false; why = "jump integral"; }
            auto [r1, r2] = product_rule_residual(f, g, t);
            double sc = problem_scale(f[i] * g[i + 1] / ts.mu(t), f[i + 1] * g[i] / ts.mu(t));
            if (std::abs(r1) > 1e-12 * sc || std::abs(r2) > 1e-12 * sc) {
                ok = false;
                why = "product rule";
            }
        }
        GridFunction cum = cumulative_delta(f, ts.min());
        DerivativeField back = delta_derivative(cum);
        for (std::size_t i = 0; i < back.values.size() && ok; ++i) {
            // relative to the conditioning of the difference quotient: the
            // roundoff floor of (cum_{i+1} - cum_i)/mu is eps * |cum| / mu
            double cond = problem_scale(cum[i] / ts.mu(ts[i]), cum[i + 1] / ts.mu(ts[i]));
            double sc = std::max(cond, problem_scale(back.values[i], f[i]));
            if (std::abs(back.values[i] - f[i]) > 1e-12 * sc) { ok = false; why = "ftc"; }
        }

        std::size_t mid = rng.next_below(ts.size());
        double whole = delta_integral(f, ts.min(), ts.max());
        double split = delta_integral(f, ts.min(), ts[mid]) + delta_integral(f, ts[mid], ts.max());
        if (!close_rel(whole, split, 1e-12)) { ok = false; why = "additivity"; }
    }
    double dt = seconds_since(t0);
    if (ok && dt >= 5.0) { ok = false; why = "over time budget"; }
    report("exact-identity suite (1000 random scales, 1e-12 rel)", ok,
           ok ? format_double(dt) + "s" : why);
}

// 2. Power-rule sandwiches and the integer-exponent telescoping identity.
void criterion_power_sandwiches() {
    auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(0xC2);
    const double ps[] = {1.5, 2.0, 3.0, 5.5};
    bool ok = true;
    std::string why;
    for (int trial = 0; trial < 10000 && ok; ++trial) {
        TimeScale ts = random_scale(rng, 30);
        std::vector<double> gv(ts.size());
        double v = rng.uniform(0.0, 2.0);
        for (double& x : gv) {
            x = v;
            v += rng.uniform(0.0, 3.0);
        }
        GridFunction g(ts, std::move(gv));
        double p = ps[rng.next_below(4)];

        for (std::size_t i = 0; i + 1 < ts.size() && ok; ++i) {
            PowerBounds d = power_bounds_delta(g, p, ts[i]);
            double sc = problem_scale(d.lower, d.upper);
            if (d.exact < d.lower - 1e-10 * sc || d.exact > d.upper + 1e-10 * sc) {
                ok = false;
                why = "delta sandwich";
            }
            PowerBounds nb = power_bounds_nabla(g, p, ts[i + 1]);
            double sn = problem_scale(nb.lower, nb.upper);
            if (nb.exact < nb.lower - 1e-10 * sn || nb.exact > nb.upper + 1e-10 * sn) {
                ok = false;
                why = "nabla sandwich";
            }
        }

        // integer p: summing the exact nabla derivative of g^p telescopes
        if (ok && (p == 2.0 || p == 3.0)) {
            double total = 0.0;
            for (std::size_t i = 1; i < ts.size(); ++i)
                total += power_bounds_nabla(g, p, ts[i]).exact * ts.nu(ts[i]);
            double expect = pow_nn(g[ts.size() - 1], p) - pow_nn(g[0], p);
            if (!close_rel(total, expect, 1e-12)) { ok = false; why = "telescoping"; }
        }
    }
    double dt = seconds_since(t0);
    if (ok && dt >= 10.0) { ok = false; why = "over time budget"; }
    report("power-rule sandwiches (10000 tuples, slack >= -1e-10*scale)", ok,
           ok ? format_double(dt) + "s" : why);
}

// 3. Soundness sweeps: >= 1000 admissible witnesses per theorem, zero
//    violations, starvation < 20%.
void criterion_sweeps() {
    auto t0 = std::chrono::steady_clock::now();
    const TheoremId ids[] = {TheoremId::Qi3_1, TheoremId::Qi3_2,      TheoremId::Qi3_3,
                             TheoremId::Qi3_4, TheoremId::Qi3_5,      TheoremId::Qi3_6Nabla,
                             TheoremId::Qi3_7Nabla};
    bool ok = true;
    std::string why;
    for (TheoremId id : ids) {
        ScaleSpec ss;
        ss.family = ScaleFamily::Mixed;
        WitnessSpec ws;
        SweepConfig cfg;
        cfg.trials = 1250;
        cfg.seed = 0xC3 + static_cast<std::uint64_t>(id);
        cfg.min_admissible_fraction = 0.8;
        try {
            SweepReport r = sweep(id, ss, ws, cfg);
            if (r.violated != 0) {
                ok = false;
                why = std::string(theorem_name(id)) + ": violated";
            } else if (r.admissible < 1000) {
                ok = false;
                why = std::string(theorem_name(id)) + ": only " +
                      std::to_string(r.admissible) + " admissible";
            } else if (r.starved * 5 >= cfg.trials) {
                ok = false;
                why = std::string(theorem_name(id)) + ": starvation >= 20%";
            }
        } catch (const GeneratorStarvation&) {
            ok = false;
            why = std::string(theorem_name(id)) + ": starved";
        }
        if (!ok) break;
    }
    double dt = seconds_since(t0);
    if (ok && dt >= 60.0) { ok = false; why = "over time budget"; }
    report("soundness sweeps (7 theorems x >=1000 admissible, 0 violated)", ok,
           ok ? format_double(dt) + "s" : why);
}

// 4. Two-point oracle: hand-expanded sums on T = {0, 1}, t = 3.
void criterion_two_point_oracle() {
    SplitMix64 rng(0xC4);
    TimeScale ts = TimeScale::from_points({0.0, 1.0});
    bool ok = true;
    std::string why;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        double c = rng.uniform(0.0, 10.0);
        double d = c + rng.uniform(0.0, 10.0);  // nondecreasing pair
        GridFunction f(ts, {c, d});
        TheoremCase tc{TheoremId::Qi3_1, 3.0, 0.0, 1.0};
        if (!check_hypothesis(tc, f).holds) { ok = false; why = "oracle pair inadmissible"; }
        auto [lhs, rhs] = eval_conclusion(tc, f);
        // by hand: integral of f^3 is c^3, integral of f is c, mu(0) = 1
        double o_lhs = c * c * c - c * c;
        double o_rhs = c * (c - 2.0) * c;
        if (!close_rel(lhs, o_lhs, 1e-12) || !close_rel(rhs, o_rhs, 1e-12)) {
            ok = false;
            why = "mismatch vs hand-expanded sums";
        }
    }
    report("two-point closed-form oracle (100 pairs, 1e-12 rel)", ok, ok ? "exact" : why);
}

// 5. Continuum recovery: equality profile f(x) = x at t = 3 on [0,1]; the
//    closed-form continuum margin is 0 and the rhs bracket vanishes.
void criterion_continuum_recovery() {
    std::vector<double> hs;
    for (int k = 3; k <= 12; ++k) hs.push_back(std::ldexp(1.0, -k));
    ConvergenceReport r = refine_study(
        TheoremId::Qi3_1, 3.0, 0.0, 1.0, [](double x) { return x; },
        [](double) { return 1.0; }, hs, 0.0);
    bool ok = r.rows.size() == hs.size();
    std::string why = "row count";
    if (ok) {
        double final_margin = r.rows.back().margin;
        ok = std::abs(final_margin - *r.continuum_margin) < 1e-3 && r.converged;
        why = "margin did not converge to the closed form";
        if (ok) {
            // rhs bracket f^{t-2}(a)[f(a) - (t-1)mu^{t-2}(a)] -> f^{t-1}(a) = 0
            ok = std::abs(r.rows.back().rhs) < 1e-3;
            why = "rhs bracket did not vanish";
        }
    }
    report("continuum recovery (h = 2^-3 .. 2^-12, margin within 1e-3)", ok,
           ok ? "converged to 0" : why);
}

// 6. Non-vacuity: flat witnesses break both hypothesis and conclusion.
void criterion_non_vacuity() {
    auto t0 = std::chrono::steady_clock::now();
    const TheoremId ids[] = {TheoremId::Qi3_1, TheoremId::Qi3_2,      TheoremId::Qi3_3,
                             TheoremId::Qi3_4, TheoremId::Qi3_5,      TheoremId::Qi3_6Nabla,
                             TheoremId::Qi3_7Nabla};
    bool ok = true;
    std::string why;
    for (TheoremId id : ids) {
        SweepReport r = counterexample_search(id, min_exponent(id), 30, 0xC6);
        if (r.negative_margin_found < 1) {
            ok = false;
            why = std::string(theorem_name(id)) + ": no negative margin found";
            break;
        }
    }
    double dt = seconds_since(t0);
    if (ok && dt >= 5.0) { ok = false; why = "over time budget"; }
    report("non-vacuity (hypothesis-violating f with margin < 0, all families)", ok,
           ok ? format_double(dt) + "s" : why);
}

// 7. Byte-identical CSV under a repeated seed.
void criterion_determinism() {
    ScaleSpec ss;
    ss.family = ScaleFamily::Mixed;
    WitnessSpec ws;
    SweepConfig cfg;
    cfg.trials = 200;
    cfg.seed = 0xC7;
    std::string c1 = to_csv(sweep(TheoremId::Qi3_3, ss, ws, cfg));
    std::string c2 = to_csv(sweep(TheoremId::Qi3_3, ss, ws, cfg));
    report("determinism (repeated seed, byte-identical CSV)", c1 == c2,
           c1 == c2 ? std::to_string(c1.size()) + " bytes" : "outputs differ");
}

}  // namespace

int main() {
    criterion_exact_identities();
    criterion_power_sandwiches();
    criterion_sweeps();
    criterion_two_point_oracle();
    criterion_continuum_recovery();
    criterion_non_vacuity();
    criterion_determinism();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
