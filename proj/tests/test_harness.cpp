#include <doctest.h>

#include <cmath>

#include "chronoscale/harness.hpp"
#include "chronoscale/serialize.hpp"

using namespace chronoscale;

TEST_CASE("gen_scale is deterministic and honors its spec") {
    ScaleSpec s;
    s.family = ScaleFamily::RandomScattered;
    s.size_min = 5;
    s.size_max = 40;
    s.gap_min = 1e-2;
    s.gap_max = 2.0;
    TimeScale a = gen_scale(s, 12345);
    TimeScale b = gen_scale(s, 12345);
    CHECK(a == b);
    CHECK(a.size() >= 5);
    CHECK(a.size() <= 40);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        double gap = a.points()[i + 1] - a.points()[i];
        CHECK(gap >= 1e-2 * (1 - 1e-12));
        CHECK(gap <= 2.0 * (1 + 1e-12));
    }
    TimeScale c = gen_scale(s, 54321);
    CHECK_FALSE(a == c);
}

TEST_CASE("gen_scale rejects unusable specs") {
    ScaleSpec s;
    s.family = ScaleFamily::RandomScattered;
    s.gap_min = 0.0;
    CHECK_THROWS_AS(gen_scale(s, 1), BadSpec);
    ScaleSpec s2;
    s2.family = ScaleFamily::RandomScattered;
    s2.size_min = 10;
    s2.size_max = 4;
    CHECK_THROWS_AS(gen_scale(s2, 1), BadSpec);
    ScaleSpec s3;
    s3.family = ScaleFamily::Explicit;  // no points given
    CHECK_THROWS_AS(gen_scale(s3, 1), BadSpec);
}

TEST_CASE("lattice families produce lattices") {
    ScaleSpec s;
    s.family = ScaleFamily::HLattice;
    TimeScale ts = gen_scale(s, 7);
    double h = ts.points()[1] - ts.points()[0];
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        CHECK(ts.points()[i + 1] - ts.points()[i] == doctest::Approx(h).epsilon(1e-9));

    s.family = ScaleFamily::QPower;
    TimeScale q = gen_scale(s, 7);
    double ratio = q.points()[1] / q.points()[0];
    for (std::size_t i = 0; i + 1 < q.size(); ++i)
        CHECK(q.points()[i + 1] / q.points()[i] == doctest::Approx(ratio).epsilon(1e-10));
}

TEST_CASE("steep witnesses clear every hypothesis checker") {
    WitnessSpec w;
    ScaleSpec s;
    s.family = ScaleFamily::Mixed;
    for (TheoremId id : {TheoremId::Qi3_1, TheoremId::Qi3_2, TheoremId::Qi3_3,
                         TheoremId::Qi3_4, TheoremId::Qi3_5, TheoremId::Qi3_6Nabla,
                         TheoremId::Qi3_7Nabla}) {
        int produced = 0;
        for (std::uint64_t k = 0; k < 25; ++k) {
            TimeScale ts = gen_scale(s, trial_seed(99, k));
            double e = min_exponent(id) + 0.5 * static_cast<double>(k % 5);
            TheoremCase c{id, e, ts.min(), ts.max()};
            auto wit = gen_witness(c, ts, w, trial_seed(1000 + k, k));
            if (!wit) continue;
            ++produced;
            VerificationReport r = verify(c, *wit);
            CHECK(r.hypothesis.holds);
            CHECK(r.verdict == Verdict::Holds);
        }
        // admissibility rate well above the starvation threshold
        CHECK(produced >= 20);
    }
}

TEST_CASE("equality strategy returns a valid profile deterministically") {
    WitnessSpec w;
    w.strategy = WitnessStrategy::EqualityCase;
    TimeScale ts = TimeScale::h_lattice(0, 5, 1);
    TheoremCase c{TheoremId::Qi3_6Nabla, 3, 0, 5};
    auto wit = gen_witness(c, ts, w, 42);
    REQUIRE(wit.has_value());
    CHECK(check_hypothesis(c, *wit).holds);

    TheoremCase lin{TheoremId::Qi3_4, 2, 0, 5};
    auto wl = gen_witness(lin, ts, w, 42);
    REQUIRE(wl.has_value());
    CHECK(check_hypothesis(lin, *wl).holds);
}

TEST_CASE("rejection strategy starves on a hostile window") {
    WitnessSpec w;
    w.strategy = WitnessStrategy::Rejection;
    w.attempt_budget = 20;
    w.amp_min = 1e-4;
    w.amp_max = 1e-3;  // amplitudes far too small for the required slopes
    TimeScale ts = TimeScale::h_lattice(0, 40, 1);
    TheoremCase c{TheoremId::Qi3_1, 6, 0, 40};
    auto wit = gen_witness(c, ts, w, 7);
    CHECK_FALSE(wit.has_value());
}

TEST_CASE("sweep is sound and deterministic") {
    ScaleSpec ss;
    ss.family = ScaleFamily::Mixed;
    WitnessSpec ws;
    SweepConfig cfg;
    cfg.trials = 60;
    cfg.seed = 2024;
    SweepReport r1 = sweep(TheoremId::Qi3_2, ss, ws, cfg);
    CHECK(r1.violated == 0);
    CHECK(r1.admissible >= 48);  // >= 80% of 60
    SweepReport r2 = sweep(TheoremId::Qi3_2, ss, ws, cfg);
    CHECK(to_csv(r1) == to_csv(r2));

    cfg.seed = 2025;
    SweepReport r3 = sweep(TheoremId::Qi3_2, ss, ws, cfg);
    CHECK(to_csv(r1) != to_csv(r3));
}

TEST_CASE("sweep rejects trials < 1 and reports starvation with its partial tally") {
    ScaleSpec ss;
    WitnessSpec ws;
    SweepConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(sweep(TheoremId::Qi3_1, ss, ws, cfg), BadSpec);

    SweepConfig hard;
    hard.trials = 10;
    hard.seed = 5;
    hard.min_admissible_fraction = 2.0;  // cannot be met
    try {
        sweep(TheoremId::Qi3_1, ss, ws, hard);
        FAIL("expected GeneratorStarvation");
    } catch (const GeneratorStarvation& g) {
        CHECK(g.report.trials == 10);
        CHECK(g.report.admissible <= 10);
    }
}

TEST_CASE("counterexample search finds negative margins behind failed hypotheses") {
    for (TheoremId id : {TheoremId::Qi3_1, TheoremId::Qi3_2, TheoremId::Qi3_3,
                         TheoremId::Qi3_4, TheoremId::Qi3_5, TheoremId::Qi3_6Nabla,
                         TheoremId::Qi3_7Nabla}) {
        SweepReport r = counterexample_search(id, min_exponent(id), 40, 11);
        CHECK(r.negative_margin_found > 0);
        CHECK(r.violated == 0);  // hypothesis-failed cases are not violations
        CHECK(r.hypothesis_failed > 0);
    }
}

TEST_CASE("refinement study validates its step sequence") {
    auto f = [](double x) { return x; };
    auto fp = [](double) { return 1.0; };
    CHECK_THROWS_AS(refine_study(TheoremId::Qi3_1, 3, 0, 1, f, fp, {}), BadSequence);
    CHECK_THROWS_AS(refine_study(TheoremId::Qi3_1, 3, 0, 1, f, fp, {0.1, 0.2}),
                    BadSequence);
    CHECK_THROWS_AS(refine_study(TheoremId::Qi3_1, 3, 0, 1, f, fp, {0.1, -0.05}),
                    BadSequence);
}

TEST_CASE("identity profile converges to the flat continuum margin") {
    std::vector<double> hs;
    for (int k = 3; k <= 10; ++k) hs.push_back(std::ldexp(1.0, -k));
    ConvergenceReport r = refine_study(
        TheoremId::Qi3_1, 3, 0, 1, [](double x) { return x; },
        [](double) { return 1.0; }, hs, 0.0);
    CHECK(r.rows.size() == hs.size());
    // f(x) = x at t = 3: both sides of the discrete inequality coincide.
    for (const RefineRow& row : r.rows) CHECK(std::abs(row.margin) < 1e-12);
    CHECK(r.converged);
    REQUIRE(r.continuum_margin.has_value());
    CHECK(std::abs(r.rows.back().margin - *r.continuum_margin) < 1e-9);
}

TEST_CASE("continuum equality profile keeps nonnegative margin under refinement") {
    ConvergenceReport r = refine_study(
        TheoremId::Qi3_3, 3, 0, 1, [](double x) { return x; },
        [](double) { return 1.0; }, {1.0 / 8, 1.0 / 16, 1.0 / 32});
    for (const RefineRow& row : r.rows) CHECK(row.margin >= -1e-10);
}

TEST_CASE("classical study goes through the continuum evaluator") {
    ConvergenceReport r = refine_study(
        ClassicalId::Krasniqi1_4, 3, 0, 1, [](double x) { return x; },
        [](double) { return 1.0; }, {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128});
    CHECK(r.theorem == "krasniqi-1.4");
    CHECK(r.rows.size() == 5);
}
