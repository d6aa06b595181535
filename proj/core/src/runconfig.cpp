#include "chronoscale/runconfig.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chronoscale/serialize.hpp"

using nlohmann::json;

namespace chronoscale {

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Verify: return "verify";
        case Command::Sweep: return "sweep";
        case Command::Refine: return "refine";
        case Command::Search: return "search";
        case Command::Selftest: return "selftest";
    }
    return "?";
}

namespace {

Command command_from_name(const std::string& s) {
    if (s == "verify") return Command::Verify;
    if (s == "sweep") return Command::Sweep;
    if (s == "refine") return Command::Refine;
    if (s == "search") return Command::Search;
    if (s == "selftest") return Command::Selftest;
    throw UsageError("unknown command: " + s);
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw UsageError("bad number in list: " + item);
        }
    }
    return out;
}

TimeScale parse_scale_syntax(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("bad scale spec: " + s);
    std::string kind = s.substr(0, colon);
    std::vector<double> v = parse_double_list(s.substr(colon + 1));
    if (kind == "h") {
        if (v.size() != 3) throw UsageError("scale h:a,b,h needs three numbers");
        return TimeScale::h_lattice(v[0], v[1], v[2]);
    }
    if (kind == "q") {
        if (v.size() != 4) throw UsageError("scale q:base,q,kmin,kmax needs four numbers");
        return TimeScale::q_power(v[0], v[1], static_cast<int>(v[2]), static_cast<int>(v[3]));
    }
    if (kind == "pts") {
        return TimeScale::from_points(v);
    }
    throw UsageError("unknown scale family: " + kind);
}

struct ClosedForm {
    std::function<double(double)> f;
    std::function<double(double)> fprime;
};

ClosedForm make_closed_form(const std::string& spec, double a) {
    if (spec == "zero")
        return {[](double) { return 0.0; }, [](double) { return 0.0; }};
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    if (kind == "linear") {
        std::vector<double> v = parse_double_list(spec.substr(colon + 1));
        if (v.size() != 2) throw UsageError("function linear:c0,slope needs two numbers");
        double c0 = v[0], s = v[1];
        return {[c0, s, a](double x) { return c0 + s * (x - a); }, [s](double) { return s; }};
    }
    if (kind == "power") {
        std::vector<double> v = parse_double_list(spec.substr(colon + 1));
        if (v.size() != 1) throw UsageError("function power:k needs one number");
        double k = v[0];
        return {[k, a](double x) { return pow_nn(x - a, k); },
                [k, a](double x) { return k * pow_nn(x - a, k - 1.0); }};
    }
    throw UsageError("unknown function spec: " + spec);
}

void validate(const RunConfig& c) {
    if (c.format != "json" && c.format != "csv" && c.format != "human")
        throw UsageError("format must be json, csv, or human");
    if (c.strategy != "steep" && c.strategy != "rejection" && c.strategy != "equality")
        throw UsageError("strategy must be steep, rejection, or equality");
    if (c.scale_family != "mixed" && c.scale_family != "h" && c.scale_family != "q" &&
        c.scale_family != "scattered")
        throw UsageError("scale-family must be h, q, scattered, or mixed");
    if (c.command == Command::Selftest) return;
    if (c.theorem.empty()) throw UsageError("--theorem is required");
    if (c.trials < 1) throw UsageError("--trials must be >= 1");
    if (c.budget < 1) throw UsageError("--budget must be >= 1");
    bool classical = c.theorem.rfind("qi-", 0) != 0;
    if (classical) {
        if (c.command != Command::Refine)
            throw UsageError("classical theorems are available only under refine");
        classical_from_name(c.theorem);  // throws on unknown name
    } else {
        TheoremId id = theorem_from_name(c.theorem);
        if (c.exponent && *c.exponent < min_exponent(id))
            throw UsageError(std::string(theorem_name(id)) + " requires exponent >= " +
                             format_double(min_exponent(id)) + ", got " +
                             format_double(*c.exponent));
    }
    if (c.command == Command::Verify || c.command == Command::Refine) {
        if (!c.exponent) throw UsageError("--t/--p is required");
        if (c.function.empty()) throw UsageError("--f is required");
    }
    if (c.command == Command::Verify && c.function.rfind("file:", 0) != 0 && c.scale.empty())
        throw UsageError("--scale is required unless --f file:... carries one");
    if (c.command == Command::Refine && c.function.rfind("file:", 0) == 0)
        throw UsageError("refine needs a closed-form function, not a file");
}

void apply_env_seed(RunConfig& c) {
    if (const char* env = std::getenv("CHRONOSCALE_SEED")) {
        try {
            c.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("CHRONOSCALE_SEED must be an unsigned integer");
        }
    }
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
    if (args.size() == 2 && args[0] == "--config") {
        std::ifstream in(args[1]);
        if (!in) throw IoError("cannot read config file: " + args[1]);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("bad config JSON: ") + e.what());
        }
        RunConfig c = config_from_json(j);
        apply_env_seed(c);
        return c;
    }

    RunConfig c;
    CLI::App app{"chronoscale: exact finite time-scale calculus and Qi-type "
                 "inequality verification"};
    app.require_subcommand(1);

    std::optional<double> t_val, p_val;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--theorem", c.theorem, "theorem id (qi-3.1 .. qi-3.7)");
        sub->add_option("--t", t_val, "exponent t");
        sub->add_option("--p", p_val, "exponent p");
        sub->add_option("--seed", c.seed, "PRNG seed (env CHRONOSCALE_SEED overrides)");
        sub->add_option("--format", c.format, "json | csv | human");
        sub->add_option("--out", c.out, "output path (default stdout)");
    };

    CLI::App* verify = app.add_subcommand("verify", "check one theorem case");
    add_common(verify);
    verify->add_option("--scale", c.scale, "h:a,b,h | q:base,q,kmin,kmax | pts:v1,...");
    verify->add_option("--f", c.function, "zero | linear:c0,s | power:k | file:path");
    verify->add_option("--a", c.a, "left endpoint (default scale min)");
    verify->add_option("--b", c.b, "right endpoint (default scale max)");

    CLI::App* sweep = app.add_subcommand("sweep", "randomized soundness sweep");
    add_common(sweep);
    sweep->add_option("--scale", c.scale, "fixed scale for every trial (optional)");
    sweep->add_option("--scale-family", c.scale_family, "h | q | scattered | mixed");
    sweep->add_option("--strategy", c.strategy, "steep | rejection | equality");
    sweep->add_option("--trials", c.trials, "number of trials");
    sweep->add_option("--budget", c.budget, "witness attempt budget");
    sweep->add_option("--min-admissible", c.min_admissible,
                      "starvation threshold as a fraction of trials");

    CLI::App* refine = app.add_subcommand("refine", "h-refinement continuum study");
    add_common(refine);
    refine->add_option("--f", c.function, "zero | linear:c0,s | power:k");
    refine->add_option("--a", c.a, "left endpoint (default 0)");
    refine->add_option("--b", c.b, "right endpoint (default 1)");
    refine->add_option("--h-seq", c.h_seq, "comma list of decreasing lattice steps");

    CLI::App* search = app.add_subcommand("search", "non-vacuity counterexample probe");
    add_common(search);
    search->add_option("--trials", c.trials, "number of trials");

    CLI::App* selftest = app.add_subcommand("selftest", "run the exact-identity suite");
    (void)selftest;

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    c.command = command_from_name(app.get_subcommands().front()->get_name());
    if (t_val && p_val) throw UsageError("give either --t or --p, not both");
    if (t_val) c.exponent = t_val;
    if (p_val) c.exponent = p_val;
    apply_env_seed(c);
    validate(c);
    return c;
}

RunConfig config_from_json(const json& j) {
    static const char* known[] = {"command",   "theorem",      "exponent", "scale",
                                  "scale_family", "function", "strategy", "a",
                                  "b",         "seed",         "trials",   "budget",
                                  "min_admissible", "h_seq",  "format",   "out"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw UsageError("unknown config key: " + it.key());
    }
    RunConfig c;
    c.command = command_from_name(j.value("command", std::string("selftest")));
    c.theorem = j.value("theorem", std::string());
    if (j.contains("exponent") && !j.at("exponent").is_null())
        c.exponent = j.at("exponent").get<double>();
    c.scale = j.value("scale", std::string());
    c.scale_family = j.value("scale_family", std::string("mixed"));
    c.function = j.value("function", std::string());
    c.strategy = j.value("strategy", std::string("steep"));
    if (j.contains("a") && !j.at("a").is_null()) c.a = j.at("a").get<double>();
    if (j.contains("b") && !j.at("b").is_null()) c.b = j.at("b").get<double>();
    c.seed = j.value("seed", std::uint64_t{0});
    c.trials = j.value("trials", 1000);
    c.budget = j.value("budget", 200);
    c.min_admissible = j.value("min_admissible", 0.8);
    c.h_seq = j.value("h_seq", std::string());
    c.format = j.value("format", std::string("json"));
    c.out = j.value("out", std::string());
    validate(c);
    return c;
}

json serialize_config(const RunConfig& c) {
    json j;
    j["command"] = std::string(command_name(c.command));
    j["theorem"] = c.theorem;
    j["exponent"] = c.exponent ? json(*c.exponent) : json(nullptr);
    j["scale"] = c.scale;
    j["scale_family"] = c.scale_family;
    j["function"] = c.function;
    j["strategy"] = c.strategy;
    j["a"] = c.a ? json(*c.a) : json(nullptr);
    j["b"] = c.b ? json(*c.b) : json(nullptr);
    j["seed"] = c.seed;
    j["trials"] = c.trials;
    j["budget"] = c.budget;
    j["min_admissible"] = c.min_admissible;
    j["h_seq"] = c.h_seq;
    j["format"] = c.format;
    j["out"] = c.out;
    return j;
}

namespace {

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw IoError("cannot open output path: " + out_path);
    f << content;
    if (!f) throw IoError("write failed: " + out_path);
}

template <typename Report>
void emit_report(const Report& r, const RunConfig& c) {
    if (c.format == "json")
        emit(to_json(r).dump(2) + "\n", c.out);
    else if (c.format == "csv")
        emit(to_csv(r), c.out);
    else
        emit(to_human(r), c.out);
}

GridFunction load_grid(const RunConfig& c) {
    if (c.function.rfind("file:", 0) == 0) {
        std::string path = c.function.substr(5);
        std::ifstream in(path);
        if (!in) throw IoError("cannot read function file: " + path);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& e) {
            throw IoError(std::string("bad function JSON: ") + e.what());
        }
        return grid_from_json(j);
    }
    TimeScale ts = parse_scale_syntax(c.scale);
    double a = c.a.value_or(ts.min());
    ClosedForm cf = make_closed_form(c.function, a);
    return tabulate(ts, cf.f);
}

int run_verify(const RunConfig& c) {
    GridFunction f = load_grid(c);
    TheoremCase tc{theorem_from_name(c.theorem), *c.exponent,
                   c.a.value_or(f.scale().min()), c.b.value_or(f.scale().max())};
    VerificationReport rep = verify(tc, f);
    emit_report(rep, c);
    return rep.verdict == Verdict::Violated ? 1 : 0;
}

int run_sweep(const RunConfig& c) {
    ScaleSpec sspec;
    if (!c.scale.empty()) {
        sspec.family = ScaleFamily::Explicit;
        sspec.points = parse_scale_syntax(c.scale).points();
    } else if (c.scale_family == "h") {
        sspec.family = ScaleFamily::HLattice;
    } else if (c.scale_family == "q") {
        sspec.family = ScaleFamily::QPower;
    } else if (c.scale_family == "scattered") {
        sspec.family = ScaleFamily::RandomScattered;
    } else {
        sspec.family = ScaleFamily::Mixed;
    }

    WitnessSpec wspec;
    wspec.attempt_budget = c.budget;
    if (c.strategy == "rejection") wspec.strategy = WitnessStrategy::Rejection;
    if (c.strategy == "equality") wspec.strategy = WitnessStrategy::EqualityCase;

    SweepConfig cfg;
    cfg.trials = c.trials;
    cfg.seed = c.seed;
    cfg.min_admissible_fraction = c.min_admissible;
    if (c.exponent) cfg.exponent_min = cfg.exponent_max = *c.exponent;

    TheoremId id = theorem_from_name(c.theorem);
    try {
        SweepReport rep = sweep(id, sspec, wspec, cfg);
        emit_report(rep, c);
        return rep.violated > 0 ? 1 : 0;
    } catch (const GeneratorStarvation& gs) {
        emit_report(gs.report, c);
        return 3;
    }
}

int run_refine(const RunConfig& c) {
    double a = c.a.value_or(0.0);
    double b = c.b.value_or(1.0);
    std::vector<double> hs;
    if (c.h_seq.empty()) {
        for (int k = 3; k <= 12; ++k) hs.push_back(std::ldexp(1.0, -k));
    } else {
        hs = parse_double_list(c.h_seq);
    }
    ClosedForm cf = make_closed_form(c.function, a);
    StudyId id = c.theorem.rfind("qi-", 0) == 0 ? StudyId(theorem_from_name(c.theorem))
                                                : StudyId(classical_from_name(c.theorem));
    ConvergenceReport rep = refine_study(id, *c.exponent, a, b, cf.f, cf.fprime, hs);
    emit_report(rep, c);
    return 0;
}

int run_search(const RunConfig& c) {
    TheoremId id = theorem_from_name(c.theorem);
    double e = c.exponent.value_or(min_exponent(id));
    SweepReport rep = counterexample_search(id, e, c.trials, c.seed);
    emit_report(rep, c);
    return 0;  // conclusion failures are the expected output here
}

int run_selftest(const RunConfig& c) {
    // Exact-identity spot checks: Cauchy-integral/jump identity, the
    // fundamental theorem, and both product-rule forms on three scales.
    std::vector<TimeScale> scales = {
        TimeScale::h_lattice(0.0, 5.0, 1.0),
        TimeScale::q_power(1.0, 2.0, 0, 6),
        TimeScale::from_points({0.0, 0.3, 1.1, 1.15, 4.0, 9.5}),
    };
    bool ok = true;
    std::ostringstream os;
    for (const TimeScale& ts : scales) {
        GridFunction f = tabulate(ts, [](double x) { return x * x - 0.5 * x; });
        GridFunction g = tabulate(ts, [](double x) { return 2.0 + std::sin(x); });
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            double t = ts[i];
            double lemma = delta_integral(f, t, ts.sigma(t)) - f[i] * ts.mu(t);
            if (std::abs(lemma) > kExactTol * problem_scale(f[i] * ts.mu(t), 0.0)) ok = false;
            auto [r1, r2] = product_rule_residual(f, g, t);
            double sc = problem_scale(f[i] * g[i] / ts.mu(t), 0.0);
            if (std::abs(r1) > kExactTol * sc || std::abs(r2) > kExactTol * sc) ok = false;
        }
        GridFunction cum = cumulative_delta(f, ts.min());
        DerivativeField back = delta_derivative(cum);
        for (std::size_t i = 0; i < back.values.size(); ++i)
            if (std::abs(back.values[i] - f[i]) >
                kExactTol * problem_scale(back.values[i], f[i]))
                ok = false;
    }
    os << "selftest: exact identities (jump integral, fundamental theorem, product rules) "
       << (ok ? "hold" : "FAILED") << "\n";
    emit(os.str(), c.out);
    return ok ? 0 : 1;
}

}  // namespace

int run(const RunConfig& c) {
    switch (c.command) {
        case Command::Verify: return run_verify(c);
        case Command::Sweep: return run_sweep(c);
        case Command::Refine: return run_refine(c);
        case Command::Search: return run_search(c);
        case Command::Selftest: return run_selftest(c);
    }
    return 2;
}

int run_main(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        RunConfig c = parse_config(args);
        return run(c);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const GeneratorStarvation& e) {
        std::cerr << "starvation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace chronoscale
