#include "chronoscale/theorems.hpp"

#include <cmath>

namespace chronoscale {

std::string_view theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::Qi3_1: return "qi-3.1";
        case TheoremId::Qi3_2: return "qi-3.2";
        case TheoremId::Qi3_3: return "qi-3.3";
        case TheoremId::Qi3_4: return "qi-3.4";
        case TheoremId::Qi3_5: return "qi-3.5";
        case TheoremId::Qi3_6Nabla: return "qi-3.6";
        case TheoremId::Qi3_7Nabla: return "qi-3.7";
    }
    return "?";
}

TheoremId theorem_from_name(std::string_view name) {
    if (name == "qi-3.1") return TheoremId::Qi3_1;
    if (name == "qi-3.2") return TheoremId::Qi3_2;
    if (name == "qi-3.3") return TheoremId::Qi3_3;
    if (name == "qi-3.4") return TheoremId::Qi3_4;
    if (name == "qi-3.5") return TheoremId::Qi3_5;
    if (name == "qi-3.6") return TheoremId::Qi3_6Nabla;
    if (name == "qi-3.7") return TheoremId::Qi3_7Nabla;
    throw UsageError("unknown theorem id: " + std::string(name));
}

bool is_nabla(TheoremId id) {
    return id == TheoremId::Qi3_6Nabla || id == TheoremId::Qi3_7Nabla;
}

double min_exponent(TheoremId id) {
    switch (id) {
        case TheoremId::Qi3_1: return 3.0;
        case TheoremId::Qi3_2: return 1.0;
        case TheoremId::Qi3_3: return 3.0;
        case TheoremId::Qi3_4: return 1.0;
        case TheoremId::Qi3_5: return 3.0;
        case TheoremId::Qi3_6Nabla: return 3.0;
        case TheoremId::Qi3_7Nabla: return 1.0;
    }
    return 1.0;
}

bool has_interval_divisor(TheoremId id) {
    return id == TheoremId::Qi3_2 || id == TheoremId::Qi3_4 || id == TheoremId::Qi3_7Nabla;
}

std::string_view classical_name(ClassicalId id) {
    switch (id) {
        case ClassicalId::Akkouchi1_2: return "akkouchi-1.2";
        case ClassicalId::Krasniqi1_4: return "krasniqi-1.4";
        case ClassicalId::Krasniqi1_5: return "krasniqi-1.5";
    }
    return "?";
}

ClassicalId classical_from_name(std::string_view name) {
    if (name == "akkouchi-1.2") return ClassicalId::Akkouchi1_2;
    if (name == "krasniqi-1.4") return ClassicalId::Krasniqi1_4;
    if (name == "krasniqi-1.5") return ClassicalId::Krasniqi1_5;
    throw UsageError("unknown classical theorem id: " + std::string(name));
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        case Verdict::HypothesisFailed: return "hypothesis-failed";
    }
    return "?";
}

namespace {

void validate_case(const TheoremCase& c, const GridFunction& f, std::size_t& ia,
                   std::size_t& ib) {
    if (c.exponent < min_exponent(c.id))
        throw ExponentOutOfRange(std::string(theorem_name(c.id)) + " requires exponent >= " +
                                 std::to_string(min_exponent(c.id)));
    ia = f.scale().index_of(c.a);
    ib = f.scale().index_of(c.b);
    if (ia > ib) throw BadInterval();
}

}  // namespace

HypothesisReport check_hypothesis(const TheoremCase& c, const GridFunction& f) {
    std::size_t ia = 0, ib = 0;
    validate_case(c, f, ia, ib);
    const TimeScale& ts = f.scale();
    const double e = c.exponent;

    HypothesisReport rep;
    for (std::size_t i = ia; i <= ib; ++i) {
        if (f[i] < 0.0) rep.nonneg_ok = false;
        if (i > ia && f[i] < f[i - 1]) rep.monotone_ok = false;
    }
    if (!rep.nonneg_ok) {
        // Pointwise powers of a negative f are not meaningful; the report
        // already fails on the nonnegativity leg.
        rep.holds = false;
        return rep;
    }

    bool slack_ok = true;
    auto record = [&](double x, double lhs, double rhs) {
        double s = lhs - rhs;
        rep.domain.push_back(x);
        rep.slack.emplace_back(x, s);
        if (rep.slack.size() == 1 || s < rep.worst_slack) rep.worst_slack = s;
        if (s < -kIneqTol * problem_scale(lhs, rhs)) slack_ok = false;
    };

    if (!is_nabla(c.id)) {
        for (std::size_t i = ia; i < ib; ++i) {
            const double x = ts[i];
            const double mu = ts[i + 1] - ts[i];
            const std::size_t s1 = i + 1;
            const std::size_t s2 = ts.sigma_index(s1);
            if (s2 == s1) rep.saturated = true;
            const double sig2 = ts[s2];
            const double sig_d = (ts[s2] - ts[s1]) / mu;
            const double fd = (f[i + 1] - f[i]) / mu;
            const double fs2 = f[s2];
            double lhs = 0.0, rhs = 0.0;
            switch (c.id) {
                case TheoremId::Qi3_1:
                    lhs = pow_nn(f[i], e - 2.0) * fd;
                    rhs = (e - 2.0) * pow_nn(fs2, e - 2.0) * pow_nn(sig2 - c.a, e - 3.0) * sig_d;
                    break;
                case TheoremId::Qi3_2:
                    lhs = pow_nn(f[i], e) * fd;
                    rhs = e / pow_nn(c.b - c.a, e - 1.0) * pow_nn(fs2, e) *
                          pow_nn(sig2 - c.a, e - 1.0) * sig_d;
                    break;
                case TheoremId::Qi3_3:
                    lhs = pow_nn(f[i], e - 3.0) * fd;
                    rhs = (e - 2.0) * pow_nn(fs2, e - 3.0) * pow_nn(sig2 - c.a, e - 3.0) * sig_d;
                    break;
                case TheoremId::Qi3_4:
                    lhs = (fs2 - f[s1]) / mu;  // (f^sigma)^Delta
                    rhs = e * sig_d;
                    break;
                case TheoremId::Qi3_5:
                    lhs = (fs2 - f[s1]) / mu;
                    rhs = (e - 2.0) * pow_nn(sig2 - c.a, e - 3.0) * sig_d;
                    break;
                default: break;
            }
            record(x, lhs, rhs);
        }
    } else {
        for (std::size_t i = ia + 1; i <= ib; ++i) {
            const double x = ts[i];
            const double nu = ts[i] - ts[i - 1];
            const double fn = (f[i] - f[i - 1]) / nu;
            double lhs = 0.0, rhs = 0.0;
            if (c.id == TheoremId::Qi3_6Nabla) {
                lhs = pow_nn(f[i - 1], e - 2.0) * fn;
                rhs = (e - 2.0) * pow_nn(f[i], e - 2.0) * pow_nn(x - c.a, e - 3.0);
            } else {
                lhs = pow_nn(f[i - 1], e) * fn;
                rhs = e / pow_nn(c.b - c.a, e - 1.0) * pow_nn(f[i], e) * pow_nn(x - c.a, e - 1.0);
            }
            record(x, lhs, rhs);
        }
    }

    rep.holds = rep.nonneg_ok && rep.monotone_ok && slack_ok;
    return rep;
}

std::pair<double, double> eval_conclusion(const TheoremCase& c, const GridFunction& f) {
    std::size_t ia = 0, ib = 0;
    validate_case(c, f, ia, ib);
    const TimeScale& ts = f.scale();
    const double e = c.exponent;
    const double ba = c.b - c.a;

    if (has_interval_divisor(c.id) && ia == ib && e > 1.0) throw DegenerateDivisor();

    const double fa = f[ia];
    const double mua = ts.mu_at(ia);

    // Delta/nabla integrals of pointwise powers over [a,b], ascending order.
    auto dint = [&](auto&& value_at) {
        double sum = 0.0;
        for (std::size_t i = ia; i < ib; ++i) sum += value_at(i) * (ts[i + 1] - ts[i]);
        return sum;
    };
    auto nint = [&](auto&& value_at) {
        double sum = 0.0;
        for (std::size_t i = ia + 1; i <= ib; ++i) sum += value_at(i) * (ts[i] - ts[i - 1]);
        return sum;
    };
    auto f_at = [&](std::size_t i) { return f[i]; };
    auto f_rho = [&](std::size_t i) { return f[ts.rho_index(i)]; };
    auto f_sig = [&](std::size_t i) { return f[ts.sigma_index(i)]; };

    double lhs = 0.0, rhs = 0.0;
    switch (c.id) {
        case TheoremId::Qi3_1: {
            double F = dint(f_at);
            lhs = dint([&](std::size_t i) { return pow_nn(f[i], e); }) - pow_nn(F, e - 1.0);
            rhs = pow_nn(fa, e - 2.0) * (fa - (e - 1.0) * pow_nn(mua, e - 2.0)) * F;
            break;
        }
        case TheoremId::Qi3_2: {
            double F = dint(f_at);
            double div = pow_nn(ba, e - 1.0);
            lhs = dint([&](std::size_t i) { return pow_nn(f[i], e + 2.0); }) -
                  pow_nn(F, e + 1.0) / div;
            rhs = pow_nn(fa, e) * (fa - (e + 1.0) / div * pow_nn(mua, e)) * F;
            break;
        }
        case TheoremId::Qi3_3: {
            double G = dint(f_rho);
            lhs = dint([&](std::size_t i) { return pow_nn(f[i], e); }) - pow_nn(G, e - 1.0);
            rhs = pow_nn(fa, e - 2.0) * (fa - (e - 1.0) * pow_nn(mua, e - 2.0)) * G;
            break;
        }
        case TheoremId::Qi3_4: {
            double G = dint(f_rho);
            double div = pow_nn(ba, e - 1.0);
            double fsa = f_sig(ia);
            double fra = f_rho(ia);
            lhs = dint([&](std::size_t i) { return pow_nn(f_sig(i), e + 2.0); }) -
                  pow_nn(G, e + 1.0) / div;
            rhs = (pow_nn(fsa, e + 1.0) - (e + 1.0) / div * pow_nn(fra * mua, e)) * G;
            break;
        }
        case TheoremId::Qi3_5: {
            double G = dint(f_rho);
            double fsa = f_sig(ia);
            lhs = dint([&](std::size_t i) { return pow_nn(f_sig(i), e); }) - pow_nn(G, e - 1.0);
            rhs = pow_nn(fsa, e - 2.0) * (fsa - (e - 1.0) * pow_nn(mua, e - 2.0)) * G;
            break;
        }
        case TheoremId::Qi3_6Nabla: {
            double N = nint(f_at);
            lhs = nint([&](std::size_t i) { return pow_nn(f[i], e); }) - pow_nn(N, e - 1.0);
            rhs = pow_nn(fa, e - 1.0) * N;
            break;
        }
        case TheoremId::Qi3_7Nabla: {
            double N = nint(f_at);
            double div = pow_nn(ba, e - 1.0);
            lhs = nint([&](std::size_t i) { return pow_nn(f[i], e + 2.0); }) -
                  pow_nn(N, e + 1.0) / div;
            rhs = pow_nn(fa, e + 1.0) * N;
            break;
        }
    }
    return {lhs, rhs};
}

VerificationReport verify(const TheoremCase& c, const GridFunction& f) {
    VerificationReport rep;
    rep.tcase = c;
    rep.hypothesis = check_hypothesis(c, f);
    try {
        auto [lhs, rhs] = eval_conclusion(c, f);
        rep.lhs = lhs;
        rep.rhs = rhs;
        rep.margin = lhs - rhs;
    } catch (const HypothesisViolated&) {
        // Negative f makes the conclusion's real powers undefined; the
        // verdict is hypothesis-failed regardless.
        if (rep.hypothesis.holds) throw;
        rep.lhs = rep.rhs = rep.margin = 0.0;
        rep.verdict = Verdict::HypothesisFailed;
        return rep;
    }
    if (!rep.hypothesis.holds) {
        rep.verdict = Verdict::HypothesisFailed;
    } else if (rep.margin >= -kIneqTol * problem_scale(rep.lhs, rep.rhs)) {
        rep.verdict = Verdict::Holds;
    } else {
        rep.verdict = Verdict::Violated;
    }
    return rep;
}

ClassicalResult classical_case(ClassicalId id, double e, double a, double b,
                               const std::function<double(double)>& f,
                               const std::function<double(double)>& fprime, double h) {
    if (!(a < b)) throw BadInterval("classical_case requires a < b");
    TimeScale lat = TimeScale::h_lattice(a, b, h);
    GridFunction g = tabulate(lat, f);
    double F = delta_integral(g, lat.min(), lat.max());
    auto power_int = [&](double p) {
        GridFunction gp = tabulate(lat, [&](double x) { return pow_nn(f(x), p); });
        return delta_integral(gp, lat.min(), lat.max());
    };

    ClassicalResult r;
    bool first = true;
    auto track_slack = [&](double s) {
        if (first || s < r.min_hyp_slack) r.min_hyp_slack = s;
        first = false;
    };
    switch (id) {
        case ClassicalId::Akkouchi1_2:
            r.lhs = power_int(e + 2.0);
            r.rhs = pow_nn(F, e + 1.0) / pow_nn(b - a, e - 1.0);
            for (double x : lat.points()) track_slack(fprime(x) - e);
            break;
        case ClassicalId::Krasniqi1_4:
            r.lhs = power_int(e) - pow_nn(F, e - 1.0);
            r.rhs = pow_nn(f(a), e - 1.0) * F;
            for (double x : lat.points())
                track_slack(fprime(x) - (e - 2.0) * pow_nn(x - a, e - 3.0));
            break;
        case ClassicalId::Krasniqi1_5:
            r.lhs = power_int(e + 2.0) - pow_nn(F, e + 1.0) / pow_nn(b - a, e - 1.0);
            r.rhs = pow_nn(f(a), e + 1.0) * F;
            for (double x : lat.points())
                track_slack(fprime(x) - e * pow_nn((x - a) / (b - a), e - 1.0));
            break;
    }
    return r;
}

}  // namespace chronoscale
