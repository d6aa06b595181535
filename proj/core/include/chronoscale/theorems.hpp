#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chronoscale/calculus.hpp"

namespace chronoscale {

enum class TheoremId {
    Qi3_1,       // t >= 3, delta
    Qi3_2,       // p >= 1, delta, (b-a)^(p-1) divisor
    Qi3_3,       // p >= 3, delta
    Qi3_4,       // p >= 1, delta, divisor
    Qi3_5,       // p >= 3, delta
    Qi3_6Nabla,  // t >= 3, nabla
    Qi3_7Nabla,  // p >= 1, nabla, divisor
};

enum class ClassicalId { Akkouchi1_2, Krasniqi1_4, Krasniqi1_5 };

std::string_view theorem_name(TheoremId id);        // "qi-3.1" ...
TheoremId theorem_from_name(std::string_view name);  // throws UsageError
bool is_nabla(TheoremId id);
double min_exponent(TheoremId id);
bool has_interval_divisor(TheoremId id);

std::string_view classical_name(ClassicalId id);
ClassicalId classical_from_name(std::string_view name);

struct TheoremCase {
    TheoremId id;
    double exponent;  // the paper's t or p
    double a;
    double b;
};

// Relative-tolerance policy shared by all inequality checks.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kIneqTol = 1e-10;
inline double problem_scale(double lhs, double rhs) {
    double s = 1.0;
    if (std::abs(lhs) > s) s = std::abs(lhs);
    if (std::abs(rhs) > s) s = std::abs(rhs);
    return s;
}

struct HypothesisReport {
    std::vector<std::pair<double, double>> slack;  // (point, LHS - RHS)
    std::vector<double> domain;                    // points actually checked
    bool nonneg_ok = true;
    bool monotone_ok = true;
    bool holds = false;
    double worst_slack = 0.0;  // minimum slack over the domain (0 if empty)
    bool saturated = false;    // sigma^2 clamped at the ambient maximum
};

enum class Verdict { Holds, Violated, HypothesisFailed };

std::string_view verdict_name(Verdict v);

struct VerificationReport {
    TheoremCase tcase;
    HypothesisReport hypothesis;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // always lhs - rhs, never re-normalized
    Verdict verdict = Verdict::HypothesisFailed;
};

// Pointwise hypothesis, nonnegativity, and monotonicity of f over [a,b].
// Delta conditions are checked for x in [a,b) on the ambient T^kappa;
// nabla conditions on (a,b]. Compositions use the ambient jump operators,
// saturating at the scale's extremes.
HypothesisReport check_hypothesis(const TheoremCase& c, const GridFunction& f);

// (lhs, rhs) of the conclusion display; margin holds iff lhs - rhs is
// nonnegative up to the inequality tolerance.
std::pair<double, double> eval_conclusion(const TheoremCase& c, const GridFunction& f);

VerificationReport verify(const TheoremCase& c, const GridFunction& f);

// Continuum (T = R) displays, evaluated on an h-lattice tabulation. The
// hypothesis slack uses the caller's closed-form derivative.
struct ClassicalResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double min_hyp_slack = 0.0;
};

ClassicalResult classical_case(ClassicalId id, double exponent, double a, double b,
                               const std::function<double(double)>& f,
                               const std::function<double(double)>& fprime, double h);

}  // namespace chronoscale
