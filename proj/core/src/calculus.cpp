#include "chronoscale/calculus.hpp"

#include <cmath>

namespace chronoscale {

GridFunction::GridFunction(TimeScale scale, std::vector<double> values)
    : scale_(std::move(scale)), values_(std::move(values)) {
    if (values_.size() != scale_.size())
        throw NonFiniteValue("grid function needs one value per scale point");
    for (double v : values_)
        if (!std::isfinite(v)) throw NonFiniteValue();
}

GridFunction tabulate(const TimeScale& ts, const std::function<double(double)>& rule) {
    std::vector<double> vals;
    vals.reserve(ts.size());
    for (double t : ts.points()) vals.push_back(rule(t));
    return GridFunction(ts, std::move(vals));
}

DerivativeField delta_derivative(const GridFunction& f) {
    const TimeScale& ts = f.scale();
    if (ts.size() < 2) throw DegenerateScale();
    std::vector<double> vals(ts.size() - 1);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i)
        vals[i] = (f[i + 1] - f[i]) / (ts[i + 1] - ts[i]);
    return DerivativeField{ts.kappa(), std::move(vals)};
}

DerivativeField nabla_derivative(const GridFunction& f) {
    const TimeScale& ts = f.scale();
    if (ts.size() < 2) throw DegenerateScale();
    std::vector<double> vals(ts.size() - 1);
    for (std::size_t i = 1; i < ts.size(); ++i)
        vals[i - 1] = (f[i] - f[i - 1]) / (ts[i] - ts[i - 1]);
    return DerivativeField{ts.kappa_lower(), std::move(vals)};
}

GridFunction sigma_compose(const GridFunction& f) {
    const TimeScale& ts = f.scale();
    std::vector<double> vals(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) vals[i] = f[ts.sigma_index(i)];
    return GridFunction(ts, std::move(vals));
}

GridFunction rho_compose(const GridFunction& f) {
    const TimeScale& ts = f.scale();
    std::vector<double> vals(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) vals[i] = f[ts.rho_index(i)];
    return GridFunction(ts, std::move(vals));
}

GridFunction sigma2_compose(const GridFunction& f) {
    const TimeScale& ts = f.scale();
    std::vector<double> vals(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        vals[i] = f[ts.sigma_index(ts.sigma_index(i))];
    return GridFunction(ts, std::move(vals));
}

DerivativeField sigma_delta(const TimeScale& ts) {
    if (ts.size() < 2) throw DegenerateScale();
    std::vector<double> vals(ts.size() - 1);
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        std::size_t i2 = ts.sigma_index(i + 1);
        vals[i] = (ts[i2] - ts[i + 1]) / (ts[i + 1] - ts[i]);
    }
    return DerivativeField{ts.kappa(), std::move(vals)};
}

double delta_integral(const GridFunction& f, double a, double b) {
    const TimeScale& ts = f.scale();
    std::size_t ia = ts.index_of(a);
    std::size_t ib = ts.index_of(b);
    if (ia > ib) throw BadInterval();
    double sum = 0.0;
    for (std::size_t i = ia; i < ib; ++i) sum += f[i] * (ts[i + 1] - ts[i]);
    return sum;
}

double nabla_integral(const GridFunction& f, double a, double b) {
    const TimeScale& ts = f.scale();
    std::size_t ia = ts.index_of(a);
    std::size_t ib = ts.index_of(b);
    if (ia > ib) throw BadInterval();
    double sum = 0.0;
    for (std::size_t i = ia + 1; i <= ib; ++i) sum += f[i] * (ts[i] - ts[i - 1]);
    return sum;
}

GridFunction cumulative_delta(const GridFunction& f, double a) {
    const TimeScale& ts = f.scale();
    std::size_t ia = ts.index_of(a);
    TimeScale sub = ts.restrict(a, ts.max());
    std::vector<double> vals(sub.size());
    double sum = 0.0;
    vals[0] = 0.0;
    for (std::size_t i = ia; i + 1 < ts.size(); ++i) {
        sum += f[i] * (ts[i + 1] - ts[i]);
        vals[i - ia + 1] = sum;
    }
    return GridFunction(std::move(sub), std::move(vals));
}

GridFunction cumulative_nabla(const GridFunction& f, double a) {
    const TimeScale& ts = f.scale();
    std::size_t ia = ts.index_of(a);
    TimeScale sub = ts.restrict(a, ts.max());
    std::vector<double> vals(sub.size());
    double sum = 0.0;
    vals[0] = 0.0;
    for (std::size_t i = ia + 1; i < ts.size(); ++i) {
        sum += f[i] * (ts[i] - ts[i - 1]);
        vals[i - ia] = sum;
    }
    return GridFunction(std::move(sub), std::move(vals));
}

double pow_nn(double base, double e) {
    if (base < 0.0) throw HypothesisViolated("power base must be nonnegative");
    if (base == 0.0) {
        if (e == 0.0) return 1.0;
        if (e < 0.0) throw HypothesisViolated("0 raised to a negative exponent");
        return 0.0;
    }
    return std::pow(base, e);
}

namespace {

void require_nonneg_nondecreasing(const GridFunction& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] < 0.0) throw HypothesisViolated("g must be nonnegative");
        if (i > 0 && g[i] < g[i - 1]) throw HypothesisViolated("g must be nondecreasing");
    }
}

}  // namespace

PowerBounds power_bounds_delta(const GridFunction& g, double p, double t) {
    if (!(p > 1.0)) throw HypothesisViolated("power bounds require p > 1");
    require_nonneg_nondecreasing(g);
    const TimeScale& ts = g.scale();
    if (ts.size() < 2) throw DegenerateScale();
    std::size_t i = ts.index_of(t);
    if (i + 1 >= ts.size()) throw NotAPoint(t);  // t must lie in T^kappa
    double mu = ts[i + 1] - ts[i];
    double gd = (g[i + 1] - g[i]) / mu;
    double exact = (pow_nn(g[i + 1], p) - pow_nn(g[i], p)) / mu;
    double lower = p * pow_nn(g[i], p - 1.0) * gd;
    double upper = p * pow_nn(g[i + 1], p - 1.0) * gd;
    return PowerBounds{lower, exact, upper};
}

PowerBounds power_bounds_nabla(const GridFunction& g, double p, double t) {
    if (!(p > 1.0)) throw HypothesisViolated("power bounds require p > 1");
    require_nonneg_nondecreasing(g);
    const TimeScale& ts = g.scale();
    if (ts.size() < 2) throw DegenerateScale();
    std::size_t i = ts.index_of(t);
    if (i == 0) throw NotAPoint(t);  // t must lie in T_kappa
    double nu = ts[i] - ts[i - 1];
    double gn = (g[i] - g[i - 1]) / nu;
    double exact = (pow_nn(g[i], p) - pow_nn(g[i - 1], p)) / nu;
    double lower = p * pow_nn(g[i - 1], p - 1.0) * gn;
    double upper = p * pow_nn(g[i], p - 1.0) * gn;
    return PowerBounds{lower, exact, upper};
}

std::pair<double, double> product_rule_residual(const GridFunction& f, const GridFunction& g,
                                                double t) {
    const TimeScale& ts = f.scale();
    std::size_t i = ts.index_of(t);
    if (i + 1 >= ts.size()) throw NotAPoint(t);
    double mu = ts[i + 1] - ts[i];
    double fd = (f[i + 1] - f[i]) / mu;
    double gd = (g[i + 1] - g[i]) / mu;
    double fgd = (f[i + 1] * g[i + 1] - f[i] * g[i]) / mu;
    double r1 = fgd - (fd * g[i] + f[i + 1] * gd);
    double r2 = fgd - (f[i] * gd + fd * g[i + 1]);
    return {r1, r2};
}

double quotient_rule_residual(const GridFunction& f, const GridFunction& g, double t) {
    const TimeScale& ts = f.scale();
    std::size_t i = ts.index_of(t);
    if (i + 1 >= ts.size()) throw NotAPoint(t);
    if (g[i] * g[i + 1] == 0.0) throw DivisionByZero();
    double mu = ts[i + 1] - ts[i];
    double fd = (f[i + 1] - f[i]) / mu;
    double gd = (g[i + 1] - g[i]) / mu;
    double qd = (f[i + 1] / g[i + 1] - f[i] / g[i]) / mu;
    return qd - (fd * g[i] - f[i] * gd) / (g[i] * g[i + 1]);
}

}  // namespace chronoscale
