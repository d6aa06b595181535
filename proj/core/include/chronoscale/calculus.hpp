#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "chronoscale/time_scale.hpp"

namespace chronoscale {

// Real values aligned one-to-one with a time scale's points.
class GridFunction {
  public:
    GridFunction(TimeScale scale, std::vector<double> values);

    const TimeScale& scale() const { return scale_; }
    const std::vector<double>& values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }
    double at_point(double t) const { return values_[scale_.index_of(t)]; }

    bool operator==(const GridFunction& o) const {
        return scale_ == o.scale_ && values_ == o.values_;
    }

  private:
    TimeScale scale_;
    std::vector<double> values_;
};

// Values of f^Delta (f^nabla) on the kappa-restricted scale.
struct DerivativeField {
    TimeScale domain;
    std::vector<double> values;

    double at_point(double t) const { return values[domain.index_of(t)]; }
};

GridFunction tabulate(const TimeScale& ts, const std::function<double(double)>& rule);

DerivativeField delta_derivative(const GridFunction& f);
DerivativeField nabla_derivative(const GridFunction& f);

GridFunction sigma_compose(const GridFunction& f);
GridFunction rho_compose(const GridFunction& f);
GridFunction sigma2_compose(const GridFunction& f);

// Delta derivative of t -> sigma(t).
DerivativeField sigma_delta(const TimeScale& ts);

// Sum over [a, b) of f * mu (resp. over (a, b] of f * nu); left-to-right
// summation order so reports are bit-reproducible.
double delta_integral(const GridFunction& f, double a, double b);
double nabla_integral(const GridFunction& f, double a, double b);

// g(x) = integral from a to x, on the sub-scale [a, max].
GridFunction cumulative_delta(const GridFunction& f, double a);
GridFunction cumulative_nabla(const GridFunction& f, double a);

// Nonnegative-base power with 0^0 = 1; 0^negative raises HypothesisViolated.
double pow_nn(double base, double e);

struct PowerBounds {
    double lower;
    double exact;
    double upper;
};

// p*g^{p-1}*gD <= (g^p)^D <= p*(g^sigma)^{p-1}*gD for nonnegative
// nondecreasing g and p > 1.
PowerBounds power_bounds_delta(const GridFunction& g, double p, double t);
// Mirror: p*(g^rho)^{p-1}*gN <= (g^p)^N <= p*g^{p-1}*gN.
PowerBounds power_bounds_nabla(const GridFunction& g, double p, double t);

// (fg)^D minus each of the two product-rule expansions.
std::pair<double, double> product_rule_residual(const GridFunction& f, const GridFunction& g,
                                                double t);
// (f/g)^D minus (fD*g - f*gD)/(g*g^sigma).
double quotient_rule_residual(const GridFunction& f, const GridFunction& g, double t);

}  // namespace chronoscale
