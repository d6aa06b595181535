#pragma once

#include <cstddef>
#include <vector>

#include "chronoscale/errors.hpp"

namespace chronoscale {

enum class ScaleTag { Explicit, HLattice, QPower, SampledInterval };

// Classification flags of a point; a point may carry several.
struct PointClass {
    bool right_scattered = false;
    bool right_dense = false;
    bool left_scattered = false;
    bool left_dense = false;
    bool isolated = false;
    bool max_point = false;
    bool min_point = false;
};

// A finite time scale: strictly increasing real points plus a provenance
// tag. Immutable after construction; safe to share across threads. Point
// membership is exact equality of stored coordinates.
class TimeScale {
  public:
    static TimeScale from_points(std::vector<double> pts);
    // {a, a+h, ..., a+K*h} with a+K*h <= b < a+(K+1)*h.
    static TimeScale h_lattice(double a, double b, double h);
    // {base * q^k : k_min <= k <= k_max}, q > 1.
    static TimeScale q_power(double base, double q, int k_min, int k_max);
    // n+1 uniform samples of [a, b]; marks a dense-interval approximation.
    static TimeScale sampled_interval(double a, double b, int n);

    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t i) const { return points_[i]; }
    const std::vector<double>& points() const { return points_; }
    double min() const { return points_.front(); }
    double max() const { return points_.back(); }
    ScaleTag tag() const { return tag_; }
    double tag_h() const { return h_; }
    double tag_q() const { return q_; }
    int tag_n() const { return n_; }

    bool contains(double t) const;
    std::size_t index_of(double t) const;  // throws NotAPoint

    // sigma(max) = max and rho(min) = min (empty-set convention).
    double sigma(double t) const { return points_[sigma_index(index_of(t))]; }
    double rho(double t) const { return points_[rho_index(index_of(t))]; }
    double mu(double t) const { return sigma(t) - t; }
    double nu(double t) const { return t - rho(t); }

    std::size_t sigma_index(std::size_t i) const {
        return i + 1 < points_.size() ? i + 1 : i;
    }
    std::size_t rho_index(std::size_t i) const { return i > 0 ? i - 1 : 0; }

    double mu_at(std::size_t i) const { return points_[sigma_index(i)] - points_[i]; }
    double nu_at(std::size_t i) const { return points_[i] - points_[rho_index(i)]; }

    PointClass classify(double t) const;

    TimeScale kappa() const;        // drops a left-scattered maximum
    TimeScale kappa_lower() const;  // drops a right-scattered minimum
    TimeScale restrict(double a, double b) const;

    bool operator==(const TimeScale& o) const { return points_ == o.points_; }

  private:
    TimeScale(std::vector<double> pts, ScaleTag tag) : points_(std::move(pts)), tag_(tag) {}

    std::vector<double> points_;
    ScaleTag tag_ = ScaleTag::Explicit;
    double h_ = 0.0;
    double q_ = 0.0;
    int n_ = 0;
};

}  // namespace chronoscale
