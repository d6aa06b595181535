#include "chronoscale/time_scale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace chronoscale {

TimeScale TimeScale::from_points(std::vector<double> pts) {
    if (pts.empty()) throw EmptyScale();
    for (double p : pts)
        if (!std::isfinite(p)) throw NonFiniteValue("time scale points must be finite");
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i] == pts[i - 1]) throw DuplicatePoint(pts[i]);
    return TimeScale(std::move(pts), ScaleTag::Explicit);
}

TimeScale TimeScale::h_lattice(double a, double b, double h) {
    if (!(a < b)) throw BadInterval("h_lattice requires a < b");
    if (!(h > 0.0) || !std::isfinite(h)) throw BadStep();
    double steps = (b - a) / h;
    if (steps > 1e9) throw BadStep("(b-a)/h too large");
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(steps) + 2);
    for (long long k = 0;; ++k) {
        double t = a + static_cast<double>(k) * h;
        if (t > b) break;
        pts.push_back(t);
    }
    TimeScale ts(std::move(pts), ScaleTag::HLattice);
    ts.h_ = h;
    return ts;
}

TimeScale TimeScale::q_power(double base, double q, int k_min, int k_max) {
    if (k_min > k_max) throw BadExponentRange();
    if (!(q > 1.0)) throw BadExponentRange();
    if (!(base > 0.0)) throw BadSpec("q_power base must be positive");
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(k_max - k_min) + 1);
    for (int k = k_min; k <= k_max; ++k) pts.push_back(base * std::pow(q, k));
    TimeScale ts(std::move(pts), ScaleTag::QPower);
    ts.q_ = q;
    return ts;
}

TimeScale TimeScale::sampled_interval(double a, double b, int n) {
    if (!(a < b)) throw BadInterval("sampled_interval requires a < b");
    if (n < 1) throw BadSpec("sampled_interval needs n >= 1 subintervals");
    std::vector<double> pts(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        pts[static_cast<std::size_t>(i)] = a + (b - a) * (static_cast<double>(i) / n);
    pts.back() = b;
    TimeScale ts(std::move(pts), ScaleTag::SampledInterval);
    ts.n_ = n;
    return ts;
}

bool TimeScale::contains(double t) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), t);
    return it != points_.end() && *it == t;
}

std::size_t TimeScale::index_of(double t) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), t);
    if (it == points_.end() || *it != t) throw NotAPoint(t);
    return static_cast<std::size_t>(it - points_.begin());
}

PointClass TimeScale::classify(double t) const {
    std::size_t i = index_of(t);
    PointClass c;
    c.min_point = (i == 0);
    c.max_point = (i + 1 == points_.size());
    c.right_scattered = !c.max_point;  // finite scale: sigma moves except at max
    c.right_dense = c.max_point;
    c.left_scattered = !c.min_point;
    c.left_dense = c.min_point;
    c.isolated = c.right_scattered && c.left_scattered;
    return c;
}

TimeScale TimeScale::kappa() const {
    if (points_.size() < 2) return *this;
    TimeScale ts(std::vector<double>(points_.begin(), points_.end() - 1), tag_);
    ts.h_ = h_;
    ts.q_ = q_;
    ts.n_ = n_;
    return ts;
}

TimeScale TimeScale::kappa_lower() const {
    if (points_.size() < 2) return *this;
    TimeScale ts(std::vector<double>(points_.begin() + 1, points_.end()), tag_);
    ts.h_ = h_;
    ts.q_ = q_;
    ts.n_ = n_;
    return ts;
}

TimeScale TimeScale::restrict(double a, double b) const {
    std::size_t ia = index_of(a);
    std::size_t ib = index_of(b);
    if (a > b) throw BadInterval();
    TimeScale ts(std::vector<double>(points_.begin() + static_cast<std::ptrdiff_t>(ia),
                                     points_.begin() + static_cast<std::ptrdiff_t>(ib) + 1),
                 tag_);
    ts.h_ = h_;
    ts.q_ = q_;
    ts.n_ = n_;
    return ts;
}

}  // namespace chronoscale
