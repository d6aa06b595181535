#pragma once

#include <stdexcept>
#include <string>

namespace chronoscale {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyScale : Error {
    EmptyScale() : Error("time scale must contain at least one point") {}
};
struct DuplicatePoint : Error {
    explicit DuplicatePoint(double t)
        : Error("duplicate point in time scale: " + std::to_string(t)) {}
};
struct BadInterval : Error {
    using Error::Error;
    BadInterval() : Error("interval endpoints must satisfy a <= b") {}
};
struct BadStep : Error {
    using Error::Error;
    BadStep() : Error("lattice step must be positive and representable") {}
};
struct BadExponentRange : Error {
    BadExponentRange() : Error("q-power exponent range requires k_min <= k_max and q > 1") {}
};
struct NotAPoint : Error {
    explicit NotAPoint(double t)
        : Error("not a point of the time scale: " + std::to_string(t)) {}
};
struct NonFiniteValue : Error {
    using Error::Error;
    NonFiniteValue() : Error("grid function values must be finite") {}
};
struct DegenerateScale : Error {
    DegenerateScale() : Error("operation requires a scale with at least two points") {}
};
struct HypothesisViolated : Error {
    using Error::Error;
    HypothesisViolated() : Error("lemma hypothesis violated") {}
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("quotient rule requires g(t) * g(sigma(t)) != 0") {}
};
struct ExponentOutOfRange : Error {
    using Error::Error;
};
struct DegenerateDivisor : Error {
    DegenerateDivisor() : Error("(b-a)^(p-1) divisor degenerates when a = b and p > 1") {}
};
struct BadSpec : Error {
    using Error::Error;
};
struct BadSequence : Error {
    using Error::Error;
    BadSequence() : Error("h sequence must be strictly decreasing and positive") {}
};
struct UsageError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace chronoscale
