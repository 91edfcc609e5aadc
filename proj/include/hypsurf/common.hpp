#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypsurf {

inline constexpr const char* version = "0.1.0";

// Error hierarchy. Everything thrown by the library derives from Error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of a formula (no solution exists).
struct DomainError : Error {
    using Error::Error;
};

// A side/length that must be positive is zero (sinh vanishes etc.).
struct DegenerateInput : Error {
    using Error::Error;
};

// Operation requires a hyperbolic element.
struct NonHyperbolicError : Error {
    using Error::Error;
};

// Enumeration would exceed its configured element cap.
struct EnumerationLimit : Error {
    using Error::Error;
};

// Pants-graph shape not supported, or slots wired inconsistently.
struct TopologyError : Error {
    using Error::Error;
};

// Glued slots disagree (length mismatch, cusp glued, slot reused).
struct GluingError : Error {
    using Error::Error;
};

// Two surfaces do not share a marking / curve class invalid for a surface.
struct MarkingError : Error {
    using Error::Error;
};

// Length cap below the systole: nothing to enumerate.
struct CapError : Error {
    using Error::Error;
};

// Bad run configuration (CLI / JSON input).
struct ConfigError : Error {
    using Error::Error;
};

/// Nonnegative hyperbolic length. Zero encodes a cusp wherever a boundary
/// length is expected.
struct Length {
    double v = 0.0;

    Length() = default;
    explicit Length(double value) : v(value) {
        if (!std::isfinite(v) || v < 0.0)
            throw DomainError("Length must be finite and >= 0, got " + std::to_string(value));
    }
    double value() const { return v; }
};

/// Angle in radians, strictly inside (0, pi).
struct Angle {
    double v = 0.0;

    Angle() = default;
    explicit Angle(double value) : v(value) {
        if (!std::isfinite(v) || v <= 0.0 || v >= 3.14159265358979323846)
            throw DomainError("Angle must lie in (0, pi), got " + std::to_string(value));
    }
    double value() const { return v; }
};

inline constexpr double pi = 3.14159265358979323846;

} // namespace hypsurf
