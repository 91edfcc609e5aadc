#pragma once

// Closed-form hyperbolic trigonometry kernel: right-angled hexagons and
// pentagons, trirectangles (Lambert quadrilaterals), collars, and the
// boundary-flow interval functions used by the identity sums. All functions
// are pure, deterministic double precision. Formulas are evaluated in
// cancellation-free forms so they stay accurate at extreme arguments
// (tiny opposite sides, long tails of identity series).

#include <cmath>

#include "hypsurf/common.hpp"

namespace hypsurf::hyptrig {

namespace detail {

// acosh(x) given u = x - 1 >= 0 and v = x + 1, both computed without
// cancellation by the caller.
inline double acosh_from_shifted(double u, double v) {
    return std::log1p(u + std::sqrt(u * v));
}

} // namespace detail

/// Opposite-side relation of a right-angled hexagon: for pairwise
/// non-adjacent sides s1, s2, s3 returns the side t adjacent to s2 and s3
/// with cosh t = (cosh s1 + cosh s2 cosh s3) / (sinh s2 sinh s3).
/// s1 may be zero; s2, s3 must be positive.
inline Length hexagon_opposite(Length s1, Length s2, Length s3) {
    if (s2.v == 0.0 || s3.v == 0.0)
        throw DegenerateInput("hexagon_opposite: sides s2, s3 must be positive");
    const double denom = std::sinh(s2.v) * std::sinh(s3.v);
    // cosh s2 cosh s3 -+ sinh s2 sinh s3 = cosh(s2 -+ s3): both shifts of the
    // ratio stay positive, so acosh never sees a cancelled argument.
    const double u = (std::cosh(s1.v) + std::cosh(s2.v - s3.v)) / denom; // cosh t - 1
    const double v = (std::cosh(s1.v) + std::cosh(s2.v + s3.v)) / denom; // cosh t + 1
    return Length(detail::acosh_from_shifted(u, v));
}

/// Distance between consecutive cuffs of a tight (one-cusp) pair of pants
/// with cuff lengths l1, l2: the right-angled pentagon relation
/// cosh d = (1 + cosh(l1/2) cosh(l2/2)) / (sinh(l1/2) sinh(l2/2)).
inline Length pentagon_distance(Length l1, Length l2) {
    if (l1.v == 0.0 || l2.v == 0.0)
        throw DegenerateInput("pentagon_distance: cuff lengths must be positive");
    const double a = 0.5 * l1.v, b = 0.5 * l2.v;
    const double denom = std::sinh(a) * std::sinh(b);
    const double u = (1.0 + std::cosh(a - b)) / denom;
    const double v = (1.0 + std::cosh(a + b)) / denom;
    return Length(detail::acosh_from_shifted(u, v));
}

/// Trirectangle side relation sinh(result) = sinh d * cosh h. Total on
/// nonnegative arguments.
inline Length trirect_perp(Length d, Length h) {
    return Length(std::asinh(std::sinh(d.v) * std::cosh(h.v)));
}

/// Acute angle of a trirectangle with adjacent sides a, b meeting the right
/// angles: cos(theta) = sinh a * sinh b. Exists only when sinh a sinh b < 1.
inline Angle trirect_angle(Length a, Length b) {
    const double p = std::sinh(a.v) * std::sinh(b.v);
    if (p >= 1.0)
        throw DomainError("trirect_angle: sinh a * sinh b must be < 1");
    return Angle(std::acos(p));
}

struct TrirectSolution {
    Length a;    // side opposite alpha
    Length b;    // side opposite beta
    Length beta; // side adjacent to the acute angle, opposite side b
};

/// Solves a trirectangle from its acute angle theta and the adjacent side
/// alpha, via cosh a = cosh(alpha) sin(theta), cos(theta) = sinh a sinh b and
/// cosh a / cosh b = cosh alpha / cosh beta. Requires cosh(alpha) sin(theta)
/// strictly greater than 1 (evaluated value, no epsilon padding) and
/// theta <= pi/2.
inline TrirectSolution trirect_solve(Angle theta, Length alpha) {
    const double st = std::sin(theta.v);
    const double ct = std::cos(theta.v);
    if (ct < 0.0)
        throw DomainError("trirect_solve: acute angle required (theta <= pi/2)");
    const double cosh_a = std::cosh(alpha.v) * st;
    if (!(cosh_a > 1.0))
        throw DomainError("trirect_solve: cosh(alpha) sin(theta) must exceed 1");
    const double a = std::acosh(cosh_a);
    const double b = std::asinh(ct / std::sinh(a));
    // cosh beta = cosh b cosh alpha / cosh a = cosh b / sin theta.
    const double beta = std::acosh(std::cosh(b) / st);
    return TrirectSolution{Length(a), Length(b), Length(beta)};
}

/// Right triangle with hypotenuseless relation sinh(result) =
/// sin(theta) * sinh(beta): the leg opposite the angle theta.
inline Length right_triangle_leg(Angle theta, Length beta) {
    return Length(std::asinh(std::sin(theta.v) * std::sinh(beta.v)));
}

/// Half-width of the embedded collar around a closed geodesic of length b:
/// arcsinh(1 / sinh(b/2)). Strictly decreasing in b.
inline Length collar_width(Length b) {
    if (b.v == 0.0)
        throw DegenerateInput("collar_width: geodesic length must be positive");
    return Length(std::asinh(1.0 / std::sinh(0.5 * b.v)));
}

/// Length of the equidistant curve at distance r from a geodesic of length l:
/// l * cosh(r).
inline Length equidistant_length(Length l, Length r) {
    return Length(l.v * std::cosh(r.v));
}

/// Interval measure contributed by a pants whose far cuffs are interior
/// geodesics of lengths x2, x3, seen from a boundary of length x1:
///   D(x1,x2,x3) = 2 log( (e^{x1/2} + e^{(x2+x3)/2}) / (e^{-x1/2} + e^{(x2+x3)/2}) ).
/// Evaluated as 2 log1p( 2 sinh(x1/2) / (e^{-x1/2} + e^{(x2+x3)/2}) ), which
/// neither overflows nor cancels for large x2 + x3.
inline double mcshane_D(Length x1, Length x2, Length x3) {
    const double h = 0.5 * x1.v;
    const double s = 0.5 * (x2.v + x3.v);
    return 2.0 * std::log1p(2.0 * std::sinh(h) / (std::exp(-h) + std::exp(s)));
}

/// Interval measure for a pants spanned with a second boundary component:
///   R(x1,x2,x3) = x1 - log( (cosh(x2/2) + cosh((x1+x3)/2))
///                         / (cosh(x2/2) + cosh((x1-x3)/2)) ).
/// Evaluated in the equivalent stable form
///   log1p( (cosh(x2/2) expm1(x1) + e^{(x1-x3)/2} sinh x1)
///          / (cosh(x2/2) + cosh((x1+x3)/2)) ),
/// which keeps full relative accuracy when the result is nearly 0 (x3 large)
/// or nearly x1 (x3 small).
inline double mcshane_R(Length x1, Length x2, Length x3) {
    const double c = std::cosh(0.5 * x2.v);
    const double num = c * std::expm1(x1.v) + std::exp(0.5 * (x1.v - x3.v)) * std::sinh(x1.v);
    const double den = c + std::cosh(0.5 * (x1.v + x3.v));
    return std::log1p(num / den);
}

/// Tight pair-of-pants constant: c(l) = log 2 for a parabolic (l = 0),
/// c(l) = log coth(l/4) for a hyperbolic of translation length l.
/// log coth(l/4) = log1p(t) - log1p(-t) with t = e^{-l/2}; for small l the
/// denominator 1 - t is formed with expm1 instead.
inline double cusp_constant(Length l) {
    if (l.v == 0.0)
        return std::log(2.0);
    const double t = std::exp(-0.5 * l.v);
    if (l.v >= 1.0)
        return std::log1p(t) - std::log1p(-t);
    return std::log((1.0 + t) / (-std::expm1(-0.5 * l.v)));
}

/// One term of the boundary-length identity: 2 log coth(d/2) for an
/// orthogeodesic of length d.
inline double basmajian_term(Length d) {
    return 2.0 * cusp_constant(Length(2.0 * d.v));
}

/// cosh^2(x) (coth^4(x) - 1), evaluated as coth^2(x) (coth^2(x) + 1) so the
/// value stays exact near its limit 2 at large x.
inline double coth_fourth_excess(double x) {
    if (x <= 0.0)
        throw DegenerateInput("coth_fourth_excess: x must be positive");
    const double c = 1.0 / std::tanh(x);
    return c * c * (c * c + 1.0);
}

} // namespace hypsurf::hyptrig
