#pragma once

// Upper half-plane isometry engine: unit-determinant 2x2 real matrices up to
// sign, their fixed geodesics, distances between complete geodesics, and
// breadth-first group enumeration with a deterministic word order.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypsurf/common.hpp"

namespace hypsurf::halfplane {

/// Orientation-preserving isometry of the upper half-plane, stored as a real
/// matrix with ad - bc = 1, identified with its negation. The constructed
/// sign is kept as given so products carry honest SL(2) traces; dedup and
/// reporting use the canonical sign (a > 0, or a == 0 and b > 0).
struct Isometry {
    double a = 1, b = 0, c = 0, d = 1;

    Isometry() = default;
    Isometry(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
        normalize();
    }

    void normalize() {
        const double det = a * d - b * c;
        if (!(det > 0.0) || !std::isfinite(det))
            throw DomainError("Isometry: determinant must be positive and finite");
        const double s = 1.0 / std::sqrt(det);
        a *= s; b *= s; c *= s; d *= s;
    }

    Isometry canonical_sign() const {
        Isometry m = *this;
        if (m.a < 0.0 || (m.a == 0.0 && m.b < 0.0)) {
            m.a = -m.a; m.b = -m.b; m.c = -m.c; m.d = -m.d;
        }
        return m;
    }

    double trace() const { return a + d; }

    // Adjugate inverse and plain matrix product. Inputs already have unit
    // determinant, so the results are not renormalized: recomputing ad - bc
    // on large entries cancels catastrophically, and dividing by its square
    // root would inject that error into every entry.
    Isometry inverse() const {
        Isometry m;
        m.a = d; m.b = -b; m.c = -c; m.d = a;
        return m;
    }

    friend Isometry operator*(const Isometry& l, const Isometry& r) {
        Isometry m;
        m.a = l.a * r.a + l.b * r.c;
        m.b = l.a * r.b + l.b * r.d;
        m.c = l.c * r.a + l.d * r.c;
        m.d = l.c * r.b + l.d * r.d;
        return m;
    }

    double sup_norm() const {
        return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    }

    /// Entrywise distance up to the projective sign, relative to the matrix
    /// scale (large-entry words drift by eps * norm, never more).
    double dist_up_to_sign(const Isometry& o) const {
        const double dp = std::max({std::abs(a - o.a), std::abs(b - o.b), std::abs(c - o.c),
                                    std::abs(d - o.d)});
        const double dm = std::max({std::abs(a + o.a), std::abs(b + o.b), std::abs(c + o.c),
                                    std::abs(d + o.d)});
        return std::min(dp, dm) / std::max(1.0, std::max(sup_norm(), o.sup_norm()));
    }

    static Isometry identity() { return Isometry(); }

    /// Hyperbolic translation of length t along the imaginary axis (towards
    /// infinity for t > 0).
    static Isometry axis_translation(double t) {
        return Isometry(std::exp(0.5 * t), 0.0, 0.0, std::exp(-0.5 * t));
    }
};

enum class IsometryType { Identity, Elliptic, Parabolic, Hyperbolic };

/// acosh(1 + u) for u >= 0, accurate near 0 and safe from overflow of
/// u * (u + 2) for huge u.
inline double acosh1p(double u) {
    if (u > 1e16)
        return std::log(2.0) + std::log1p(u);
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

inline constexpr double parabolic_trace_tol = 1e-9;

inline IsometryType classify(const Isometry& m) {
    const Isometry id = Isometry::identity();
    if (m.dist_up_to_sign(id) < 1e-9)
        return IsometryType::Identity;
    const double t = std::abs(m.trace());
    if (std::abs(t - 2.0) <= parabolic_trace_tol)
        return IsometryType::Parabolic;
    return t < 2.0 ? IsometryType::Elliptic : IsometryType::Hyperbolic;
}

/// Translation length of a hyperbolic isometry: |tr| = 2 cosh(T/2).
inline Length translation_length(const Isometry& m) {
    if (classify(m) != IsometryType::Hyperbolic)
        throw NonHyperbolicError("translation_length: element is not hyperbolic");
    const double u = 0.5 * std::abs(m.trace()) - 1.0; // cosh(T/2) - 1
    return Length(2.0 * acosh1p(u));
}

/// Point of the ideal boundary R u {infinity}.
struct IdealPoint {
    double coord = 0.0;
    bool is_infinity = false;

    static IdealPoint finite(double x) { return IdealPoint{x, false}; }
    static IdealPoint infinity() { return IdealPoint{0.0, true}; }
};

inline bool same_point(const IdealPoint& p, const IdealPoint& q, double tol = 1e-9) {
    if (p.is_infinity || q.is_infinity)
        return p.is_infinity && q.is_infinity;
    return std::abs(p.coord - q.coord) <=
           tol * std::max(1.0, std::max(std::abs(p.coord), std::abs(q.coord)));
}

/// Complete geodesic given by two distinct ideal endpoints; ordered when an
/// orientation matters (axes run from repelling to attracting fixed point).
struct Geodesic {
    IdealPoint p, q;

    Geodesic() = default;
    Geodesic(IdealPoint p_, IdealPoint q_) : p(p_), q(q_) {
        if (same_point(p, q, 0.0))
            throw DomainError("Geodesic: endpoints must be distinct");
    }
};

inline IdealPoint apply(const Isometry& m, const IdealPoint& x) {
    // Homogeneous action; v == 0 exactly maps to infinity.
    const double u = x.is_infinity ? m.a : m.a * x.coord + m.b;
    const double v = x.is_infinity ? m.c : m.c * x.coord + m.d;
    if (v == 0.0)
        return IdealPoint::infinity();
    return IdealPoint::finite(u / v);
}

inline Geodesic apply(const Isometry& m, const Geodesic& g) {
    return Geodesic(apply(m, g.p), apply(m, g.q));
}

/// Oriented axis of a hyperbolic isometry, from the repelling to the
/// attracting fixed point. Both endpoints are fixed by the Mobius action.
inline Geodesic axis(const Isometry& m) {
    if (classify(m) != IsometryType::Hyperbolic)
        throw NonHyperbolicError("axis: element is not hyperbolic");
    if (m.c == 0.0) {
        // Fixed points: infinity and b/(d-a). Attracting at infinity iff |a|>|d|.
        const IdealPoint fin = IdealPoint::finite(m.b / (m.d - m.a));
        const IdealPoint inf = IdealPoint::infinity();
        return std::abs(m.a) > std::abs(m.d) ? Geodesic(fin, inf) : Geodesic(inf, fin);
    }
    const double disc = m.trace() * m.trace() - 4.0;
    const double r = std::sqrt(disc);
    // Roots of c z^2 + (d-a) z - b = 0, written to avoid cancellation.
    const double q = m.a - m.d >= 0.0 ? 0.5 * (m.a - m.d + r) : 0.5 * (m.a - m.d - r);
    const double z1 = q / m.c;
    const double z2 = -m.b / q;
    // The derivative at a fixed point is 1/(cz+d)^2, so the attracting fixed
    // point has |c z + d| > 1.
    const double w1 = std::abs(m.c * z1 + m.d);
    const IdealPoint p1 = IdealPoint::finite(z1), p2 = IdealPoint::finite(z2);
    return w1 > 1.0 ? Geodesic(p2, p1) : Geodesic(p1, p2);
}

enum class GeodesicRelation { Disjoint, Crossing, SharedEndpoint, Equal };

struct GeodesicDistance {
    Length distance;
    GeodesicRelation relation = GeodesicRelation::Disjoint;
};

namespace detail {

// Mobius map sending the endpoint set of g to {-1, +1} (unordered: only
// distances and relations are read off the image).
inline Isometry normalizing_map(const Geodesic& g) {
    Isometry pre = Isometry::identity();
    IdealPoint p = g.p, q = g.q;
    if (p.is_infinity || q.is_infinity) {
        const double fin = p.is_infinity ? q.coord : p.coord;
        pre = Isometry(0.0, -1.0, 1.0, -(fin + 1.0)); // z -> -1/(z - fin - 1)
        p = apply(pre, g.p);
        q = apply(pre, g.q);
    }
    const double lo = std::min(p.coord, q.coord), hi = std::max(p.coord, q.coord);
    const Isometry aff(2.0, -(lo + hi), 0.0, hi - lo); // z -> (2z - lo - hi)/(hi - lo)
    return aff * pre;
}

} // namespace detail

/// Distance between two complete geodesics together with their relative
/// position. Crossing or asymptotic (shared endpoint) pairs report distance
/// zero; disjoint pairs report the length of the common perpendicular.
inline GeodesicDistance geodesic_distance(const Geodesic& g1, const Geodesic& g2) {
    const bool p_shared = same_point(g1.p, g2.p) || same_point(g1.p, g2.q);
    const bool q_shared = same_point(g1.q, g2.p) || same_point(g1.q, g2.q);
    if (p_shared && q_shared)
        return {Length(0.0), GeodesicRelation::Equal};
    if (p_shared || q_shared)
        return {Length(0.0), GeodesicRelation::SharedEndpoint};

    // Reduce to the unit semicircle (-1, 1) and use the inversive distance.
    const Isometry n = detail::normalizing_map(g1);
    const IdealPoint u = apply(n, g2.p), v = apply(n, g2.q);
    double inv; // inversive distance between (-1,1) and the image of g2
    if (u.is_infinity || v.is_infinity) {
        inv = std::abs(u.is_infinity ? v.coord : u.coord);
    } else {
        const double center = 0.5 * (u.coord + v.coord);
        const double radius = 0.5 * std::abs(u.coord - v.coord);
        inv = std::abs((center * center - radius * radius - 1.0) / (2.0 * radius));
    }
    if (inv < 1.0 - 1e-11)
        return {Length(0.0), GeodesicRelation::Crossing};
    if (inv <= 1.0 + 1e-11)
        return {Length(0.0), GeodesicRelation::SharedEndpoint};
    const double w = inv - 1.0;
    return {Length(acosh1p(w)), GeodesicRelation::Disjoint};
}

/// Inversive distance between the axes of two hyperbolic isometries,
/// computed from traces alone:
///   |tr(UV) - tr(UV^{-1})| / (4 sinh(l_U/2) sinh(l_V/2)).
/// Values < 1 mean crossing axes (the value is the cosine of the angle),
/// 1 means asymptotic, and > 1 disjoint with value cosh(distance). Unlike
/// endpoint arithmetic this stays well conditioned for conjugates with very
/// large entries.
inline double axes_inversive_distance(const Isometry& u, const Isometry& v, double sinh_half_u,
                                      double sinh_half_v) {
    if (sinh_half_u <= 0.0 || sinh_half_v <= 0.0)
        throw NonHyperbolicError("axes_inversive_distance: inputs must be hyperbolic");
    const double t1 = (u * v).trace();
    const double t2 = (u * v.inverse()).trace();
    return std::abs(t1 - t2) / (4.0 * sinh_half_u * sinh_half_v);
}

inline double axes_inversive_distance(const Isometry& u, const Isometry& v) {
    const double su = std::sqrt(std::max(0.0, 0.25 * u.trace() * u.trace() - 1.0));
    const double sv = std::sqrt(std::max(0.0, 0.25 * v.trace() * v.trace() - 1.0));
    return axes_inversive_distance(u, v, su, sv);
}

/// Distance between disjoint axes via the trace route; 0 when they cross or
/// share an endpoint (within 1e-11 of tangency).
inline GeodesicDistance axes_distance(const Isometry& u, const Isometry& v) {
    const double inv = axes_inversive_distance(u, v);
    if (inv < 1.0 - 1e-11)
        return {Length(0.0), GeodesicRelation::Crossing};
    if (inv <= 1.0 + 1e-11)
        return {Length(0.0), GeodesicRelation::SharedEndpoint};
    const double w = inv - 1.0;
    return {Length(acosh1p(w)), GeodesicRelation::Disjoint};
}

// ---------------------------------------------------------------------------
// Words and group enumeration.

/// Letters encode generators: letter 2i is generator i, letter 2i+1 its
/// inverse.
using Word = std::vector<std::int16_t>;

inline std::int16_t inverse_letter(std::int16_t l) { return l ^ 1; }

inline Word reduced_concat(const Word& lhs, const Word& rhs) {
    Word out(lhs);
    for (std::int16_t l : rhs) {
        if (!out.empty() && out.back() == inverse_letter(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(inverse_letter(*it));
    return out;
}

inline Isometry word_matrix(const Word& w, const std::vector<Isometry>& gens) {
    Isometry m = Isometry::identity();
    for (std::int16_t l : w) {
        const Isometry& g = gens[static_cast<std::size_t>(l) / 2];
        m = m * (l & 1 ? g.inverse() : g);
    }
    return m;
}

inline std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty())
        return "1";
    std::string s;
    for (std::int16_t l : w) {
        if (!s.empty())
            s += ' ';
        s += names[static_cast<std::size_t>(l) / 2];
        if (l & 1)
            s += "^-1";
    }
    return s;
}

struct GroupElement {
    Isometry m;
    Word word;
};

inline constexpr std::size_t default_element_cap = 2'000'000;

/// All non-identity group elements represented by reduced words of length at
/// most max_word_length, breadth-first in length and lexicographic within a
/// length, deduplicated by matrix equality up to sign within 1e-9. Each
/// element carries the first witness word in that order.
inline std::vector<GroupElement> enumerate_group(const std::vector<Isometry>& generators,
                                                 int max_word_length,
                                                 std::size_t element_cap = default_element_cap) {
    if (generators.empty())
        throw DomainError("enumerate_group: need at least one generator");
    if (max_word_length < 1)
        throw DomainError("enumerate_group: max_word_length must be >= 1");

    struct Key {
        std::int64_t k0, k1, k2, k3;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ull;
            for (std::int64_t v : {k.k0, k.k1, k.k2, k.k3}) {
                h ^= static_cast<std::size_t>(v);
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    // Coarse quantized key; candidates in the same bucket are verified with
    // the true up-to-sign metric. Neighboring buckets are probed as well, so
    // boundary rounding cannot split a matrix pair.
    auto key_of = [](const Isometry& m, std::int64_t shift) {
        const double q = 1e6;
        return Key{static_cast<std::int64_t>(std::floor(m.a * q)) + shift,
                   static_cast<std::int64_t>(std::floor(m.b * q)),
                   static_cast<std::int64_t>(std::floor(m.c * q)),
                   static_cast<std::int64_t>(std::floor(m.d * q))};
    };

    std::vector<GroupElement> out;
    std::unordered_map<Key, std::vector<std::size_t>, KeyHash> seen;
    auto try_insert = [&](const Isometry& raw, const Word& w) {
        const Isometry m = raw.canonical_sign();
        for (std::int64_t shift : {-1, 0, 1}) {
            const Key k = key_of(m, shift);
            auto it = seen.find(k);
            if (it == seen.end())
                continue;
            for (std::size_t idx : it->second)
                if (out[idx].m.dist_up_to_sign(m) < 1e-9)
                    return;
        }
        seen[key_of(m, 0)].push_back(out.size());
        out.push_back(GroupElement{m, w});
    };

    const int letters = static_cast<int>(generators.size()) * 2;
    std::vector<std::pair<Isometry, Word>> frontier;
    frontier.emplace_back(Isometry::identity(), Word{});
    const Isometry id = Isometry::identity();
    std::size_t processed = 0;
    for (int len = 1; len <= max_word_length; ++len) {
        std::vector<std::pair<Isometry, Word>> next;
        for (const auto& [m, w] : frontier) {
            for (std::int16_t l = 0; l < letters; ++l) {
                if (!w.empty() && w.back() == inverse_letter(l))
                    continue;
                if (++processed > element_cap)
                    throw EnumerationLimit("enumerate_group: element cap exceeded");
                Word nw = w;
                nw.push_back(l);
                Isometry nm = m * (l & 1 ? generators[static_cast<std::size_t>(l) / 2].inverse()
                                         : generators[static_cast<std::size_t>(l) / 2]);
                if (nm.dist_up_to_sign(id) >= 1e-9)
                    try_insert(nm, nw);
                next.emplace_back(std::move(nm), std::move(nw));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

} // namespace hypsurf::halfplane
