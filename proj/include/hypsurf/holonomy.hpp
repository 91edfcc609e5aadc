#pragma once

// Marked hyperbolic surfaces from Fenchel-Nielsen data, realized as discrete
// groups of half-plane isometries with labeled boundary elements.
//
// Building blocks and conventions (see docs/conventions.md):
//  * A pants with cuff lengths (l1, l2, l3) is generated by
//      B1 = diag(e^{l1/2}, e^{-l1/2})                 (axis the imaginary axis)
//      B2 = [[cosh b - P, Q], [-Q, cosh b + P]]       (b = l2/2)
//    where P = (cosh(l3/2) + cosh(l1/2) cosh(l2/2)) / sinh(l1/2) and
//    Q = sqrt(P^2 - sinh^2 b); then tr(B1 B2) = -2 cosh(l3/2) and
//    B3 = (B1 B2)^{-1} closes the triple. Zero lengths degenerate gracefully
//    to parabolics. A cusp in slot 1 is handled by building a cyclic
//    rotation of the triple and renaming, which preserves B3 = (B1 B2)^{-1}.
//  * Gluing maps align cuff axes with opposite orientations and matching
//    seam feet; the twist displaces the child side along the cuff axis,
//    positive towards the attracting fixed point of the parent-side cuff
//    representative.
//  * Pants graphs supported: trees of pants, plus handles formed by gluing
//    two slots of one pants to each other. Each handle introduces a stable
//    letter t with t C t^{-1} = P^{-1} and eliminates one redundant letter,
//    keeping an explicit free basis for word enumeration.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "hypsurf/common.hpp"
#include "hypsurf/halfplane.hpp"

namespace hypsurf::holonomy {

using halfplane::Geodesic;
using halfplane::Isometry;
using halfplane::IsometryType;
using halfplane::Word;

// ---------------------------------------------------------------------------
// Fenchel-Nielsen data.

struct FNSurface {
    struct Pants {
        std::array<double, 3> lengths{};
    };
    struct Gluing {
        int p1 = 0, s1 = 0, p2 = 0, s2 = 0;
        double twist = 0.0;
    };
    struct Boundary {
        int p = 0, s = 0;
        std::string label;
    };

    std::vector<Pants> pants;
    std::vector<Gluing> gluings;
    std::vector<Boundary> boundaries;

    void validate() const {
        if (pants.empty())
            throw TopologyError("FNSurface: no pants");
        std::vector<std::array<int, 3>> used(pants.size(), {0, 0, 0});
        auto touch = [&](int p, int s, const char* what) {
            if (p < 0 || p >= static_cast<int>(pants.size()) || s < 0 || s > 2)
                throw TopologyError(std::string("FNSurface: bad slot reference in ") + what);
            if (++used[p][s] > 1)
                throw GluingError("FNSurface: slot used more than once");
        };
        for (const auto& g : gluings) {
            touch(g.p1, g.s1, "gluing");
            touch(g.p2, g.s2, "gluing");
            if (g.p1 == g.p2 && g.s1 == g.s2)
                throw GluingError("FNSurface: slot glued to itself");
            const double a = pants[g.p1].lengths[g.s1];
            const double b = pants[g.p2].lengths[g.s2];
            if (a <= 0.0 || b <= 0.0)
                throw GluingError("FNSurface: cusps (length 0) cannot be glued");
            if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a)))
                throw GluingError("FNSurface: glued slots must have equal lengths");
        }
        for (const auto& b : boundaries) {
            touch(b.p, b.s, "boundary");
            if (b.label.empty())
                throw ConfigError("FNSurface: empty boundary label");
        }
        for (std::size_t p = 0; p < pants.size(); ++p)
            for (int s = 0; s < 3; ++s) {
                if (used[p][s] != 1)
                    throw GluingError("FNSurface: every slot needs exactly one gluing or label");
                if (pants[p].lengths[s] < 0.0 || !std::isfinite(pants[p].lengths[s]))
                    throw ConfigError("FNSurface: lengths must be finite and >= 0");
            }
        std::map<std::string, int> seen;
        for (const auto& b : boundaries)
            if (++seen[b.label] > 1)
                throw ConfigError("FNSurface: duplicate boundary label " + b.label);
    }
};

// ---------------------------------------------------------------------------
// Surface groups.

struct BoundaryRep {
    std::string label;
    Word word;
    Isometry m;
    double fn_length = 0.0; // 0 encodes a cusp (parabolic representative)
};

struct CuffRep {
    Word word;
    Isometry m;
    double fn_length = 0.0;
    double twist = 0.0;
    bool handle = false;              // came from a self-gluing
    int p1 = -1, s1 = -1, p2 = -1, s2 = -1; // glued slot pair in the FN record
    std::int16_t stable_letter = -1;  // handle transversal (final letter index)
};

struct CurveLengthResult {
    Length value;
    bool parabolic = false;
};

struct SurfaceGroup {
    std::vector<Isometry> generators;
    std::vector<std::string> gen_names;
    std::vector<std::string> gen_notes;
    std::vector<BoundaryRep> boundaries;
    std::vector<CuffRep> cuffs;

    const BoundaryRep& boundary(const std::string& label) const {
        for (const auto& b : boundaries)
            if (b.label == label)
                return b;
        throw MarkingError("SurfaceGroup: unknown boundary label " + label);
    }

    Isometry word_matrix(const Word& w) const { return halfplane::word_matrix(w, generators); }

    std::string word_string(const Word& w) const { return halfplane::word_to_string(w, gen_names); }

    SurfaceGroup conjugated(const Isometry& g) const {
        SurfaceGroup out = *this;
        const Isometry gi = g.inverse();
        for (auto& m : out.generators)
            m = g * m * gi;
        for (auto& b : out.boundaries)
            b.m = g * b.m * gi;
        for (auto& c : out.cuffs)
            c.m = g * c.m * gi;
        return out;
    }
};

/// Geodesic length of the free homotopy class of a reduced word. Peripheral
/// classes around cusps report length zero with the parabolic tag set.
inline CurveLengthResult curve_length(const SurfaceGroup& g, const Word& word) {
    if (word.empty())
        throw MarkingError("curve_length: word must be nonempty");
    const Isometry m = g.word_matrix(word);
    switch (halfplane::classify(m)) {
    case IsometryType::Hyperbolic:
        return {halfplane::translation_length(m), false};
    case IsometryType::Parabolic:
        return {Length(0.0), true};
    default:
        throw MarkingError("curve_length: class is elliptic or trivial (invalid marking)");
    }
}

// ---------------------------------------------------------------------------
// Pants construction.

namespace detail {

struct PantsTriple {
    Isometry b1, b2, b3;
};

// Hexagon construction; requires l1 > 0, allows l2, l3 >= 0.
inline PantsTriple build_pants_first_positive(double l1, double l2, double l3) {
    const double a = 0.5 * l1, b = 0.5 * l2, c = 0.5 * l3;
    const Isometry b1 = Isometry::axis_translation(l1);
    const double P = (std::cosh(c) + std::cosh(a) * std::cosh(b)) / std::sinh(a);
    // Q^2 = P^2 - sinh^2 b, written as a product of positive factors:
    // P - sinh b = (cosh c + cosh(a - b)) / sinh a.
    const double Q = std::sqrt(((std::cosh(c) + std::cosh(a - b)) / std::sinh(a)) *
                               (P + std::sinh(b)));
    const Isometry b2(std::cosh(b) - P, Q, -Q, std::cosh(b) + P);
    const Isometry b3 = (b1 * b2).inverse();
    return {b1, b2, b3};
}

inline PantsTriple build_pants_triple(double l1, double l2, double l3) {
    if (l1 > 0.0)
        return build_pants_first_positive(l1, l2, l3);
    if (l2 > 0.0) {
        // Build (l2, l3, l1) and rotate back: (B1, B2, B3) = (Y3, Y1, Y2)
        // keeps B3 = (B1 B2)^{-1}.
        const PantsTriple y = build_pants_first_positive(l2, l3, l1);
        return {y.b3, y.b1, y.b2};
    }
    if (l3 > 0.0) {
        const PantsTriple y = build_pants_first_positive(l3, l1, l2);
        return {y.b2, y.b3, y.b1};
    }
    // Thrice-punctured sphere: conjugate of the level-2 principal congruence
    // group; all three representatives parabolic.
    const Isometry b1(1, 2, 0, 1), b2(1, 0, -2, 1);
    return {b1, b2, (b1 * b2).inverse()};
}

} // namespace detail

/// Pair of pants with boundary lengths (l1, l2, l3); zero lengths are cusps.
/// Generators A, B are the representatives of slots 1 and 2, and slot 3
/// carries (A B)^{-1}.
inline SurfaceGroup build_pants(Length l1, Length l2, Length l3) {
    const auto t = detail::build_pants_triple(l1.v, l2.v, l3.v);
    SurfaceGroup g;
    g.generators = {t.b1, t.b2};
    g.gen_names = {"a", "b"};
    g.gen_notes = {"slot-1 boundary", "slot-2 boundary"};
    g.boundaries = {
        {"1", Word{0}, t.b1, l1.v},
        {"2", Word{2}, t.b2, l2.v},
        {"3", Word{3, 1}, t.b3, l3.v},
    };
    return g;
}

// ---------------------------------------------------------------------------
// Chain builder.

namespace detail {

// Mobius map taking the oriented axis of a hyperbolic isometry to the
// imaginary axis, attracting fixed point to infinity.
inline Isometry axis_normalizer(const Isometry& m) {
    const Geodesic ax = halfplane::axis(m);
    const bool rep_inf = ax.p.is_infinity, att_inf = ax.q.is_infinity;
    if (att_inf)
        return Isometry(1.0, -ax.p.coord, 0.0, 1.0);
    if (rep_inf)
        return Isometry(0.0, -1.0, 1.0, -ax.q.coord);
    const double r = ax.p.coord, a = ax.q.coord;
    return r > a ? Isometry(1.0, -r, 1.0, -a) : Isometry(-1.0, r, 1.0, -a);
}

// Height of the foot of the common perpendicular from the imaginary axis to
// the (normalized) reference marker: the reference's axis for a hyperbolic
// element, the perpendicular through its fixed point for a parabolic.
inline double seam_foot_height(const Isometry& normalizer, const Isometry& reference) {
    if (halfplane::classify(reference) == IsometryType::Parabolic) {
        const halfplane::IdealPoint fp =
            std::abs(reference.c) > 1e-14
                ? halfplane::IdealPoint::finite((reference.a - reference.d) /
                                                (2.0 * reference.c))
                : halfplane::IdealPoint::infinity();
        const halfplane::IdealPoint img = halfplane::apply(normalizer, fp);
        if (img.is_infinity || img.coord == 0.0)
            throw GluingError("gluing: cusp reference is asymptotic to the cuff axis");
        return std::abs(img.coord);
    }
    const Geodesic ref = halfplane::apply(normalizer, halfplane::axis(reference));
    if (ref.p.is_infinity || ref.q.is_infinity)
        throw GluingError("gluing: reference axis is asymptotic to the cuff axis");
    const double prod = ref.p.coord * ref.q.coord;
    if (prod <= 0.0)
        throw GluingError("gluing: reference axis crosses the cuff axis");
    return std::sqrt(prod);
}

// Orientation-reversing alignment of two cuff sides: maps the axis of
// `child_rep` onto the axis of `parent_rep` with opposite orientation,
// conjugating child_rep to parent_rep^{-1}. Seam feet coincide at zero
// twist. All four inputs live in well-conditioned local frames; the caller
// composes placement frames around the result.
inline Isometry gluing_map(const Isometry& parent_rep, const Isometry& parent_ref,
                           const Isometry& child_rep, const Isometry& child_ref, double twist) {
    const Isometry mp = axis_normalizer(parent_rep);
    const Isometry mc = axis_normalizer(child_rep);
    const double hp = seam_foot_height(mp, parent_ref);
    const double hc = seam_foot_height(mc, child_ref);
    const Isometry rot(0.0, -1.0, 1.0, 0.0); // z -> -1/z
    const Isometry shift = Isometry::axis_translation(std::log(hp * hc) + twist);
    return mp.inverse() * shift * rot * mc;
}

struct LetterTable {
    std::vector<std::string> names;
    std::vector<std::string> notes;
    std::vector<Isometry> matrices;
    std::vector<bool> alive;

    std::int16_t add(std::string name, std::string note, const Isometry& m) {
        names.push_back(std::move(name));
        notes.push_back(std::move(note));
        matrices.push_back(m);
        alive.push_back(true);
        return static_cast<std::int16_t>(names.size() - 1);
    }
};

inline Word substitute(const Word& w, std::int16_t letter, const Word& replacement) {
    Word out;
    for (std::int16_t l : w) {
        if (static_cast<std::int16_t>(l / 2) == letter) {
            const Word& r = (l & 1) ? halfplane::inverse_word(replacement) : replacement;
            for (std::int16_t rl : r) {
                if (!out.empty() && out.back() == halfplane::inverse_letter(rl))
                    out.pop_back();
                else
                    out.push_back(rl);
            }
        } else if (!out.empty() && out.back() == halfplane::inverse_letter(l)) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

} // namespace detail

/// Builds the surface group of a pants tree with optional handles. Boundary
/// labels, cuff lengths and twists come from the FN record; cuff words are
/// exposed for round-trip length checks.
inline SurfaceGroup build_chain(const FNSurface& fn) {
    fn.validate();
    const int n = static_cast<int>(fn.pants.size());

    // Split gluings into tree edges and handles; demand a connected tree.
    std::vector<FNSurface::Gluing> edges, handles;
    for (const auto& g : fn.gluings)
        (g.p1 == g.p2 ? handles : edges).push_back(g);
    if (static_cast<int>(edges.size()) != n - 1)
        throw TopologyError("build_chain: pants graph must be a tree (plus handles)");

    // Root at a tree center: placement frames compose one gluing per tree
    // level, so halving the depth keeps deep-chain conditioning in check.
    int root = 0;
    {
        std::vector<std::vector<int>> adj(n);
        for (const auto& e : edges) {
            adj[e.p1].push_back(e.p2);
            adj[e.p2].push_back(e.p1);
        }
        std::vector<int> degree(n), order;
        for (int i = 0; i < n; ++i)
            degree[i] = static_cast<int>(adj[i].size());
        std::vector<bool> stripped(n, false);
        std::vector<int> layer;
        for (int i = 0; i < n; ++i)
            if (degree[i] <= 1)
                layer.push_back(i);
        int remaining = n;
        while (remaining > 2) {
            std::vector<int> next;
            for (int v : layer) {
                stripped[v] = true;
                --remaining;
                for (int w : adj[v])
                    if (!stripped[w] && --degree[w] == 1)
                        next.push_back(w);
            }
            layer = std::move(next);
        }
        root = n;
        for (int i = 0; i < n; ++i)
            if (!stripped[i])
                root = std::min(root, i);
        if (root == n)
            root = 0;
    }

    struct SlotState {
        Word word;
        Isometry m;       // global-frame representative
        Isometry local;   // standard-frame representative of this pants
        double length = 0.0;
    };
    std::vector<std::array<SlotState, 3>> slots(n);
    std::vector<Isometry> frame(n); // global = frame * standard * frame^{-1}
    detail::LetterTable letters;
    SurfaceGroup out;

    auto place_pants = [&](int p, int first_slot, const Word& first_word,
                           const Isometry& f, bool is_root) {
        const auto& L = fn.pants[p].lengths;
        const auto triple = detail::build_pants_triple(
            L[first_slot], L[(first_slot + 1) % 3], L[(first_slot + 2) % 3]);
        frame[p] = f;
        const Isometry fi = f.inverse();
        const Isometry m1 = f * triple.b1 * fi;
        const Isometry m2 = f * triple.b2 * fi;
        const Isometry m3 = f * triple.b3 * fi;
        Word w1 = first_word;
        if (is_root) {
            const std::int16_t a =
                letters.add("a" + std::to_string(p),
                            "slot-" + std::to_string(first_slot + 1) + " boundary of pants " +
                                std::to_string(p),
                            m1);
            w1 = Word{static_cast<std::int16_t>(2 * a)};
        }
        const std::int16_t x = letters.add(
            (is_root ? "b" : "x") + std::to_string(p),
            "slot-" + std::to_string((first_slot + 1) % 3 + 1) + " boundary of pants " +
                std::to_string(p),
            m2);
        slots[p][first_slot] = {w1, m1, triple.b1, L[first_slot]};
        slots[p][(first_slot + 1) % 3] = {Word{static_cast<std::int16_t>(2 * x)}, m2, triple.b2,
                                          L[(first_slot + 1) % 3]};
        // B3 = (B1 B2)^{-1} = x^{-1} * w1^{-1}.
        const Word w3 = halfplane::reduced_concat(Word{static_cast<std::int16_t>(2 * x + 1)},
                                                  halfplane::inverse_word(w1));
        slots[p][(first_slot + 2) % 3] = {w3, m3, triple.b3, L[(first_slot + 2) % 3]};
    };

    std::vector<bool> placed(n, false);
    place_pants(root, 0, Word{}, Isometry::identity(), true);
    placed[root] = true;

    // Attach the remaining pants along tree edges; parent side is whichever
    // side is already placed.
    std::vector<FNSurface::Gluing> pending = edges;
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = pending.begin(); it != pending.end();) {
            int pp = it->p1, ps = it->s1, cp = it->p2, cs = it->s2;
            if (placed[cp] && !placed[pp]) {
                std::swap(pp, cp);
                std::swap(ps, cs);
            }
            if (!placed[pp] || placed[cp]) {
                ++it;
                continue;
            }
            const auto& P = slots[pp][ps];
            const auto& L = fn.pants[cp].lengths;
            const auto child =
                detail::build_pants_triple(L[cs], L[(cs + 1) % 3], L[(cs + 2) % 3]);
            // Local alignment in the two standard frames, then composed into
            // the parent's placement.
            const Isometry local = detail::gluing_map(
                P.local, slots[pp][(ps + 1) % 3].local, child.b1, child.b2, it->twist);
            place_pants(cp, cs, halfplane::inverse_word(P.word), frame[pp] * local, false);
            CuffRep cuff{P.word, P.m, P.length, it->twist, false, pp, ps, cp, cs, -1};
            out.cuffs.push_back(std::move(cuff));
            placed[cp] = true;
            progress = true;
            it = pending.erase(it);
        }
    }
    if (!pending.empty())
        throw TopologyError("build_chain: pants graph is disconnected");

    // Handles: one stable letter per self-gluing, then eliminate a redundant
    // letter so the basis stays free.
    for (const auto& h : handles) {
        const auto& P = slots[h.p1][h.s1];
        const auto& C = slots[h.p2][h.s2];
        const Isometry tlocal =
            detail::gluing_map(P.local, slots[h.p1][(h.s1 + 1) % 3].local, C.local,
                               slots[h.p2][(h.s2 + 1) % 3].local, h.twist);
        const Isometry tm = frame[h.p1] * tlocal * frame[h.p1].inverse();
        const std::int16_t t =
            letters.add("t" + std::to_string(h.p1), "handle transversal of pants " +
                                                        std::to_string(h.p1),
                        tm);
        // Relation: t C t^{-1} P = 1.
        Word rel = Word{static_cast<std::int16_t>(2 * t)};
        rel = halfplane::reduced_concat(rel, C.word);
        rel = halfplane::reduced_concat(rel, Word{static_cast<std::int16_t>(2 * t + 1)});
        rel = halfplane::reduced_concat(rel, P.word);
        // Pick the highest-index letter occurring exactly once and solve.
        std::vector<int> count(letters.names.size(), 0);
        for (std::int16_t l : rel)
            ++count[static_cast<std::size_t>(l / 2)];
        int victim = -1;
        for (std::size_t i = 0; i < count.size(); ++i)
            if (count[i] == 1 && letters.alive[i])
                victim = static_cast<int>(i);
        if (victim < 0)
            throw TopologyError("build_chain: unsupported handle configuration");
        std::size_t pos = 0;
        while (static_cast<std::int16_t>(rel[pos] / 2) != victim)
            ++pos;
        const Word prefix(rel.begin(), rel.begin() + pos);
        const Word suffix(rel.begin() + pos + 1, rel.end());
        // prefix * y^e * suffix = 1.
        Word solved = halfplane::reduced_concat(halfplane::inverse_word(prefix),
                                                halfplane::inverse_word(suffix));
        if (rel[pos] & 1)
            solved = halfplane::inverse_word(solved);
        letters.alive[static_cast<std::size_t>(victim)] = false;
        for (auto& row : slots)
            for (auto& s : row)
                s.word = detail::substitute(s.word, static_cast<std::int16_t>(victim), solved);
        for (auto& c : out.cuffs)
            c.word = detail::substitute(c.word, static_cast<std::int16_t>(victim), solved);
        CuffRep cuff{slots[h.p1][h.s1].word, P.m, P.length, h.twist, true,
                     h.p1, h.s1, h.p2, h.s2, t};
        out.cuffs.push_back(std::move(cuff));
    }

    // Compact the alive letters into the final generator list.
    std::vector<std::int16_t> remap(letters.names.size(), -1);
    for (std::size_t i = 0; i < letters.names.size(); ++i) {
        if (!letters.alive[i])
            continue;
        remap[i] = static_cast<std::int16_t>(out.generators.size());
        out.generators.push_back(letters.matrices[i]);
        out.gen_names.push_back(letters.names[i]);
        out.gen_notes.push_back(letters.notes[i]);
    }
    auto remap_word = [&](const Word& w) {
        Word r;
        r.reserve(w.size());
        for (std::int16_t l : w) {
            const std::int16_t nl = remap[static_cast<std::size_t>(l / 2)];
            if (nl < 0)
                throw TopologyError("build_chain: eliminated letter survived substitution");
            r.push_back(static_cast<std::int16_t>(2 * nl + (l & 1)));
        }
        return r;
    };
    for (auto& row : slots)
        for (auto& s : row)
            s.word = remap_word(s.word);
    for (auto& c : out.cuffs) {
        c.word = remap_word(c.word);
        if (c.stable_letter >= 0)
            c.stable_letter = remap[static_cast<std::size_t>(c.stable_letter)];
    }

    for (const auto& b : fn.boundaries)
        out.boundaries.push_back(
            {b.label, slots[b.p][b.s].word, slots[b.p][b.s].m, fn.pants[b.p].lengths[b.s]});

    // Internal consistency: every slot word must reproduce its matrix.
    for (const auto& row : slots)
        for (const auto& s : row) {
            const Isometry m = out.word_matrix(s.word);
            if (m.dist_up_to_sign(s.m) > 1e-8)
                throw GluingError("build_chain: slot word does not match its matrix");
        }
    return out;
}

/// One-holed torus from a cuff length and twist: the all-equal pants
/// (cuff, cuff, cuff) with slots 1 and 2 glued to each other. Generators are
/// the cuff representative A (axis on the imaginary axis) and the handle
/// transversal B; the boundary representative is the commutator word
/// B^{-1} A B A^{-1}.
inline SurfaceGroup build_one_holed_torus(Length cuff, double twist) {
    if (cuff.v <= 0.0)
        throw DomainError("build_one_holed_torus: cuff must be positive");
    FNSurface fn;
    fn.pants.push_back({{cuff.v, cuff.v, cuff.v}});
    fn.gluings.push_back({0, 0, 0, 1, twist});
    fn.boundaries.push_back({0, 2, "1"});
    return build_chain(fn);
}

/// One-holed torus from a trace triple (x, y, z) = (tr A, tr B, tr AB) with
/// x, y > 2; the boundary is the commutator, of trace
/// x^2 + y^2 + z^2 - xyz - 2.
inline SurfaceGroup build_torus_from_traces(double x, double y, double z) {
    if (!(x > 2.0) || !(y > 2.0))
        throw ConfigError("build_torus_from_traces: need x, y > 2");
    const double lam = 0.5 * (x + std::sqrt(x * x - 4.0));
    const Isometry A(lam, 0.0, 0.0, 1.0 / lam);
    const double r = (z - y / lam) / (lam - 1.0 / lam);
    const double v = y - r;
    const double w = r * v - 1.0;
    const double root = std::sqrt(std::abs(w));
    const Isometry B = w >= 0.0 ? Isometry(r, root, root, v) : Isometry(r, root, -root, v);
    SurfaceGroup g;
    g.generators = {A, B};
    g.gen_names = {"a", "b"};
    g.gen_notes = {"trace-x generator", "trace-y generator"};
    const Isometry comm = A * B * A.inverse() * B.inverse();
    const double blen =
        halfplane::classify(comm) == IsometryType::Hyperbolic
            ? halfplane::translation_length(comm).v
            : 0.0;
    g.boundaries.push_back({"1", Word{0, 2, 1, 3}, comm, blen});
    return g;
}

} // namespace hypsurf::holonomy
