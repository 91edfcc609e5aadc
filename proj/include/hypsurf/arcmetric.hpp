#pragma once

// Length functions over boundary curves, interior closed curves and arc
// classes, and family-restricted estimation of the asymmetric length-ratio
// metric between two marked structures sharing Fenchel-Nielsen
// combinatorics. All family suprema are lower estimates: the metric itself
// ranges over infinitely many classes.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hypsurf/common.hpp"
#include "hypsurf/halfplane.hpp"
#include "hypsurf/holonomy.hpp"
#include "hypsurf/identities.hpp"

namespace hypsurf::arcmetric {

using halfplane::Isometry;
using halfplane::Word;
using holonomy::FNSurface;
using holonomy::SurfaceGroup;

enum class CurveKind { Boundary, InteriorClosed, Arc };

struct CurveClass {
    CurveKind kind = CurveKind::Boundary;
    std::string label;          // deterministic human-readable id
    std::string source, target; // arcs: boundary labels at the endpoints
    Word word;                  // closed: curve word; arc: coset witness
    int intersection = 0;       // known crossing number with the twist cuff
};

struct RatioEntry {
    std::string label;
    CurveKind kind = CurveKind::Boundary;
    double len_x = 0.0, len_y = 0.0, log_ratio = 0.0;
};

struct RatioReport {
    double sup_log_ratio = 0.0;
    CurveClass witness;
    std::size_t family_size = 0;
    std::vector<RatioEntry> table;
};

/// Geodesic length of a curve class on a marked surface. Arc classes measure
/// the perpendicular between the source boundary axis and the witness
/// translate of the target boundary axis.
inline Length class_length(const SurfaceGroup& g, const CurveClass& c) {
    switch (c.kind) {
    case CurveKind::Boundary:
        return halfplane::translation_length(g.boundary(c.source).m);
    case CurveKind::InteriorClosed: {
        const auto r = holonomy::curve_length(g, c.word);
        if (r.parabolic)
            throw MarkingError("class_length: interior class is peripheral");
        return r.value;
    }
    case CurveKind::Arc: {
        const auto& src = g.boundary(c.source);
        const auto& tgt = g.boundary(c.target);
        const Isometry m = g.word_matrix(c.word);
        const Isometry moved = m * tgt.m * m.inverse();
        const double inv = halfplane::axes_inversive_distance(
            src.m, moved, std::sinh(0.5 * halfplane::translation_length(src.m).v),
            std::sinh(0.5 * halfplane::translation_length(tgt.m).v));
        if (inv <= 1.0 + 1e-11)
            throw MarkingError("class_length: arc class degenerates on this surface");
        const double u = inv - 1.0;
        return Length(halfplane::acosh1p(u));
    }
    }
    throw MarkingError("class_length: unknown curve kind");
}

namespace detail {

// Cyclic normal form of a free-homotopy class: cyclically reduce, then take
// the (length, lex) minimum over all rotations of the word and its inverse.
inline Word cyclic_normal_form(Word w) {
    while (w.size() >= 2 && w.front() == halfplane::inverse_letter(w.back())) {
        w.erase(w.begin());
        w.pop_back();
    }
    if (w.empty())
        return w;
    Word best = w;
    for (const Word& base : {w, halfplane::inverse_word(w)}) {
        Word rot = base;
        for (std::size_t i = 0; i < base.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (identities::detail::word_less(rot, best))
                best = rot;
        }
    }
    return best;
}

} // namespace detail

/// Deterministic, duplicate-free curve-class family for a pants graph:
/// geodesic boundaries, decomposition curves, the dual closed curves across
/// each interior cuff, arc cosets up to the word-length depth, and twisted
/// transverse arcs up to twist_max around each cuff that admits a canonical
/// transversal.
inline std::vector<CurveClass> generate_family(const FNSurface& fn, int depth, int twist_max) {
    const SurfaceGroup g = holonomy::build_chain(fn);

    std::vector<std::string> hyp_labels;
    for (const auto& b : g.boundaries)
        if (b.fn_length > 0.0)
            hyp_labels.push_back(b.label);
    std::sort(hyp_labels.begin(), hyp_labels.end());

    std::vector<CurveClass> family;
    std::set<std::string> closed_seen; // cyclic normal forms of closed classes

    auto add_closed = [&](const std::string& label, const Word& w) {
        const Word nf = detail::cyclic_normal_form(w);
        if (nf.empty())
            return;
        if (!closed_seen.insert(identities::detail::CosetCanonicalizer::pack(nf)).second)
            return;
        family.push_back({CurveKind::InteriorClosed, label, "", "", w, 0});
    };

    for (const auto& label : hyp_labels)
        family.push_back({CurveKind::Boundary, "B:" + label, label, label, Word{}, 0});

    // Decomposition curves.
    for (std::size_t i = 0; i < g.cuffs.size(); ++i)
        add_closed("C:" + std::to_string(i), g.cuffs[i].word);

    // Boundary labels carried by each pants, for transversal construction.
    std::vector<std::vector<std::string>> pants_labels(fn.pants.size());
    for (const auto& b : fn.boundaries)
        if (fn.pants[b.p].lengths[b.s] > 0.0)
            pants_labels[b.p].push_back(b.label);
    for (auto& v : pants_labels)
        std::sort(v.begin(), v.end());

    // Dual closed curves across tree cuffs whose two pants carry boundaries.
    for (std::size_t i = 0; i < g.cuffs.size(); ++i) {
        const auto& c = g.cuffs[i];
        if (c.handle)
            continue;
        for (const auto& bl : pants_labels[c.p1])
            for (const auto& br : pants_labels[c.p2])
                add_closed("D:" + std::to_string(i) + ":" + bl + "-" + br,
                           halfplane::reduced_concat(g.boundary(bl).word, g.boundary(br).word));
    }

    // Arc cosets up to the word-length depth.
    struct ArcFamily {
        std::string src, tgt;
        identities::detail::CosetCanonicalizer canon;
        std::set<std::string> seen;
    };
    std::vector<ArcFamily> arc_families;
    for (std::size_t i = 0; i < hyp_labels.size(); ++i)
        for (std::size_t j = i; j < hyp_labels.size(); ++j)
            arc_families.push_back({hyp_labels[i], hyp_labels[j],
                                    identities::detail::CosetCanonicalizer(
                                        g.boundary(hyp_labels[i]).word,
                                        g.boundary(hyp_labels[j]).word),
                                    {}});

    std::vector<CurveClass> arcs;
    auto consider_arc = [&](const Word& w) {
        for (auto& fam : arc_families) {
            const Word c = fam.canon.canon(w);
            if (c.empty() && fam.src == fam.tgt)
                continue;
            if (!fam.seen.insert(identities::detail::CosetCanonicalizer::pack(c)).second)
                continue;
            CurveClass cc{CurveKind::Arc, "", fam.src, fam.tgt, c, 0};
            cc.label = "A:" + fam.src + "-" + fam.tgt + ":" + g.word_string(c);
            arcs.push_back(std::move(cc));
        }
    };
    consider_arc(Word{});
    identities::detail::for_each_reduced_word(static_cast<int>(g.generators.size()),
                                              std::max(depth, 0), 10'000'000, consider_arc);
    std::stable_sort(arcs.begin(), arcs.end(), [](const CurveClass& a, const CurveClass& b) {
        if (a.source != b.source)
            return a.source < b.source;
        if (a.target != b.target)
            return a.target < b.target;
        return identities::detail::word_less(a.word, b.word);
    });
    for (auto& a : arcs)
        family.push_back(std::move(a));

    // Twisted transverse arcs around each cuff with a canonical transversal.
    for (std::size_t i = 0; i < g.cuffs.size(); ++i) {
        const auto& c = g.cuffs[i];
        std::string src, tgt;
        Word base;
        if (c.handle) {
            if (pants_labels[c.p1].empty() || c.stable_letter < 0)
                continue;
            src = tgt = pants_labels[c.p1].front();
            base = Word{static_cast<std::int16_t>(2 * c.stable_letter)};
        } else {
            if (pants_labels[c.p1].empty() || pants_labels[c.p2].empty())
                continue;
            src = pants_labels[c.p1].front();
            tgt = pants_labels[c.p2].front();
            base = Word{};
        }
        identities::detail::CosetCanonicalizer canon(g.boundary(src).word,
                                                     g.boundary(tgt).word);
        // The n-fold twist inserts the cuff word n times at the crossing.
        Word twisted = base;
        for (int n = 1; n <= twist_max; ++n) {
            twisted = halfplane::reduced_concat(c.word, twisted);
            const Word cw = canon.canon(twisted);
            const std::string key = identities::detail::CosetCanonicalizer::pack(cw);
            bool fresh = true;
            for (auto& fam : arc_families)
                if (fam.src == src && fam.tgt == tgt && fam.seen.count(key))
                    fresh = false;
            if (!fresh)
                continue;
            CurveClass cc{CurveKind::Arc,
                          "T:" + std::to_string(i) + ":" + std::to_string(n), src, tgt, cw, 1};
            family.push_back(std::move(cc));
        }
    }

    // Drop classes that degenerate geometrically on this surface (crossing
    // lifts, peripheral products).
    std::vector<CurveClass> valid;
    for (auto& c : family) {
        try {
            class_length(g, c);
            valid.push_back(std::move(c));
        } catch (const MarkingError&) {
        }
    }
    return valid;
}

namespace detail {

inline void check_same_marking(const SurfaceGroup& x, const SurfaceGroup& y) {
    if (x.generators.size() != y.generators.size() ||
        x.boundaries.size() != y.boundaries.size())
        throw MarkingError("sup_log_ratio: surfaces do not share a marking");
    for (std::size_t i = 0; i < x.boundaries.size(); ++i)
        if (x.boundaries[i].label != y.boundaries[i].label)
            throw MarkingError("sup_log_ratio: boundary labels differ");
}

} // namespace detail

/// Family-restricted estimate of log sup l_c(Y)/l_c(X): a lower bound for
/// the asymmetric metric, with the realizing class as witness.
inline RatioReport sup_log_ratio(const SurfaceGroup& x, const SurfaceGroup& y,
                                 const std::vector<CurveClass>& family) {
    detail::check_same_marking(x, y);
    if (family.empty())
        throw MarkingError("sup_log_ratio: empty family");
    RatioReport rep;
    rep.family_size = family.size();
    bool first = true;
    for (const auto& c : family) {
        const double lx = class_length(x, c).v;
        const double ly = class_length(y, c).v;
        const double r = std::log(ly / lx);
        rep.table.push_back({c.label, c.kind, lx, ly, r});
        if (first || r > rep.sup_log_ratio) {
            rep.sup_log_ratio = r;
            rep.witness = c;
            first = false;
        }
    }
    return rep;
}

struct SplitSup {
    double sup_arcs_boundaries = 0.0; // over A u B
    double sup_arcs_closed = 0.0;     // over A u S (S includes boundaries)
};

/// Suprema over the two sub-families of the same collection: arcs plus
/// boundaries, and arcs plus all simple closed classes.
inline SplitSup boundary_vs_interior_sup(const SurfaceGroup& x, const SurfaceGroup& y,
                                         const std::vector<CurveClass>& family) {
    detail::check_same_marking(x, y);
    SplitSup out;
    bool ab_first = true, as_first = true;
    for (const auto& c : family) {
        const double r = std::log(class_length(y, c).v / class_length(x, c).v);
        if (c.kind == CurveKind::Arc || c.kind == CurveKind::Boundary) {
            if (ab_first || r > out.sup_arcs_boundaries) {
                out.sup_arcs_boundaries = r;
                ab_first = false;
            }
        }
        if (as_first || r > out.sup_arcs_closed) {
            out.sup_arcs_closed = r;
            as_first = false;
        }
    }
    if (ab_first || as_first)
        throw MarkingError("boundary_vs_interior_sup: family lacks the needed kinds");
    return out;
}

} // namespace hypsurf::arcmetric
