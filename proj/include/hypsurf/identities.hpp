#pragma once

// Orthogeodesic spectra and the boundary-length identities they verify:
// the sum of 2 log coth(d/2) over the spectrum from a boundary recovers its
// length, and on the one-holed torus the interval functions D over simple
// closed curves recover the boundary length. Spectra are enumerated as
// double cosets <beta_src> g <beta_tgt> of the boundary cyclic subgroups,
// with a canonical minimal-word representative per coset.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "hypsurf/common.hpp"
#include "hypsurf/halfplane.hpp"
#include "hypsurf/holonomy.hpp"
#include "hypsurf/hyptrig.hpp"

namespace hypsurf::identities {

using halfplane::Geodesic;
using halfplane::GeodesicRelation;
using halfplane::Isometry;
using halfplane::Word;
using holonomy::SurfaceGroup;

/// One orthogeodesic class: its length, the boundaries it joins, and the
/// canonical double-coset witness word.
struct OrthoTerm {
    double length = 0.0;
    std::string source, target;
    Word word;
};

/// Verification record for a boundary-length identity.
struct IdentityReport {
    double target = 0.0;
    std::vector<double> partial_sums;
    std::size_t terms_used = 0;
    double residual = 0.0;
    double truncation = 0.0; // word-length bound (spectra) or length cap (torus)
    int cusp_targets_skipped = 0;
};

namespace detail {

inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

// Canonical representative of the double coset <S> w <T>: the (length, lex)
// minimum over S^a w T^b. Word length along a cyclic-subgroup orbit is
// convex (distances to geodesics in the Cayley tree are convex), so greedy
// descent plus a same-length plateau search finds the global minimum.
class CosetCanonicalizer {
public:
    CosetCanonicalizer(Word s, Word t) : s_(std::move(s)), t_(std::move(t)) {
        si_ = halfplane::inverse_word(s_);
        ti_ = halfplane::inverse_word(t_);
    }

    Word canon(const Word& w) const {
        Word best = w;
        for (;;) {
            for (bool improved = true; improved;) {
                improved = false;
                for (int mv = 0; mv < 4; ++mv) {
                    Word cand = move(best, mv);
                    if (word_less(cand, best)) {
                        best = std::move(cand);
                        improved = true;
                    }
                }
            }
            // Plateau: walk same-length neighbours looking for a strictly
            // better word reachable through them.
            std::unordered_set<std::string> visited;
            std::deque<Word> queue;
            visited.insert(pack(best));
            queue.push_back(best);
            bool better = false;
            while (!queue.empty() && !better) {
                const Word x = std::move(queue.front());
                queue.pop_front();
                for (int mv = 0; mv < 4; ++mv) {
                    Word cand = move(x, mv);
                    if (word_less(cand, best)) {
                        best = std::move(cand);
                        better = true;
                        break;
                    }
                    if (cand.size() == best.size()) {
                        std::string key = pack(cand);
                        if (visited.insert(std::move(key)).second)
                            queue.push_back(std::move(cand));
                    }
                }
            }
            if (!better)
                return best;
        }
    }

    static std::string pack(const Word& w) {
        std::string k;
        k.reserve(w.size());
        for (std::int16_t l : w)
            k.push_back(static_cast<char>(l));
        return k;
    }

private:
    Word move(const Word& w, int mv) const {
        switch (mv) {
        case 0: return halfplane::reduced_concat(s_, w);
        case 1: return halfplane::reduced_concat(si_, w);
        case 2: return halfplane::reduced_concat(w, t_);
        default: return halfplane::reduced_concat(w, ti_);
        }
    }

    Word s_, si_, t_, ti_;
};

template <typename F>
void for_each_reduced_word(int num_generators, int max_len, std::size_t cap, F&& visit) {
    const int letters = 2 * num_generators;
    Word w;
    std::size_t count = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == max_len)
            return;
        for (std::int16_t l = 0; l < letters; ++l) {
            if (!w.empty() && w.back() == halfplane::inverse_letter(l))
                continue;
            if (++count > cap)
                throw EnumerationLimit("ortho_spectrum: element cap exceeded");
            w.push_back(l);
            visit(w);
            self(self, depth + 1);
            w.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace detail

inline constexpr std::size_t default_spectrum_cap = 40'000'000;

/// Orthogeodesic spectrum from `source`: one term per nontrivial double
/// coset with a representative of word length <= max_word_length, over all
/// geodesic boundary targets (cusp targets are skipped). Terms are sorted by
/// length, then by witness word.
inline std::vector<OrthoTerm> ortho_spectrum(const SurfaceGroup& g, const std::string& source,
                                             int max_word_length,
                                             std::size_t cap = default_spectrum_cap,
                                             int* cusp_targets_skipped = nullptr) {
    const auto& src = g.boundary(source);
    if (src.fn_length <= 0.0)
        throw DomainError("ortho_spectrum: source boundary must be a geodesic, not a cusp");
    if (max_word_length < 0)
        throw DomainError("ortho_spectrum: bound must be nonnegative");

    struct Target {
        const holonomy::BoundaryRep* rep;
        detail::CosetCanonicalizer canon;
        double sinh_half;
        std::unordered_set<std::string> seen;
    };
    const double src_sinh_half = std::sinh(0.5 * halfplane::translation_length(src.m).v);
    std::vector<Target> targets;
    int skipped = 0;
    for (const auto& b : g.boundaries) {
        if (b.fn_length <= 0.0) {
            ++skipped;
            continue;
        }
        targets.push_back({&b, detail::CosetCanonicalizer(src.word, b.word),
                           std::sinh(0.5 * halfplane::translation_length(b.m).v),
                           {}});
    }
    if (cusp_targets_skipped)
        *cusp_targets_skipped = skipped;

    // Distances go through the trace formula: the lift of the target axis by
    // the witness is the axis of the conjugated representative, and traces
    // stay well conditioned where explicit endpoint arithmetic would cancel.
    // The sinh factors come from the unconjugated representatives; traces of
    // deep conjugates are exact in principle but not in floating point.
    std::vector<OrthoTerm> terms;
    auto consider = [&](const Word& w) {
        for (auto& t : targets) {
            const Word c = t.canon.canon(w);
            if (c.empty() && t.rep->label == source)
                continue; // trivial class
            if (!t.seen.insert(detail::CosetCanonicalizer::pack(c)).second)
                continue;
            const Isometry m = g.word_matrix(c);
            const Isometry moved = m * t.rep->m * m.inverse();
            const double inv =
                halfplane::axes_inversive_distance(src.m, moved, src_sinh_half, t.sinh_half);
            if (inv <= 1.0 + 1e-11)
                continue; // crossing or asymptotic lift: length-zero class
            const double u = inv - 1.0;
            terms.push_back({halfplane::acosh1p(u), source, t.rep->label, c});
        }
    };
    consider(Word{});
    detail::for_each_reduced_word(static_cast<int>(g.generators.size()), max_word_length, cap,
                                  consider);

    std::stable_sort(terms.begin(), terms.end(), [](const OrthoTerm& a, const OrthoTerm& b) {
        if (a.length != b.length)
            return a.length < b.length;
        if (a.target != b.target)
            return a.target < b.target;
        return detail::word_less(a.word, b.word);
    });
    return terms;
}

/// Partial sums of 2 log coth(d/2) over the spectrum from `source` against
/// the boundary length.
inline IdentityReport basmajian_report(const SurfaceGroup& g, const std::string& source,
                                       int max_word_length,
                                       std::size_t cap = default_spectrum_cap) {
    IdentityReport rep;
    rep.truncation = max_word_length;
    const auto terms = ortho_spectrum(g, source, max_word_length, cap,
                                      &rep.cusp_targets_skipped);
    rep.target = halfplane::translation_length(g.boundary(source).m).v;
    rep.partial_sums.reserve(terms.size());
    double sum = 0.0;
    for (const auto& t : terms) {
        sum += hyptrig::basmajian_term(Length(t.length));
        rep.partial_sums.push_back(sum);
    }
    rep.terms_used = terms.size();
    rep.residual = rep.target - sum;
    return rep;
}

// ---------------------------------------------------------------------------
// Simple closed curves on the one-holed torus.

struct TorusCurve {
    double trace = 0.0;
    double length = 0.0;
    Word word;
};

/// One entry per unoriented essential interior simple closed curve of length
/// at most `cap`, enumerated by the Farey mediant recursion: an edge with
/// trace pair (p, q) and opposite vertex trace `opp` subdivides at the
/// mediant, of word U V and trace p q - opp.
inline std::vector<TorusCurve> torus_scc_classes(const SurfaceGroup& g, Length cap,
                                                 std::size_t element_cap = 10'000'000) {
    if (g.generators.size() != 2)
        throw MarkingError("torus_scc_classes: expected a two-generator torus group");
    const Isometry A = g.generators[0], B = g.generators[1];
    const double x = std::abs(A.trace());
    const double y = std::abs(B.trace());
    const Isometry Apos = A.trace() < 0 ? Isometry(-A.a, -A.b, -A.c, -A.d) : A;
    const Isometry Bpos = B.trace() < 0 ? Isometry(-B.a, -B.b, -B.c, -B.d) : B;
    double z = (Apos * Bpos).trace();
    Word wa{0}, wb{2};
    if (z < 0.0) {
        // Re-seed the marking with (A, B^{-1}): tr(A B^{-1}) = xy - z > 0.
        z = x * y - z;
        wb = Word{3};
    }
    if (!(x > 2.0) || !(y > 2.0) || !(z > 2.0))
        throw MarkingError("torus_scc_classes: marking traces are not hyperbolic");

    auto len_of = [](double tr) {
        const double u = 0.5 * tr - 1.0;
        return 2.0 * halfplane::acosh1p(u);
    };

    std::vector<TorusCurve> out;
    std::size_t count = 0;
    auto emit = [&](double tr, const Word& w) {
        if (tr <= 2.0)
            throw MarkingError("torus_scc_classes: non-hyperbolic simple trace");
        if (++count > element_cap)
            throw EnumerationLimit("torus_scc_classes: element cap exceeded");
        const double l = len_of(tr);
        if (l <= cap.v)
            out.push_back({tr, l, w});
    };

    emit(x, wa);
    emit(y, wb);

    struct Edge {
        double p, q, opp;
        Word u, v;
        int depth;
    };
    std::vector<Edge> stack;
    // Positive-slope fan between a and b (mediant a b, trace z) and
    // negative-slope fan between b^{-1} and a (mediant b^{-1} a, trace xy-z).
    stack.push_back({x, y, x * y - z, wa, wb, 0});
    stack.push_back({y, x, z, halfplane::inverse_word(wb), wa, 0});
    while (!stack.empty()) {
        Edge e = std::move(stack.back());
        stack.pop_back();
        if (e.depth > 400)
            throw EnumerationLimit("torus_scc_classes: recursion depth guard");
        const double m = e.p * e.q - e.opp;
        const Word w = halfplane::reduced_concat(e.u, e.v);
        emit(m, w);
        if (len_of(m) <= cap.v || m < std::max(e.p, e.q)) {
            stack.push_back({e.p, m, e.q, e.u, w, e.depth + 1});
            stack.push_back({m, e.q, e.p, w, e.v, e.depth + 1});
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const TorusCurve& a, const TorusCurve& b) {
        if (a.length != b.length)
            return a.length < b.length;
        return detail::word_less(a.word, b.word);
    });
    if (out.empty())
        throw CapError("torus_scc_classes: length cap below the systole");
    return out;
}

/// Lengths only (sorted nondecreasing).
inline std::vector<Length> torus_scc_lengths(const SurfaceGroup& g, Length cap) {
    std::vector<Length> ls;
    for (const auto& c : torus_scc_classes(g, cap))
        ls.push_back(Length(c.length));
    return ls;
}

/// McShane-type identity on the one-holed torus: every interior simple
/// closed curve gamma bounds an embedded pants with the boundary and itself,
/// contributing D(L1, l_gamma, l_gamma); the partial sums converge to L1.
inline IdentityReport mcshane_torus_report(const SurfaceGroup& g, Length length_cap) {
    if (g.boundaries.size() != 1)
        throw MarkingError("mcshane_torus_report: expected a one-holed torus group");
    const auto& b = g.boundaries.front();
    if (halfplane::classify(b.m) != halfplane::IsometryType::Hyperbolic)
        throw DomainError("mcshane_torus_report: boundary length must be positive");
    IdentityReport rep;
    rep.target = halfplane::translation_length(b.m).v;
    rep.truncation = length_cap.v;
    const auto curves = torus_scc_classes(g, length_cap);
    double sum = 0.0;
    const Length L1(rep.target);
    for (const auto& c : curves) {
        sum += hyptrig::mcshane_D(L1, Length(c.length), Length(c.length));
        rep.partial_sums.push_back(sum);
    }
    rep.terms_used = curves.size();
    rep.residual = rep.target - sum;
    return rep;
}

// ---------------------------------------------------------------------------
// Tight pants distance law.

struct TightPantsCheck {
    double lhs = 0.0; // measured axis distance in the (l1, l2, cusp) pants
    double rhs = 0.0; // cusp_constant(l1) + cusp_constant(l2)
    double gap = 0.0;
};

inline TightPantsCheck tight_pants_check(Length l1, Length l2) {
    if (l1.v == 0.0 || l2.v == 0.0)
        throw DegenerateInput("tight_pants_check: parabolic axis not represented");
    const SurfaceGroup g = holonomy::build_pants(l1, l2, Length(0));
    const auto gd = halfplane::geodesic_distance(halfplane::axis(g.boundaries[0].m),
                                                 halfplane::axis(g.boundaries[1].m));
    TightPantsCheck out;
    out.lhs = gd.distance.v;
    out.rhs = hyptrig::cusp_constant(l1) + hyptrig::cusp_constant(l2);
    out.gap = std::abs(out.lhs - out.rhs);
    return out;
}

} // namespace hypsurf::identities
