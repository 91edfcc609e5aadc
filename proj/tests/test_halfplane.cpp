#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "hypsurf/halfplane.hpp"

using namespace hypsurf;
using namespace hypsurf::halfplane;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Brute-force distance between two geodesics: minimize the point-to-point
// hyperbolic distance over both arclength parameters. Coordinate descent
// with golden-section line searches; the distance is convex along geodesics,
// so each 1-d search is unimodal.
struct GPoint {
    double x, y;
};

GPoint point_on(const Geodesic& g, double t) {
    if (g.p.is_infinity || g.q.is_infinity) {
        const double v = g.p.is_infinity ? g.q.coord : g.p.coord;
        return {v, std::exp(t)};
    }
    const double c = 0.5 * (g.p.coord + g.q.coord);
    const double r = 0.5 * std::abs(g.q.coord - g.p.coord);
    return {c + r * std::tanh(t), r / std::cosh(t)};
}

double point_dist(const GPoint& z, const GPoint& w) {
    const double dx = z.x - w.x, dy = z.y - w.y;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * z.y * w.y));
}

double min_distance_oracle(const Geodesic& g1, const Geodesic& g2) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    auto golden = [&](auto f, double lo, double hi) {
        double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
        double f1 = f(x1), f2 = f(x2);
        for (int i = 0; i < 90; ++i) {
            if (f1 < f2) {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - phi * (hi - lo); f1 = f(x1);
            } else {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + phi * (hi - lo); f2 = f(x2);
            }
        }
        return 0.5 * (lo + hi);
    };
    // Nested search: the inner minimum over g2 and the resulting profile over
    // g1 are both convex, so each golden-section stage is unimodal.
    auto inner = [&](double s) {
        const double t =
            golden([&](double u) { return point_dist(point_on(g1, s), point_on(g2, u)); }, -60.0,
                   60.0);
        return point_dist(point_on(g1, s), point_on(g2, t));
    };
    const double s = golden(inner, -60.0, 60.0);
    return inner(s);
}

Isometry random_isometry(std::mt19937& rng, double min_det = 0.4) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (;;) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        const double det = a * d - b * c;
        if (det > min_det)
            return Isometry(a, b, c, d);
    }
}

// Random disjoint pair with a comfortably positive distance, occasionally
// involving the point at infinity.
std::pair<Geodesic, Geodesic> random_disjoint_pair(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    std::uniform_int_distribution<int> coin(0, 9);
    for (;;) {
        double v[4] = {u(rng), u(rng), u(rng), u(rng)};
        std::sort(v, v + 4);
        if (v[1] - v[0] < 0.1 || v[2] - v[1] < 0.1 || v[3] - v[2] < 0.1)
            continue;
        Geodesic g1(IdealPoint::finite(v[0]), IdealPoint::finite(v[1]));
        Geodesic g2(IdealPoint::finite(v[2]), IdealPoint::finite(v[3]));
        const int style = coin(rng);
        if (style == 0) {
            // Nested pair with one line.
            g1 = Geodesic(IdealPoint::finite(v[0]), IdealPoint::infinity());
            g2 = Geodesic(IdealPoint::finite(v[1]), IdealPoint::finite(v[2]));
        } else if (style == 1) {
            // Nested circles.
            g1 = Geodesic(IdealPoint::finite(v[0]), IdealPoint::finite(v[3]));
            g2 = Geodesic(IdealPoint::finite(v[1]), IdealPoint::finite(v[2]));
        }
        const auto gd = geodesic_distance(g1, g2);
        if (gd.relation == GeodesicRelation::Disjoint && gd.distance.v > 1e-2)
            return {g1, g2};
    }
}

} // namespace

TEST_CASE("classify: trichotomy") {
    CHECK(classify(Isometry::identity()) == IsometryType::Identity);
    CHECK(classify(Isometry(1, 1, 0, 1)) == IsometryType::Parabolic);
    CHECK(classify(Isometry(std::exp(0.25), 0, 0, std::exp(-0.25))) == IsometryType::Hyperbolic);
    CHECK(classify(Isometry(std::cos(0.5), -std::sin(0.5), std::sin(0.5), std::cos(0.5))) ==
          IsometryType::Elliptic);
}

TEST_CASE("translation_length: diagonal normal forms and invariance") {
    for (double t : {1.0, 5.0, 40.0}) {
        const Isometry m = Isometry::axis_translation(t);
        CHECK_THAT(translation_length(m).v, WithinRel(t, 1e-12));
        CHECK_THAT(translation_length(m.inverse()).v, WithinRel(t, 1e-12));
    }
    std::mt19937 rng(301);
    for (int i = 0; i < 200; ++i) {
        const Isometry m = Isometry::axis_translation(0.3 + i * 0.05);
        const Isometry g = random_isometry(rng);
        const Isometry conj = g * m * g.inverse();
        CHECK_THAT(translation_length(conj).v, WithinRel(translation_length(m).v, 1e-12));
    }
    CHECK_THROWS_AS(translation_length(Isometry(1, 1, 0, 1)), NonHyperbolicError);
}

TEST_CASE("axis: fixed points and orientation") {
    {
        const Geodesic g = axis(Isometry::axis_translation(1.0));
        CHECK(g.p.coord == 0.0);
        CHECK(g.q.is_infinity);
    }
    {
        // Golden-ratio fixed points of [[2,1],[1,1]].
        const Geodesic g = axis(Isometry(2, 1, 1, 1));
        const double golden = 0.5 * (1.0 + std::sqrt(5.0));
        const double other = 0.5 * (1.0 - std::sqrt(5.0));
        CHECK_THAT(g.q.coord, WithinRel(golden, 1e-12));
        CHECK_THAT(g.p.coord, WithinRel(other, 1e-12));
    }
    std::mt19937 rng(303);
    for (int i = 0; i < 300; ++i) {
        Isometry m = random_isometry(rng);
        if (classify(m) != IsometryType::Hyperbolic)
            continue;
        const Geodesic ax = axis(m);
        const IdealPoint fp = apply(m, ax.p), fq = apply(m, ax.q);
        CHECK(same_point(fp, ax.p, 1e-9));
        CHECK(same_point(fq, ax.q, 1e-9));
        // Conjugation equivariance.
        const Isometry g = random_isometry(rng);
        const Geodesic moved = axis(g * m * g.inverse());
        const Geodesic expect = apply(g, ax);
        CHECK(same_point(moved.p, expect.p, 1e-7));
        CHECK(same_point(moved.q, expect.q, 1e-7));
    }
}

TEST_CASE("apply: Mobius action on geodesics") {
    const Geodesic g(IdealPoint::finite(0), IdealPoint::finite(1));
    {
        const Geodesic h = apply(Isometry::identity(), g);
        CHECK(h.p.coord == 0.0);
        CHECK(h.q.coord == 1.0);
    }
    {
        const Geodesic h = apply(Isometry(1, 1, 0, 1), g); // z + 1
        CHECK_THAT(h.p.coord, WithinAbs(1.0, 1e-15));
        CHECK_THAT(h.q.coord, WithinAbs(2.0, 1e-15));
    }
    {
        const Geodesic h =
            apply(Isometry(0, -1, 1, 0),
                  Geodesic(IdealPoint::finite(1), IdealPoint::finite(2))); // -1/z
        CHECK_THAT(h.p.coord, WithinAbs(-1.0, 1e-15));
        CHECK_THAT(h.q.coord, WithinAbs(-0.5, 1e-15));
    }
}

TEST_CASE("geodesic_distance: normal forms") {
    {
        // Concentric semicircles: distance log(e/1) = 1.
        const auto gd = geodesic_distance(Geodesic(IdealPoint::finite(-1), IdealPoint::finite(1)),
                                          Geodesic(IdealPoint::finite(-std::exp(1.0)),
                                                   IdealPoint::finite(std::exp(1.0))));
        CHECK(gd.relation == GeodesicRelation::Disjoint);
        CHECK_THAT(gd.distance.v, WithinRel(1.0, 1e-12));
    }
    {
        const auto gd = geodesic_distance(Geodesic(IdealPoint::finite(0), IdealPoint::finite(1)),
                                          Geodesic(IdealPoint::finite(1), IdealPoint::finite(2)));
        CHECK(gd.relation == GeodesicRelation::SharedEndpoint);
        CHECK(gd.distance.v == 0.0);
    }
    {
        const auto gd = geodesic_distance(Geodesic(IdealPoint::finite(-1), IdealPoint::finite(1)),
                                          Geodesic(IdealPoint::finite(0), IdealPoint::finite(2)));
        CHECK(gd.relation == GeodesicRelation::Crossing);
    }
    {
        const auto gd = geodesic_distance(Geodesic(IdealPoint::finite(-1), IdealPoint::finite(1)),
                                          Geodesic(IdealPoint::finite(1), IdealPoint::finite(-1)));
        CHECK(gd.relation == GeodesicRelation::Equal);
    }
    {
        // Two vertical lines are asymptotic at infinity.
        const auto gd = geodesic_distance(Geodesic(IdealPoint::finite(0), IdealPoint::infinity()),
                                          Geodesic(IdealPoint::finite(3), IdealPoint::infinity()));
        CHECK(gd.relation == GeodesicRelation::SharedEndpoint);
    }
}

TEST_CASE("geodesic_distance: agrees with minimization, Mobius invariant") {
    std::mt19937 rng(304);
    for (int i = 0; i < 200; ++i) {
        const auto [g1, g2] = random_disjoint_pair(rng);
        const double closed = geodesic_distance(g1, g2).distance.v;
        const double brute = min_distance_oracle(g1, g2);
        CHECK_THAT(closed, WithinAbs(brute, 1e-9));
        CHECK_THAT(geodesic_distance(g2, g1).distance.v, WithinAbs(closed, 1e-12));
    }
    for (int i = 0; i < 100; ++i) {
        const auto [g1, g2] = random_disjoint_pair(rng);
        const Isometry g = random_isometry(rng);
        const double before = geodesic_distance(g1, g2).distance.v;
        const double after = geodesic_distance(apply(g, g1), apply(g, g2)).distance.v;
        CHECK_THAT(after, WithinAbs(before, 1e-9));
    }
}

TEST_CASE("Isometry: renormalization is idempotent, canonical sign for dedup") {
    std::mt19937 rng(305);
    for (int i = 0; i < 200; ++i) {
        Isometry m = random_isometry(rng);
        const Isometry again(m.a, m.b, m.c, m.d);
        CHECK(std::abs(again.a - m.a) < 1e-12);
        CHECK(std::abs(again.b - m.b) < 1e-12);
        CHECK(std::abs(again.c - m.c) < 1e-12);
        CHECK(std::abs(again.d - m.d) < 1e-12);
        CHECK_THAT(m.a * m.d - m.b * m.c, WithinAbs(1.0, 1e-12));
        const Isometry cs = m.canonical_sign();
        CHECK((cs.a > 0.0 || (cs.a == 0.0 && cs.b > 0.0)));
        CHECK(cs.dist_up_to_sign(m) == 0.0);
    }
    CHECK_THROWS_AS(Isometry(1, 0, 0, -1), DomainError);
}

TEST_CASE("Fricke identity on random pairs") {
    std::mt19937 rng(306);
    for (int i = 0; i < 200; ++i) {
        const Isometry A = random_isometry(rng), B = random_isometry(rng);
        const Isometry comm = A * B * A.inverse() * B.inverse();
        const double x = A.trace(), y = B.trace(), z = (A * B).trace();
        const double fricke = x * x + y * y + z * z - x * y * z - 2.0;
        CHECK_THAT(std::abs(comm.trace()), WithinAbs(std::abs(fricke), 1e-9));
    }
}

TEST_CASE("enumerate_group: cyclic and free counts, deterministic order") {
    {
        const auto els = enumerate_group({Isometry::axis_translation(1.0)}, 3);
        CHECK(els.size() == 6); // g^{+-1, +-2, +-3}
    }
    {
        // Two free generators: 4 + 12 = 16 reduced words up to length 2.
        const Isometry A = Isometry::axis_translation(3.0);
        const Isometry B(std::cosh(1.5), std::sinh(1.5), std::sinh(1.5), std::cosh(1.5));
        const auto els = enumerate_group({A, B}, 2);
        CHECK(els.size() == 16);
        CHECK(els[0].word == Word{0});
        CHECK(els[1].word == Word{1});
        CHECK(els[2].word == Word{2});
        CHECK(els[3].word == Word{3});
        CHECK(els[4].word == (Word{0, 0}));
        for (std::size_t i = 1; i < els.size(); ++i)
            CHECK(els[i - 1].word.size() <= els[i].word.size());
    }
    CHECK_THROWS_AS(enumerate_group({Isometry::axis_translation(1.0),
                                     Isometry(std::cosh(1.0), std::sinh(1.0), std::sinh(1.0),
                                              std::cosh(1.0))},
                                    12, 1000),
                    EnumerationLimit);
    {
        // Pants group at bound 6: regression count from the first run (the
        // free rank-2 count, all matrices distinct).
        const Isometry A = Isometry::axis_translation(4.0);
        const double P = (std::cosh(2.0) + std::cosh(2.0) * std::cosh(2.0)) / std::sinh(2.0);
        const double Q = std::sqrt(P * P - std::sinh(2.0) * std::sinh(2.0));
        const Isometry B(std::cosh(2.0) - P, Q, -Q, std::cosh(2.0) + P);
        CHECK(enumerate_group({A, B}, 6).size() == 1456);
    }
}

TEST_CASE("word helpers") {
    CHECK(inverse_word(Word{0, 3}) == (Word{2, 1}));
    CHECK(reduced_concat(Word{0, 2}, Word{3, 1}).empty());
    CHECK(reduced_concat(Word{0, 2}, Word{2, 1}) == (Word{0, 2, 2, 1}));
    CHECK(word_to_string(Word{0, 3}, {"a", "b"}) == "a b^-1");
    CHECK(word_to_string(Word{}, {"a"}) == "1");
}
