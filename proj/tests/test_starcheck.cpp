#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hypsurf/starcheck.hpp"

using namespace hypsurf;
using namespace hypsurf::starcheck;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("lemma52_bounds: widening hexagons stay close to their boundary") {
    std::vector<double> lin;
    for (int n = 1; n <= 200; ++n)
        lin.push_back(n + 1.0);
    const auto rep = lemma52_bounds(Length(1.0), lin, 200);
    CHECK(rep.pass);
    CHECK(std::isfinite(rep.sup));
    CHECK(rep.sup <= rep.claimed_bound);
    // Running sup is nondecreasing over the window.
    for (std::size_t i = 1; i < rep.running_sup.size(); ++i)
        CHECK(rep.running_sup[i] >= rep.running_sup[i - 1]);
    // The two routes to d_n agree, and the tail of the expanded route
    // approaches sqrt(bounded + limit 2).
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
        CHECK_THAT(rep.rows[i][4], WithinAbs(rep.rows[i][3], 1e-10));
    const auto& last = rep.rows.back();
    const double bounded_part =
        std::pow(std::cosh(1.0) / std::tanh(201.0) / std::sinh(201.0), 2) +
        2.0 * std::pow(1.0 / std::tanh(201.0), 4) * std::cosh(1.0);
    CHECK_THAT(std::sinh(last[3]), WithinAbs(std::sqrt(bounded_part + 2.0), 1e-6));

    // Constant sequences are rejected.
    std::vector<double> flat(10, 2.0);
    CHECK_THROWS_AS(lemma52_bounds(Length(1.0), flat, 10), DomainError);
}

TEST_CASE("lemma52_bounds: slow logarithmic growth, regression sup") {
    std::vector<double> logs;
    for (int n = 1; n <= 200; ++n)
        logs.push_back(std::log(n + 2.0));
    const auto rep = lemma52_bounds(Length(1.0), logs, 200);
    CHECK(rep.pass);
    CHECK_THAT(rep.sup, WithinRel(2.06474907675538066, 1e-10)); // regression value
}

TEST_CASE("prop54_bounds: constant symmetric flute") {
    std::vector<double> alpha(21, 1.0), beta(20, 1.0);
    const auto rep = prop54_bounds(alpha, beta, 20);
    CHECK(rep.pass);
    // Constancy: every row equals the first, and the sup is a_1.
    for (const auto& row : rep.rows)
        for (int k = 0; k < 4; ++k)
            CHECK_THAT(row[k], WithinAbs(rep.rows[0][k], 1e-12));
    CHECK_THAT(rep.sup,
               WithinAbs(std::max({rep.rows[0][0], rep.rows[0][1], rep.rows[0][2],
                                   rep.rows[0][3]}),
                         1e-12));
    // The inter-cuff gaps accumulate linearly: divergence trend.
    CHECK(rep.rows.back()[5] > 10.0 * rep.rows[0][4] * 0.9);
}

TEST_CASE("prop54_bounds: widening flute obeys the per-index envelope") {
    const double l0 = 0.5;
    std::vector<double> alpha(41, l0), beta;
    for (int n = 0; n < 40; ++n)
        beta.push_back(1.0 + 0.5 * n);
    const auto rep = prop54_bounds(alpha, beta, 40);
    CHECK(rep.pass);
    for (int n = 0; n < 40; ++n) {
        const double envelope = 2.0 / std::tanh(beta[n]) / std::tanh(l0);
        CHECK(std::cosh(rep.rows[n][0]) <= envelope + 1e-12);
        // Symmetric cuffs make a_n and b_n coincide.
        CHECK_THAT(rep.rows[n][0], WithinAbs(rep.rows[n][1], 1e-12));
    }
    // Boundedness of the whole family despite beta -> infinity.
    CHECK(rep.sup < rep.running_sup.front() + 1.0);
}

TEST_CASE("tight_flute_check: dyadic flute totals and condition values") {
    const int N = 40;
    const auto ls = dyadic_flute_lengths(N);
    const auto rep = tight_flute_check(ls, N);

    // d_0 = log 2 + 1/2 and d_i = 2^{-i} + 2^{-i-1}.
    CHECK_THAT(rep.d_seq[0], WithinAbs(std::log(2.0) + 0.5, 1e-12));
    for (int i = 1; i < N; ++i)
        CHECK_THAT(rep.d_seq[i], WithinAbs(3.0 * std::pow(2.0, -i - 1), 1e-12));

    // Window total plus the geometric tail equals log 2 + 2.
    const double tail = 3.0 * std::pow(2.0, -N);
    CHECK_THAT(rep.total + tail, WithinAbs(std::log(2.0) + 2.0, 1e-12));

    // The condition values tend to 8: at n = 30 within 1e-6.
    CHECK_THAT(dyadic_condition_value(ls[29]), WithinAbs(8.0, 1e-6));
    // And at x = 40 directly, along with the hexagon tail limit at x = 20.
    CHECK_THAT(dyadic_condition_value(40.0), WithinAbs(8.0, 1e-6));
    CHECK_THAT(hyptrig::coth_fourth_excess(20.0), WithinAbs(2.0, 1e-6));

    // The d_i agree with the pentagon route term by term (i >= 1).
    for (int i = 1; i < N; ++i)
        CHECK_THAT(rep.d_seq[i],
                   WithinAbs(hyptrig::pentagon_distance(Length(ls[i - 1]), Length(ls[i])).v,
                             1e-10));
}

TEST_CASE("tight_flute_check: constant cuffs diverge linearly") {
    std::vector<double> ls(50, 1.0);
    const auto rep = tight_flute_check(ls, 50);
    const double step = 2.0 * hyptrig::cusp_constant(Length(1.0));
    CHECK(rep.total > 40.0 * step);
    // The head condition value grows without bound as the window widens.
    const auto small = tight_flute_check(ls, 10);
    CHECK(rep.condition_values.front() > small.condition_values.front());
    CHECK(rep.sup > 1e6);
}

TEST_CASE("collar_decorated_profile: two routes agree and tend to 2") {
    const auto rows = collar_decorated_profile(1, 1000);
    for (const auto& r : rows)
        CHECK_THAT(r.equidistant, WithinRel(r.closed_form, 1e-12));
    // Decreasing towards 2 from above.
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].equidistant < rows[i - 1].equidistant);
    CHECK(rows.back().equidistant > 2.0);
    CHECK_THAT(rows.back().equidistant, WithinAbs(2.0, 1e-3));
}

TEST_CASE("polygon_example_check: the full window 3..100") {
    const auto rep = polygon_example_check(3, 100);
    CHECK(rep.pass);
    CHECK(rep.cosh_a_constant);
    CHECK(rep.beta_below_alpha);
    CHECK(rep.legs_bounded);
    CHECK(rep.beta_increasing);
    CHECK_THAT(rep.global_constant, WithinRel(2.0 * std::asinh(2.0), 1e-15));

    // n = 3 is the smallest admissible case; n = 4 pins sinh b = cos(pi/4)/sqrt(3).
    CHECK(rep.rows.front().n == 3);
    const auto& r4 = rep.rows[1];
    CHECK_THAT(std::sinh(r4.b), WithinRel(std::cos(pi / 4) / std::sqrt(3.0), 1e-12));

    // cosh(beta_n) sinh(a_n) = sinh(alpha_n) throughout.
    for (const auto& r : rep.rows)
        CHECK_THAT(std::cosh(r.beta) * std::sinh(r.a), WithinRel(std::sinh(r.alpha), 1e-10));

    CHECK_THROWS_AS(polygon_example_check(2, 10), DomainError);
}

TEST_CASE("shiga_check: family rules") {
    {
        const auto r = shiga_check(FamilyRule::Constant, std::vector<double>(30, 1.0));
        CHECK(r.bounded);
        CHECK(r.min == 1.0);
        CHECK(r.max == 1.0);
    }
    {
        std::vector<double> grow;
        for (int n = 0; n < 30; ++n)
            grow.push_back(2.0 + n);
        CHECK_FALSE(shiga_check(FamilyRule::IncreasingUnbounded, grow).bounded);
    }
    {
        std::vector<double> shrink;
        for (int n = 1; n <= 30; ++n)
            shrink.push_back(1.0 / (2.0 * n));
        CHECK_FALSE(shiga_check(FamilyRule::DecreasingToZero, shrink).bounded);
    }
    {
        holonomy::FNSurface fn;
        fn.pants.push_back({{1, 1, 1}});
        fn.pants.push_back({{1, 1, 1}});
        fn.gluings.push_back({0, 2, 1, 0, 0.0});
        fn.boundaries = {{0, 0, "a"}, {0, 1, "b"}, {1, 1, "c"}, {1, 2, "d"}};
        const auto r = shiga_check(fn);
        CHECK(r.bounded);
        CHECK(r.min == 1.0);
    }
}
