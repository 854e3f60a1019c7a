#include <doctest.h>

#include <cmath>

#include "mincw/bounds.hpp"

using namespace mincw;
using bounds::GTable;

TEST_CASE("trivial and refined trivial bounds") {
    const GTable g = GTable::embedded();
    for (int n = 1; n <= 15; ++n) CHECK(bounds::trivial_upper(n, 1) == 1);
    CHECK(bounds::trivial_upper(7, 5) == 31);
    CHECK(bounds::trivial_upper(15, 10) == 1023);

    CHECK(bounds::refined_trivial_upper(9, 6, g) == 62);
    CHECK(bounds::refined_trivial_upper(7, 3, g) == 7);
    CHECK(bounds::refined_trivial_upper(10, 7, g) == 126);
    CHECK_THROWS_AS(bounds::refined_trivial_upper(20, 4, g), bounds::UnknownG);

    for (int n = 3; n <= 15; ++n) {
        for (int k = 1; k <= n; ++k) {
            const bool full = bounds::refined_trivial_upper(n, k, g) == bounds::trivial_upper(n, k);
            CHECK(full == (k <= g.at(n)));
        }
    }
}

TEST_CASE("matroid bound") {
    for (int n = 1; n <= 15; ++n) CHECK(bounds::matroid_upper(n, 1) == 1);
    CHECK(bounds::matroid_upper(8, 6) == 56);
    CHECK(bounds::matroid_upper(15, 13) == 455);
    CHECK_THROWS_AS(bounds::matroid_upper(4, 5), bounds::BadParameter);
}

TEST_CASE("agrell bound: the six published entries, exact floors") {
    CHECK(bounds::agrell_upper(12, 9) == 384);
    CHECK(bounds::agrell_upper(13, 10) == 532);
    CHECK(bounds::agrell_upper(14, 10) == 896);
    CHECK(bounds::agrell_upper(14, 11) == 796);
    CHECK(bounds::agrell_upper(15, 11) == 1228);
    CHECK(bounds::agrell_upper(15, 12) == 1253);
    CHECK_FALSE(bounds::agrell_upper(8, 5).has_value());   // (k-1)/n = 1/2 exactly
    CHECK_FALSE(bounds::agrell_upper(10, 4).has_value());
}

TEST_CASE("recursion upper table") {
    const auto u = bounds::recursion_upper_table(15, 13);
    for (int n = 1; n <= 15; ++n) {
        CHECK(u.at({n, 1}) == 1);
        if (n <= 13) CHECK(u.at({n, n}) == static_cast<std::uint64_t>(n));
    }
    CHECK(u.at({7, 5}) == 30);
    CHECK(u.at({8, 6}) == 51);  // sharper than the published 55
    for (const auto& [nk, v] : u) CHECK(v <= bounds::matroid_upper(nk.first, nk.second));
}

TEST_CASE("random coding lower bound") {
    CHECK(bounds::random_coding_lower(8, 4) == 9);

    // k = n-1: the sum collapses to 1 + n + C(n,2)/2 over 2
    for (int n = 3; n <= 12; ++n) {
        const double rhs = (1.0 + n + n * (n - 1) / 4.0) / 2.0;
        CHECK(bounds::random_coding_lower(n, n - 1) == static_cast<std::uint64_t>(std::ceil(rhs - 1e-9)));
    }
    CHECK(bounds::random_coding_lower(5, 4) == 6);

    // floating-point oracle over a rectangle, plus the trivial cap
    for (int n = 2; n <= 20; ++n) {
        for (int k = 1; k < n; ++k) {
            double rhs = 0;
            double product = 1;
            for (int j = 0; j <= n - k + 1; ++j) {
                if (j >= 2) product *= 1.0 - std::ldexp(1.0, -(n - k - (j - 2)));
                double binom = 1;
                for (int i = 1; i <= j; ++i) binom = binom * (n - j + i) / i;
                rhs += binom * product;
            }
            const double expected = std::ceil(rhs / std::ldexp(1.0, n - k) - 1e-7);
            const std::uint64_t got = bounds::random_coding_lower(n, k);
            CHECK(got <= bounds::trivial_upper(n, k));
            if (got < bounds::trivial_upper(n, k))
                CHECK(static_cast<double>(got) == doctest::Approx(expected).epsilon(1e-9));
        }
    }
    CHECK_THROWS_AS(bounds::random_coding_lower(6, 6), bounds::BadParameter);
}

TEST_CASE("abch lower bound") {
    CHECK(bounds::abch_lower(8, 4, 4) == 5);
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) CHECK(bounds::abch_lower(n, k, n) == bounds::trivial_upper(n, k));
    }
    CHECK(bounds::abch_lower(8, 4, 1) == 4);
}

TEST_CASE("abch monotonicity") {
    // coarser decompositions (larger d) force more minimal codewords
    for (int d = 1; d <= 7; ++d) CHECK(bounds::abch_lower(8, 5, d) <= bounds::abch_lower(8, 5, d + 1));
    for (int k = 1; k <= 7; ++k) CHECK(bounds::abch_lower(8, k, 3) <= bounds::abch_lower(8, k + 1, 3));
}

TEST_CASE("closure of lower bounds") {
    std::map<std::pair<int, int>, std::uint64_t> cells;
    for (int n = 3; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) cells[{n, k}] = 1;
    }
    cells[{4, 2}] = 3;
    cells[{8, 4}] = 14;
    const auto closed = bounds::closure_lower(cells);
    CHECK(closed.lower.at({8, 4}) == 14);
    CHECK(closed.lower.at({9, 4}) >= 14);           // monotone in n
    CHECK(closed.source.at({9, 4}) == "monotone");
    CHECK(closed.lower.at({8, 4}) >= 6);            // superadditive from (4,2)+(4,2)
    CHECK(closed.lower.at({9, 5}) >= 3 + 1);
    for (const auto& [nk, v] : cells) CHECK(closed.lower.at(nk) >= v);
}

TEST_CASE("graph cycle bounds") {
    const auto k6 = bounds::graph_cycle_upper(6, 15);
    REQUIRE(k6.bound_new.has_value());
    CHECK(*k6.bound_new == 1706);
    CHECK(k6.bound_old == 960);

    CHECK_FALSE(bounds::graph_cycle_upper(4, 8).bound_new.has_value());  // q = 2p boundary

    const auto dense = bounds::graph_cycle_upper(6, 21);
    REQUIRE(dense.bound_new.has_value());
    CHECK(*dense.bound_new == 21ULL * 65536 / 81);
    CHECK(dense.bound_old == 61440);
    CHECK(*dense.bound_new < dense.bound_old);
}

TEST_CASE("best_bounds cells") {
    const GTable g = GTable::embedded();
    const auto u = bounds::recursion_upper_table(15, 13);

    const auto c74 = bounds::best_bounds(7, 4, g, 14, std::nullopt, u.at({7, 4}));
    CHECK(c74.lower == 14);
    CHECK(c74.upper == 14);
    CHECK(c74.exact());

    const auto c64 = bounds::best_bounds(6, 4, g, 11, std::nullopt, u.at({6, 4}));
    CHECK(c64.lower == 11);
    CHECK(c64.upper == 14);
    CHECK(c64.upper_src == "refined_trivial");

    const auto c129 = bounds::best_bounds(12, 9, g, 95, std::nullopt, u.at({12, 9}));
    CHECK(c129.lower == 95);
    CHECK(c129.upper == 384);
    CHECK(c129.upper_src == "agrell");

    for (int n = 3; n <= 15; ++n) {
        for (int k = 1; k <= std::min(n, 13); ++k) {
            const auto cell = bounds::best_bounds(n, k, g, std::nullopt, std::nullopt, u.at({n, k}));
            CHECK(cell.lower <= cell.upper);
        }
    }
}

TEST_CASE("g table and published discrepancies") {
    const GTable g = GTable::embedded();
    const int expected[] = {2, 2, 2, 3, 3, 3, 4, 4, 4, 4, 5, 5, 6};
    for (int n = 3; n <= 15; ++n) {
        CHECK(g.at(n) == expected[n - 3]);
        if (n > 3) CHECK(g.at(n) >= g.at(n - 1));
        CHECK(g.at(n) <= n);
    }

    const auto& cells = bounds::published_matroid_discrepancies();
    REQUIRE(cells.size() == 8);
    const std::uint64_t printed[] = {55, 83, 119, 164, 219, 285, 363, 454};
    for (std::size_t i = 0; i < cells.size(); ++i) {
        CHECK(bounds::matroid_upper(cells[i].first, cells[i].second) == printed[i] + 1);
    }
}
