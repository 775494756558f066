#include "doctest.h"
#include "sqcolor/bounds.hpp"

#include <stdexcept>
#include <string>

using namespace sqcolor;

TEST_CASE("ghost degeneracy bound spot values") {
    CHECK(ghost_degeneracy_bound(2, 30) == 88);  // terms 88, 81, 63
    CHECK(ghost_degeneracy_bound(2, 8) == 41);   // terms 22, 37, 41
    for (long long d : {1, 5, 17, 100}) CHECK(ghost_degeneracy_bound(1, d) == std::max(d, 4LL));
    CHECK_THROWS_AS(ghost_degeneracy_bound(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(ghost_degeneracy_bound(2, 0), std::invalid_argument);
}

TEST_CASE("ghost chromatic bound spot values") {
    CHECK(ghost_chromatic_bound(2, 30) == 89);
    CHECK(ghost_chromatic_bound(2, 10) == 44);   // terms 29, 42, 44
    CHECK(ghost_chromatic_bound(3, 20) == 177);  // terms 95, 145, 177
}

TEST_CASE("ghost bounds are nondecreasing and offset by one") {
    for (long long k = 1; k <= 4; ++k) {
        long long prev = 0;
        for (long long d = 1; d <= 1000; ++d) {
            long long v = ghost_degeneracy_bound(k, d);
            CHECK(v >= prev);
            CHECK(ghost_chromatic_bound(k, d) == v + 1);
            prev = v;
        }
    }
}

TEST_CASE("mad4 bounds") {
    Mad4Bounds b8 = mad4_bounds(8);
    CHECK(b8.upper == 25);
    CHECK(b8.lower == 20);
    CHECK(b8.upper_in_range);

    Mad4Bounds b4 = mad4_bounds(4);
    CHECK(b4.upper == 13);
    CHECK(b4.lower == 10);
    CHECK(!b4.upper_in_range);

    Mad4Bounds b3 = mad4_bounds(3);
    CHECK(b3.upper == 10);
    CHECK(b3.lower == 8);

    for (long long d = 1; d <= 1000; ++d) {
        Mad4Bounds b = mad4_bounds(d);
        CHECK(b.lower <= b.upper);
    }
}

TEST_CASE("wegner bound cases") {
    CHECK(wegner_bound(3) == 7);
    CHECK(wegner_bound(4) == 9);
    CHECK(wegner_bound(7) == 12);
    CHECK(wegner_bound(8) == 13);
    CHECK(wegner_bound(9) == 14);
    CHECK_THROWS_AS(wegner_bound(2), std::invalid_argument);
    for (long long d = 3; d <= 1000; ++d) CHECK(wegner_bound(d) <= mad4_bounds(d).upper);
}

TEST_CASE("hds bound applies below 16/7 only") {
    CHECK(hds_bound(Rational(2), 5) == 6);
    CHECK(!hds_bound(Rational(16, 7), 5).has_value());
    CHECK(!hds_bound(Rational(3), 9).has_value());
    CHECK(hds_bound(Rational(32, 15), 10) == 11);  // just under 16/7
}

TEST_CASE("bound table comparisons around the crossover") {
    BoundTable t = compare_table(2, 8, 8);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].mad4_upper == 25);
    CHECK(t.rows[0].ghost_chromatic == 42);
    CHECK(t.rows[0].best_upper == BoundRow::Best::mad4);

    BoundTable t21 = compare_table(2, 21, 21);
    CHECK(t21.rows[0].mad4_upper == 64);
    CHECK(t21.rows[0].ghost_chromatic == 64);
    CHECK(t21.rows[0].best_upper == BoundRow::Best::tie);

    BoundTable t30 = compare_table(2, 30, 30);
    CHECK(t30.rows[0].ghost_chromatic == 89);
    CHECK(t30.rows[0].mad4_upper == 91);
    CHECK(t30.rows[0].best_upper == BoundRow::Best::ghost);

    CHECK_THROWS_AS(compare_table(2, 9, 8), std::invalid_argument);
}

TEST_CASE("bound table formatting") {
    BoundTable t = compare_table(2, 7, 8);
    std::string csv = format_bound_table(t, true);
    CHECK(csv.find("k,delta,ghost_deg,ghost_chi,mad4_up,mad4_low,wegner,best_upper\n") == 0);
    CHECK(csv.find("2,8,41,42,25,20,13,3d+1") != std::string::npos);
    std::string text = format_bound_table(t, false);
    CHECK(text.find("22*") != std::string::npos);  // delta 7 flagged out of range
    CHECK(text.find("outside stated hypotheses") != std::string::npos);
}
