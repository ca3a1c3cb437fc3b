#include "semigrowth/semigroup.hpp"

#include <doctest.h>

#include <stdexcept>

using semigrowth::CountTable;
using semigrowth::Int;
using semigrowth::Rational;
using semigrowth::Semigroup;

namespace {

Rational rat(long long num, long long den) { return Rational(Int(num), Int(den)); }

}  // namespace

TEST_CASE("construction validates the generator list") {
    CHECK_THROWS_AS(Semigroup({}), std::invalid_argument);
    CHECK_THROWS_AS(Semigroup({Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(Semigroup({Rational(1), rat(-1, 2)}), std::invalid_argument);
    Semigroup s({rat(9, 2), Rational(1)});
    CHECK(s.min_generator() == Rational(1));
    CHECK(s.scale() == 2);
}

TEST_CASE("membership on <1, 3/2>: every half-integer from 1 on") {
    Semigroup s({Rational(1), rat(3, 2)});
    CHECK(s.contains(Rational(1)));
    CHECK(s.contains(rat(3, 2)));
    CHECK(s.contains(Rational(2)));
    CHECK(s.contains(rat(5, 2)));
    CHECK_FALSE(s.contains(rat(1, 2)));
    CHECK_FALSE(s.contains(rat(5, 4)));  // off the 1/2 grid
    CHECK_THROWS_AS(s.contains(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(s.contains(rat(-3, 2)), std::invalid_argument);
}

TEST_CASE("enumerate lists (0, bound) strictly and in order") {
    Semigroup s({Rational(1), rat(3, 2)});
    auto elements = s.enumerate(Rational(4));
    std::vector<Rational> expected = {Rational(1), rat(3, 2), Rational(2),
                                      rat(5, 2),   Rational(3), rat(7, 2)};
    CHECK(elements == expected);
    // The bound itself is excluded even when it is a member.
    auto closed_under = s.enumerate(rat(7, 2));
    CHECK(closed_under.back() == Rational(3));
    CHECK_THROWS_AS(s.enumerate(Rational(0)), std::invalid_argument);
}

TEST_CASE("phi on <1, 3/2> is 2(n-1)") {
    Semigroup s({Rational(1), rat(3, 2)});
    for (std::int64_t n = 2; n <= 100; ++n) CHECK(s.phi(n) == 2 * (n - 1));
    CHECK(s.phi(1) == 0);
    CHECK(s.phi(100) == 198);
    CHECK_THROWS_AS(s.phi(0), std::invalid_argument);
}

TEST_CASE("phi(4) = 3 on the first example family's 2-level truncation") {
    Semigroup s({Rational(1), rat(9, 2), rat(65, 4)});
    CHECK(s.phi(4) == 3);  // 1, 2, 3
    CHECK(s.phi(5) == 5);  // + 4, 9/2
    CHECK(s.phi(6) == 7);  // + 5, 11/2
}

TEST_CASE("interval_count is the half-open window [x-1, x)") {
    Semigroup s({Rational(1), rat(9, 2)});
    // [8,9): 8 and 17/2.
    CHECK(s.interval_count(Rational(9)) == 2);
    // [0,1) clamps to positive slots: nothing below 1.
    CHECK(s.interval_count(Rational(1)) == 0);
    // [1,2): just 1.
    CHECK(s.interval_count(Rational(2)) == 1);
    CHECK_THROWS_AS(s.interval_count(Rational(0)), std::invalid_argument);

    Semigroup t({Rational(1), rat(9, 2), rat(65, 4)});
    // [39,40): 39, 157/4, 79/2, 159/4.
    CHECK(t.interval_count(Rational(40)) == 4);
}

TEST_CASE("count_below takes rational cut points") {
    Semigroup s({Rational(1), rat(3, 2)});
    CHECK(s.count_below(rat(5, 2)) == 3);   // 1, 3/2, 2
    CHECK(s.count_below(rat(1, 2)) == 0);
    CHECK(s.count_below(Rational(-4)) == 0);
}

TEST_CASE("decompose returns generator multiplicities that recombine") {
    Semigroup s({Rational(1), rat(5, 2)});
    auto witness = s.decompose(rat(21, 2));
    REQUIRE(witness.has_value());
    REQUIRE(witness->size() == 2);
    Rational sum = Rational((*witness)[0]) * Rational(1) + Rational((*witness)[1]) * rat(5, 2);
    CHECK(sum == rat(21, 2));
    CHECK_FALSE(s.decompose(rat(3, 2)).has_value());
    CHECK_FALSE(s.decompose(rat(1, 4)).has_value());
}

TEST_CASE("minimal_generators strips sums") {
    Semigroup s({Rational(1), rat(5, 2), rat(7, 2)});
    auto minimal = s.minimal_generators(Rational(4));
    std::vector<Rational> expected = {Rational(1), rat(5, 2)};
    CHECK(minimal == expected);  // 7/2 = 1 + 5/2
    CHECK_THROWS_AS(s.minimal_generators(Rational(2)), std::invalid_argument);

    Semigroup t({Rational(1), rat(9, 2), rat(65, 4)});
    auto kept = t.minimal_generators(Rational(17));
    CHECK(kept == std::vector<Rational>{Rational(1), rat(9, 2), rat(65, 4)});
}

TEST_CASE("count table rows satisfy the running-sum identity") {
    Semigroup s({Rational(1), rat(9, 2), rat(65, 4)});
    CountTable table = s.build_count_table(60);
    REQUIRE(table.rows.size() == 60);
    // (0,n) = (0,n-1) + [n-1,n), so phi(n) = phi(n-1) + interval(n).
    CHECK(table.rows[0].phi == table.rows[0].interval);
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i)
        CHECK(table.rows[i].phi + table.rows[i + 1].interval == table.rows[i + 1].phi);
    CHECK(table.rows[0].phi == 0);
    CHECK_THROWS_AS(s.build_count_table(0), std::invalid_argument);
}

TEST_CASE("count table is independent of the thread count") {
    Semigroup a({Rational(1), rat(9, 2), rat(65, 4)});
    Semigroup b({Rational(1), rat(9, 2), rat(65, 4)});
    CountTable one = a.build_count_table(200, 1);
    CountTable four = b.build_count_table(200, 4);
    REQUIRE(one.rows.size() == four.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i) {
        CHECK(one.rows[i].n == four.rows[i].n);
        CHECK(one.rows[i].phi == four.rows[i].phi);
        CHECK(one.rows[i].interval == four.rows[i].interval);
    }
}

TEST_CASE("csv form: header, LF endings, no trailing separator") {
    Semigroup s({Rational(1), rat(3, 2)});
    CountTable table = s.build_count_table(3);
    // (0,2) holds 1 and 3/2; (0,3) adds 2 and 5/2.
    CHECK(semigrowth::to_csv(table) == "n,phi,interval\n1,0,0\n2,2,2\n3,4,2\n");
}
