#include "semigrowth/plane_valuation.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>

using semigrowth::CriterionReport;
using semigrowth::ExampleFamily;
using semigrowth::FamilyTag;
using semigrowth::GeneratingSequence;
using semigrowth::Int;
using semigrowth::MonomialCurve;
using semigrowth::Rational;

namespace {

Rational rat(long long num, long long den) { return Rational(Int(num), Int(den)); }

bool mentions(const std::vector<std::string>& lines, const std::string& needle) {
    for (const std::string& line : lines)
        if (line.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("derive_levels on (1, 9/2, 65/4): indices 2,2 and conductor 83/4") {
    GeneratingSequence seq =
        semigrowth::derive_levels({Rational(1), rat(9, 2), rat(65, 4)});
    REQUIRE(seq.levels.size() == 2);
    CHECK(seq.levels[0].group_index == 2);
    CHECK(seq.levels[0].min_multiple == 2);
    CHECK(seq.levels[0].conductor == rat(9, 2));
    CHECK(seq.levels[1].group_index == 2);
    CHECK(seq.levels[1].min_multiple == 2);
    // x_2 = (2-1)(9/2) + (2-1)(65/4).
    CHECK(seq.levels[1].conductor == rat(83, 4));
}

TEST_CASE("derive_levels with an integer level: q = s = 1") {
    GeneratingSequence seq = semigrowth::derive_levels({Rational(1), Rational(2)});
    REQUIRE(seq.levels.size() == 1);
    CHECK(seq.levels[0].group_index == 1);
    CHECK(seq.levels[0].min_multiple == 1);
    CHECK(seq.levels[0].conductor == Rational(0));
}

TEST_CASE("derive_levels on (1, 5/2, 21/4)") {
    GeneratingSequence seq =
        semigrowth::derive_levels({Rational(1), rat(5, 2), rat(21, 4)});
    REQUIRE(seq.levels.size() == 2);
    CHECK(seq.levels[0].group_index == 2);
    CHECK(seq.levels[0].min_multiple == 2);
    CHECK(seq.levels[1].group_index == 2);
    CHECK(seq.levels[1].min_multiple == 2);
}

TEST_CASE("derive_levels validates its input") {
    CHECK_THROWS_AS(semigrowth::derive_levels({}), std::invalid_argument);
    CHECK_THROWS_AS(semigrowth::derive_levels({rat(3, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(semigrowth::derive_levels({Rational(1), Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(semigrowth::derive_levels({Rational(1), rat(9, 2), rat(7, 2)}),
                    std::invalid_argument);
}

TEST_CASE("criterion passes the canonical 2-level example") {
    CriterionReport report =
        semigrowth::check_plane_criterion({Rational(1), rat(9, 2), rat(65, 4)});
    CHECK(report.pass);
    CHECK(report.failures.empty());
    CHECK(report.redundant_values.empty());
    REQUIRE(report.levels.size() == 2);
    CHECK(report.levels[0].equality_ok);
    REQUIRE(report.levels[0].gap_ok.has_value());
    CHECK(*report.levels[0].gap_ok);           // 65/4 > 9
    CHECK(report.levels[0].gap_threshold == Rational(9));
    CHECK_FALSE(report.levels[1].gap_ok.has_value());  // top level: not checkable
}

TEST_CASE("criterion fails (1, 3/2, 7/4) on the gap condition at level 1") {
    CriterionReport report =
        semigrowth::check_plane_criterion({Rational(1), rat(3, 2), rat(7, 4)});
    CHECK_FALSE(report.pass);
    REQUIRE(report.levels.size() == 2);
    CHECK(report.levels[0].equality_ok);
    REQUIRE(report.levels[0].gap_ok.has_value());
    CHECK_FALSE(*report.levels[0].gap_ok);  // 7/4 is not > 3
    CHECK(report.levels[0].gap_threshold == Rational(3));
    CHECK(mentions(report.failures, "7/4"));
    CHECK(mentions(report.failures, "3"));
}

TEST_CASE("criterion fails (1, 5/2, 9/4): misorder surfaces as a gap failure") {
    CriterionReport report =
        semigrowth::check_plane_criterion({Rational(1), rat(5, 2), rat(9, 4)});
    CHECK_FALSE(report.pass);
    CHECK_FALSE(report.ordering_violations.empty());
    CHECK(mentions(report.failures, "9/4"));
    // 9/4 is not redundant: it lies off the half-integer grid of <1, 5/2>.
    CHECK(report.redundant_values.empty());
    REQUIRE(report.levels.size() == 2);
    REQUIRE(report.levels[0].gap_ok.has_value());
    CHECK_FALSE(*report.levels[0].gap_ok);  // 9/4 is not > 5
}

TEST_CASE("criterion reduces redundant values and reports them") {
    CriterionReport report = semigrowth::check_plane_criterion(
        {Rational(1), rat(5, 2), rat(7, 2), rat(21, 4)});
    CHECK(report.redundant_values == std::vector<Rational>{rat(7, 2)});
    CHECK(report.reduced_values ==
          std::vector<Rational>{Rational(1), rat(5, 2), rat(21, 4)});
    CHECK(report.pass);  // (1, 5/2, 21/4) satisfies both conditions
}

TEST_CASE("criterion rejects values below 1 or a missing leading 1") {
    CHECK_THROWS_AS(semigrowth::check_plane_criterion({rat(3, 2), Rational(2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(semigrowth::check_plane_criterion({Rational(1), rat(1, 2)}),
                    std::invalid_argument);
}

TEST_CASE("criterion equality failure: a level whose s exceeds q") {
    // On (1, 9/4, 19/8): level 1 has q = s = 4 (9 lands in <1>). Level 2 has
    // q = 2, but 2*(19/8) = 19/4 is a gap of <1, 9/4> (the residues 3/4 mod 1
    // only enter at 27/4), while 4*(19/8) = 19/2 = 9/2 + 5 is a member. So
    // s = 4 > q = 2 and the equality condition fails.
    CriterionReport report =
        semigrowth::check_plane_criterion({Rational(1), rat(9, 4), rat(19, 8)});
    CHECK_FALSE(report.pass);
    REQUIRE(report.levels.size() == 2);
    CHECK(report.levels[0].equality_ok);
    CHECK(report.levels[0].group_index == 4);
    CHECK(report.levels[1].group_index == 2);
    CHECK(report.levels[1].min_multiple == 4);
    CHECK_FALSE(report.levels[1].equality_ok);
}

TEST_CASE("family closed forms match the frozen first values") {
    ExampleFamily exf1{FamilyTag::exf1};
    CHECK(exf1.values(3) ==
          std::vector<Rational>{Rational(1), rat(9, 2), rat(65, 4), rat(513, 8)});

    ExampleFamily quadratic{FamilyTag::quadratic};
    CHECK(quadratic.values(3) ==
          std::vector<Rational>{Rational(1), rat(3, 2), rat(13, 4), rat(53, 8)});

    ExampleFamily nlog{FamilyTag::nlog};
    CHECK(nlog.values(2) == std::vector<Rational>{Rational(1), rat(21, 2), rat(401, 4)});

    ExampleFamily power = ExampleFamily::parse("power:2,3");
    CHECK(power.value_at(1) == rat(33, 4));       // 8 + 1/4
    CHECK(power.value_at(2) == rat(1025, 16));    // 64 + 1/16
}

TEST_CASE("family recursions agree with the closed forms") {
    for (const char* name : {"exf1", "quadratic", "nlog", "power:2,3", "power:1,2",
                             "power:3,5"}) {
        ExampleFamily family = ExampleFamily::parse(name);
        for (int i = 0; i <= 12; ++i)
            CHECK(family.value_at_recursive(i) == family.value_at(i));
    }
}

TEST_CASE("family parsing accepts the documented grammar only") {
    CHECK(ExampleFamily::parse("exf1").tag == FamilyTag::exf1);
    CHECK(ExampleFamily::parse("quadratic").tag == FamilyTag::quadratic);
    CHECK(ExampleFamily::parse("nlog").tag == FamilyTag::nlog);
    ExampleFamily power = ExampleFamily::parse("power:2,5");
    CHECK(power.tag == FamilyTag::power);
    CHECK(power.p == 2);
    CHECK(power.q == 5);
    CHECK(ExampleFamily::parse("power:2,5").to_string() == "power:2,5");
    CHECK_THROWS_AS(ExampleFamily::parse("power"), std::invalid_argument);
    CHECK_THROWS_AS(ExampleFamily::parse("power:3,3"), std::invalid_argument);
    CHECK_THROWS_AS(ExampleFamily::parse("power:4,2"), std::invalid_argument);
    CHECK_THROWS_AS(ExampleFamily::parse("power:2,4"), std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(ExampleFamily::parse("power:0,3"), std::invalid_argument);
    CHECK_THROWS_AS(ExampleFamily::parse("unknown"), std::invalid_argument);
}

TEST_CASE("levels_for_bound covers the requested range with one spare level") {
    ExampleFamily exf1{FamilyTag::exf1};
    // a_5 = 4^5 + 2^-5 >= 1024, so 6 levels cover n_max = 1024.
    CHECK(exf1.levels_for_bound(Int(1024)) == 6);
    CHECK(exf1.levels_for_bound(Int(4)) == 2);  // a_1 = 9/2 >= 4
    ExampleFamily nlog{FamilyTag::nlog};
    CHECK(nlog.levels_for_bound(Int(10000)) == 4);  // a_3 = 10^4 + 1/8
}

TEST_CASE("all four families pass the criterion at depth 6") {
    for (const char* name : {"exf1", "quadratic", "nlog", "power:2,3"}) {
        ExampleFamily family = ExampleFamily::parse(name);
        CriterionReport report = semigrowth::check_plane_criterion(family.values(6));
        CHECK_MESSAGE(report.pass, name);
        CHECK(report.failures.empty());
    }
}

TEST_CASE("displayed dyadic pattern matches the quadratic closed form") {
    CHECK(semigrowth::quadratic_displayed_pattern_mismatches(10).empty());
}

TEST_CASE("realize_monomial_curve scales to coprime exponents") {
    MonomialCurve cusp = semigrowth::realize_monomial_curve({Rational(1), rat(3, 2)});
    CHECK(cusp.alpha == rat(1, 2));
    CHECK(cusp.exponents == std::vector<Int>{2, 3});

    MonomialCurve fifth = semigrowth::realize_monomial_curve({rat(2, 5), rat(3, 5)});
    CHECK(fifth.alpha == rat(1, 5));
    CHECK(fifth.exponents == std::vector<Int>{2, 3});

    MonomialCurve integers = semigrowth::realize_monomial_curve({Rational(4), Rational(6)});
    CHECK(integers.alpha == Rational(2));
    CHECK(integers.exponents == std::vector<Int>{2, 3});

    CHECK_THROWS_AS(semigrowth::realize_monomial_curve({}), std::invalid_argument);
    CHECK_THROWS_AS(semigrowth::realize_monomial_curve({Rational(0)}),
                    std::invalid_argument);
}
