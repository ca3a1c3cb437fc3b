#pragma once

#include "semigrowth/rational.hpp"
#include "semigrowth/semigroup.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semigrowth {

/// Derived data for one level of a generating sequence: the group index
/// q_i = [G_i : G_{i-1}], the least positive s_i with s_i * a_i in S_{i-1},
/// and the running conductor x_i = sum_{j<=i} (q_j - 1) a_j. Beyond x_i the
/// semigroup S_i meets every unit interval in exactly q_1...q_i points, which
/// is what certifies the finite s_i search.
struct Level {
    int index = 0;
    Rational value;
    Int group_index;
    Int min_multiple;
    Rational conductor;
};

struct GeneratingSequence {
    std::vector<Rational> values;  // a_0 = 1, a_1, ..., a_k
    std::vector<Level> levels;     // one per i >= 1
};

/// Computes q_i, s_i, x_i for a strictly increasing value list starting at 1.
/// The s_i search tests the multiples q_i, 2q_i, ... of a_i for membership in
/// S_{i-1}; the first candidate beyond x_{i-1} + 1 is a member by the density
/// argument, so the search is finite. A candidate in verifiable range that
/// contradicts the certificate raises std::logic_error.
GeneratingSequence derive_levels(const std::vector<Rational>& values);

struct LevelCheck {
    int index = 0;
    Rational value;
    Int group_index;
    Int min_multiple;
    bool equality_ok = false;          // s_i == q_i
    std::optional<bool> gap_ok;        // a_{i+1} > q_i a_i; empty at the top level
    Rational gap_threshold;            // q_i * a_i
};

struct CriterionReport {
    std::vector<Rational> input_values;
    std::vector<Rational> reduced_values;    // minimal system, input order
    std::vector<Rational> redundant_values;  // dropped from checking, reported
    std::vector<std::string> ordering_violations;
    std::vector<LevelCheck> levels;
    bool pass = false;
    std::vector<std::string> failures;
};

/// Decides whether the values generate the value semigroup of a valuation
/// dominating a 2-dimensional regular local ring: after reduction to the
/// minimal generating system, s_i = q_i at every level and a_{i+1} > q_i a_i
/// below the top level. The top level's gap condition is not checkable on a
/// truncation and stays undecided rather than counting as pass or fail.
/// Values must start at 1 and stay >= 1; redundant entries are reported, not
/// silently dropped; the remaining values are checked in input order, so a
/// misordered pair surfaces as a gap failure rather than being sorted away.
CriterionReport check_plane_criterion(const std::vector<Rational>& values);

enum class FamilyTag { exf1, power, quadratic, nlog };

/// The four built-in generating-sequence families:
///   exf1:       a_i = 4^i + 2^-i            (phi grows like n*sqrt(n))
///   power(p,q): a_i = r^i + s^-i, r = 2^q, s = 2^p, 0 < p < q coprime
///                                            (phi grows like n^(1+p/q))
///   quadratic:  a_i = 2^(i-1) + (2^i - 2^-i)/3   (phi grows like n^2)
///   nlog:       a_i = 10^(2^(i-1)) + 2^-i   (phi grows like n*log10(n))
/// Closed-form and recursive evaluation agree exactly at every level; the
/// tests pin that equality.
struct ExampleFamily {
    FamilyTag tag = FamilyTag::exf1;
    int p = 0;  // power family only
    int q = 0;

    /// Accepts "exf1", "power:p,q", "quadratic", "nlog".
    static ExampleFamily parse(std::string_view text);
    std::string to_string() const;

    /// Closed-form a_i; a_0 = 1.
    Rational value_at(int i) const;
    /// Same value by the per-family recursion.
    Rational value_at_recursive(int i) const;
    /// a_0..a_k.
    std::vector<Rational> values(int k) const;

    /// Levels needed so that every semigroup element below n_max is a sum of
    /// generators below n_max: the first k with a_k >= n_max, plus one.
    int levels_for_bound(const Int& n_max) const;
};

/// The quadratic family's values also arise as the dyadic sum
/// 2^(i-1) + 2^(i-2) + 2^(i-4) + ... + 2^-i. Returns the levels <= k where
/// that sum differs from the closed form (expected empty; a nonempty result
/// flags the discrepancy instead of resolving it silently).
std::vector<int> quadratic_displayed_pattern_mismatches(int k);

struct MonomialCurve {
    Rational alpha;
    std::vector<Int> exponents;  // gcd 1, aligned with the input generators
};

/// Scales positive rational generators to coprime integers: generator_i =
/// alpha * exponent_i with gcd(exponents) = 1. The exponent semigroup,
/// rescaled by alpha, is the input semigroup (the monomial-curve model).
MonomialCurve realize_monomial_curve(const std::vector<Rational>& generators);

}  // namespace semigrowth
