#pragma once

#include "semigrowth/numeric_core.hpp"
#include "semigrowth/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace semigrowth {

struct CountRow {
    std::int64_t n;
    std::int64_t phi;
    std::int64_t interval;
};

/// Rows (n, phi(n), |S cap [n-1,n)|) for n = 1..n_max.
/// Invariant: phi(n+1) = phi(n) + interval(n+1); phi nondecreasing.
struct CountTable {
    std::vector<CountRow> rows;
};

/// The subsemigroup of Q_+ generated by a finite set of positive rationals
/// under addition (nonempty sums only, so 0 is not a member). Membership and
/// counting run on a lazily grown reachability table over the 1/D grid,
/// D = lcm of the generator denominators.
class Semigroup {
public:
    explicit Semigroup(std::vector<Rational> generators);

    const std::vector<Rational>& generators() const { return generators_; }
    /// Smallest generator; every element is >= this.
    const Rational& min_generator() const { return s0_; }
    const Int& scale() const { return lattice_.scale(); }

    /// Membership of x. x <= 0 is an input error; x off the 1/D grid is
    /// simply not a member.
    bool contains(const Rational& x);

    /// Generator multiplicities witnessing x as a member, aligned with
    /// generators(); nullopt when x is not a member.
    std::optional<std::vector<std::int64_t>> decompose(const Rational& x);

    /// Elements in the open interval (0, bound), strictly increasing.
    std::vector<Rational> enumerate(const Rational& bound);

    /// phi(n) = |S cap (0, n)|; the endpoint n is excluded even when n is a
    /// member.
    std::int64_t phi(std::int64_t n);

    /// |S cap (0, x)| for rational x.
    std::int64_t count_below(const Rational& x);

    /// |S cap [x-1, x)|, half-open.
    std::int64_t interval_count(const Rational& x);

    /// Elements of S cap (0, bound] not expressible as a sum of two
    /// elements. When every input generator is <= bound this is the unique
    /// minimal generating system.
    std::vector<Rational> minimal_generators(const Rational& bound);

    /// Rows for n = 1..n_max. threads > 1 splits the row range after the
    /// table is built; the result does not depend on the split.
    CountTable build_count_table(std::int64_t n_max, int threads = 1);

private:
    std::vector<Rational> generators_;
    Rational s0_;
    ScaledLattice lattice_;

    // Largest slot strictly below the rational x, or -1.
    std::int64_t slot_strictly_below(const Rational& x) const;
};

std::string to_csv(const CountTable& table);

}  // namespace semigrowth
