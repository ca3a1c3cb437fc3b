#pragma once

#include "semigrowth/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace semigrowth {

/// Least common multiple of the denominators; 1 for an empty list.
Int common_denominator(const std::vector<Rational>& values);

/// Generator of the subgroup of (Q,+) generated by the values: the positive
/// rational g with <values> = gZ. Values must be nonzero; empty list is
/// rejected (the trivial group has no generator).
Rational cyclic_group_generator(const std::vector<Rational>& values);

/// n over k with exact integers; zero when k < 0 or n < k.
Int binomial(const Int& n, int k);

Int factorial(int n);

Int int_pow(const Int& base, unsigned long exponent);

/// Additive-reachability table over the integer grid obtained by scaling a
/// rational generating set to a common denominator. Slot s represents the
/// value s/scale. Reachability means s is a sum of generators with
/// nonnegative integer multiplicities (slot 0 via the empty sum). The table
/// grows lazily by doubling; the DP only looks backward, so extending it
/// never invalidates earlier slots.
class ScaledLattice {
public:
    /// scaled_gens are the generator values times the scale; all must be > 0.
    ScaledLattice(Int scale, std::vector<std::int64_t> scaled_gens);

    const Int& scale() const { return scale_; }
    const std::vector<std::int64_t>& scaled_generators() const { return gens_; }

    /// Extends the table so every slot in [0, max_slot] is computed.
    void ensure(std::int64_t max_slot);

    /// True when slot/scale is a sum of generators (slot 0 counts: empty sum).
    bool is_member(std::int64_t slot);

    /// Multiplicity vector (one entry per generator) witnessing membership,
    /// or nullopt when the slot is unreachable.
    std::optional<std::vector<std::int64_t>> decompose(std::int64_t slot);

    /// Number of reachable slots s with 1 <= s <= slot (slot 0 excluded: the
    /// semigroup here is the positive elements).
    std::int64_t count_upto(std::int64_t slot);

    /// Number of reachable slots s with lo <= s < hi, both clamped to >= 1.
    std::int64_t count_in(std::int64_t lo, std::int64_t hi);

    /// Reachable slots s with 1 <= s <= max_slot, ascending.
    std::vector<std::int64_t> members_upto(std::int64_t max_slot);

    /// Slot of a rational value, or nullopt when value*scale is not integral
    /// (such values are never members).
    std::optional<std::int64_t> slot_of(const Rational& value) const;

    static constexpr std::int64_t kMaxSlots = std::int64_t(1) << 24;

private:
    Int scale_;
    std::vector<std::int64_t> gens_;
    // Per slot: kUnreached, or the index of one generator that steps back to
    // a reachable slot. Slot 0 holds kEmptySum.
    std::vector<std::int32_t> witness_;
    // prefix_[s] = number of reachable slots in [1, s].
    std::vector<std::int64_t> prefix_;

    static constexpr std::int32_t kUnreached = -1;
    static constexpr std::int32_t kEmptySum = -2;

    void fill(std::size_t from, std::size_t to);
};

}  // namespace semigrowth
