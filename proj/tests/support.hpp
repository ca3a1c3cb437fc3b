#pragma once

#include "semigrowth/rational.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

// Shared by the property suite and the acceptance gate: an oracle for
// semigroup enumeration that shares no code with the lattice DP, plus the
// seeded generator-set sampler both sides replay.
namespace testsupport {

using semigrowth::Int;
using semigrowth::Rational;

namespace detail {

inline void sums_rec(const std::vector<Rational>& gens, std::size_t idx, const Rational& sum,
                     const Rational& bound, std::set<Rational>& out) {
    if (idx == gens.size()) {
        if (!sum.is_zero()) out.insert(sum);
        return;
    }
    // Coefficient for gens[idx] runs 0, 1, 2, ... while the partial sum stays
    // below the bound; generators are positive, so nothing is lost by pruning.
    Rational acc = sum;
    while (acc < bound) {
        sums_rec(gens, idx + 1, acc, bound, out);
        acc += gens[idx];
    }
}

}  // namespace detail

/// Every nonempty nonnegative-integer combination of the generators below
/// `bound`, by exhaustive coefficient vectors. Ascending (std::set order).
inline std::vector<Rational> oracle_enumerate(const std::vector<Rational>& gens,
                                              const Rational& bound) {
    std::set<Rational> out;
    detail::sums_rec(gens, 0, Rational(0), bound, out);
    return std::vector<Rational>(out.begin(), out.end());
}

/// Number of coefficient vectors the oracle would visit, for feasibility.
inline Int oracle_vector_count(const std::vector<Rational>& gens, const Rational& bound) {
    Int combos = 1;
    for (const Rational& g : gens) combos *= (bound / g).floor() + 1;
    return combos;
}

/// Seeded random generator set: 1..4 positive rationals with denominators
/// <= 8 and values <= 10, redrawn until the oracle is affordable under the
/// given bound. Deterministic per seed.
inline std::vector<Rational> random_generators(std::uint32_t seed, const Rational& bound) {
    std::mt19937 rng(seed);
    for (;;) {
        std::size_t k = 1 + rng() % 4;
        std::vector<Rational> gens;
        for (std::size_t i = 0; i < k; ++i) {
            long long den = 1 + static_cast<long long>(rng() % 8);
            long long num = 1 + static_cast<long long>(rng() % (10 * den));
            gens.emplace_back(Int(num), Int(den));
        }
        if (oracle_vector_count(gens, bound) <= 2'000'000) return gens;
    }
}

}  // namespace testsupport
