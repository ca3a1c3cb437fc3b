#include "semigrowth/numeric_core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>

namespace semigrowth {

Int common_denominator(const std::vector<Rational>& values) {
    Int d = 1;
    for (const Rational& v : values) d = boost::multiprecision::lcm(d, v.denominator());
    return d;
}

Rational cyclic_group_generator(const std::vector<Rational>& values) {
    if (values.empty())
        throw std::invalid_argument("group generator of an empty value set");
    Int d = common_denominator(values);
    Int g = 0;
    for (const Rational& v : values) {
        if (v.is_zero())
            throw std::invalid_argument("group generator with a zero value");
        Int scaled = v.numerator() * (d / v.denominator());
        g = boost::multiprecision::gcd(g, scaled);
    }
    return Rational(g, d);
}

Int binomial(const Int& n, int k) {
    if (k < 0 || n < k) return 0;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - (k - i);
        result /= i;  // exact: result is binomial(n-k+i, i) after this step
    }
    return result;
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int int_pow(const Int& base, unsigned long exponent) {
    Int acc = 1;
    Int b = base;
    while (exponent > 0) {
        if (exponent & 1UL) acc *= b;
        b *= b;
        exponent >>= 1UL;
    }
    return acc;
}

ScaledLattice::ScaledLattice(Int scale, std::vector<std::int64_t> scaled_gens)
    : scale_(std::move(scale)), gens_(std::move(scaled_gens)) {
    if (scale_ <= 0) throw std::invalid_argument("lattice scale must be positive");
    if (gens_.empty()) throw std::invalid_argument("lattice needs at least one generator");
    for (std::int64_t g : gens_)
        if (g <= 0) throw std::invalid_argument("scaled generators must be positive");
    witness_.assign(1, kEmptySum);
    prefix_.assign(1, 0);
}

void ScaledLattice::ensure(std::int64_t max_slot) {
    if (max_slot < 0) return;
    if (max_slot >= kMaxSlots)
        throw std::length_error("lattice table would exceed the slot cap");
    std::size_t need = static_cast<std::size_t>(max_slot) + 1;
    if (need <= witness_.size()) return;
    std::size_t grown = witness_.size();
    while (grown < need) grown *= 2;
    std::size_t old = witness_.size();
    witness_.resize(grown, kUnreached);
    prefix_.resize(grown, 0);
    fill(old, grown);
}

void ScaledLattice::fill(std::size_t from, std::size_t to) {
    for (std::size_t s = from; s < to; ++s) {
        std::int64_t slot = static_cast<std::int64_t>(s);
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            std::int64_t back = slot - gens_[i];
            if (back < 0) continue;
            std::int32_t w = witness_[static_cast<std::size_t>(back)];
            if (w != kUnreached) {
                witness_[s] = static_cast<std::int32_t>(i);
                break;
            }
        }
        prefix_[s] = prefix_[s - 1] + (witness_[s] != kUnreached ? 1 : 0);
    }
}

bool ScaledLattice::is_member(std::int64_t slot) {
    if (slot < 0) return false;
    if (slot == 0) return false;  // positive elements only
    ensure(slot);
    return witness_[static_cast<std::size_t>(slot)] != kUnreached;
}

std::optional<std::vector<std::int64_t>> ScaledLattice::decompose(std::int64_t slot) {
    if (slot <= 0) return std::nullopt;
    ensure(slot);
    if (witness_[static_cast<std::size_t>(slot)] == kUnreached) return std::nullopt;
    std::vector<std::int64_t> counts(gens_.size(), 0);
    std::int64_t s = slot;
    while (s > 0) {
        std::int32_t i = witness_[static_cast<std::size_t>(s)];
        counts[static_cast<std::size_t>(i)] += 1;
        s -= gens_[static_cast<std::size_t>(i)];
    }
    return counts;
}

std::int64_t ScaledLattice::count_upto(std::int64_t slot) {
    if (slot <= 0) return 0;
    ensure(slot);
    return prefix_[static_cast<std::size_t>(slot)];
}

std::int64_t ScaledLattice::count_in(std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return 0;
    return count_upto(hi - 1) - count_upto(lo - 1);
}

std::vector<std::int64_t> ScaledLattice::members_upto(std::int64_t max_slot) {
    std::vector<std::int64_t> out;
    if (max_slot <= 0) return out;
    ensure(max_slot);
    for (std::int64_t s = 1; s <= max_slot; ++s)
        if (witness_[static_cast<std::size_t>(s)] != kUnreached) out.push_back(s);
    return out;
}

std::optional<std::int64_t> ScaledLattice::slot_of(const Rational& value) const {
    Int scaled_num = value.numerator() * scale_;
    if (scaled_num % value.denominator() != 0) return std::nullopt;
    Int slot = scaled_num / value.denominator();
    if (slot < 0 || slot >= kMaxSlots)
        throw std::length_error("value outside the representable slot range");
    return static_cast<std::int64_t>(slot);
}

}  // namespace semigrowth
