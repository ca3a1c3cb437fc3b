#include "semigrowth/semigroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace semigrowth {

namespace {

std::vector<Rational> validated(std::vector<Rational> generators) {
    if (generators.empty())
        throw std::invalid_argument("semigroup needs at least one generator");
    for (const Rational& g : generators)
        if (!g.is_positive())
            throw std::invalid_argument("semigroup generators must be positive");
    return generators;
}

ScaledLattice make_lattice(const std::vector<Rational>& generators) {
    Int d = common_denominator(generators);
    std::vector<std::int64_t> scaled;
    scaled.reserve(generators.size());
    for (const Rational& g : generators) {
        Int s = g.numerator() * (d / g.denominator());
        if (s > std::numeric_limits<std::int64_t>::max())
            throw std::length_error("scaled generator exceeds the slot range");
        scaled.push_back(static_cast<std::int64_t>(s));
    }
    return ScaledLattice(d, std::move(scaled));
}

}  // namespace

Semigroup::Semigroup(std::vector<Rational> generators)
    : generators_(validated(std::move(generators))),
      s0_(*std::min_element(generators_.begin(), generators_.end())),
      lattice_(make_lattice(generators_)) {}

bool Semigroup::contains(const Rational& x) {
    if (!x.is_positive())
        throw std::invalid_argument("membership is defined for positive values only");
    auto slot = lattice_.slot_of(x);
    if (!slot) return false;
    return lattice_.is_member(*slot);
}

std::optional<std::vector<std::int64_t>> Semigroup::decompose(const Rational& x) {
    if (!x.is_positive())
        throw std::invalid_argument("membership is defined for positive values only");
    auto slot = lattice_.slot_of(x);
    if (!slot) return std::nullopt;
    return lattice_.decompose(*slot);
}

std::int64_t Semigroup::slot_strictly_below(const Rational& x) const {
    // Largest slot s with s/D < x: one below x*D when that is integral,
    // floor(x*D) otherwise.
    Rational scaled = x * Rational(lattice_.scale());
    Int hi = scaled.is_integer() ? Int(scaled.numerator() - 1) : scaled.floor();
    if (hi < 0) return -1;
    if (hi >= ScaledLattice::kMaxSlots)
        throw std::length_error("count bound exceeds the slot range");
    return static_cast<std::int64_t>(hi);
}

std::vector<Rational> Semigroup::enumerate(const Rational& bound) {
    if (!bound.is_positive())
        throw std::invalid_argument("enumeration bound must be positive");
    std::vector<Rational> out;
    for (std::int64_t slot : lattice_.members_upto(slot_strictly_below(bound)))
        out.emplace_back(Int(slot), lattice_.scale());
    return out;
}

std::int64_t Semigroup::phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("phi is defined for n >= 1");
    return count_below(Rational(n));
}

std::int64_t Semigroup::count_below(const Rational& x) {
    if (!x.is_positive()) return 0;
    return lattice_.count_upto(slot_strictly_below(x));
}

std::int64_t Semigroup::interval_count(const Rational& x) {
    if (!x.is_positive())
        throw std::invalid_argument("interval count is defined for positive x");
    std::int64_t hi = slot_strictly_below(x);
    // Smallest slot s with s/D >= x-1, clamped to 1.
    Rational lo_scaled = (x - Rational(1)) * Rational(lattice_.scale());
    Int lo_int = lo_scaled.ceil();
    std::int64_t lo = lo_int < 1 ? 1 : static_cast<std::int64_t>(lo_int);
    if (hi < lo) return 0;
    return lattice_.count_upto(hi) - lattice_.count_upto(lo - 1);
}

std::vector<Rational> Semigroup::minimal_generators(const Rational& bound) {
    for (const Rational& g : generators_)
        if (g > bound)
            throw std::invalid_argument(
                "minimal_generators bound must cover every input generator");
    // Members in (0, bound]: the strict-below slots plus the bound itself.
    std::int64_t hi = slot_strictly_below(bound);
    if (auto b = lattice_.slot_of(bound); b && lattice_.is_member(*b))
        hi = *b;
    std::vector<std::int64_t> members = lattice_.members_upto(hi);
    std::vector<Rational> out;
    for (std::int64_t m : members) {
        bool splittable = false;
        for (std::int64_t a : members) {
            if (a * 2 > m) break;
            if (lattice_.is_member(m - a)) {
                splittable = true;
                break;
            }
        }
        if (!splittable) out.emplace_back(Int(m), lattice_.scale());
    }
    return out;
}

CountTable Semigroup::build_count_table(std::int64_t n_max, int threads) {
    if (n_max < 1) throw std::invalid_argument("count table needs n_max >= 1");
    if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
    // Build the lattice once; afterwards every per-row query is a read.
    std::int64_t top = slot_strictly_below(Rational(n_max));
    lattice_.ensure(top);

    CountTable table;
    table.rows.assign(static_cast<std::size_t>(n_max), CountRow{});
    auto fill_rows = [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t n = lo; n < hi; ++n)
            table.rows[static_cast<std::size_t>(n - 1)] =
                CountRow{n, phi(n), interval_count(Rational(n))};
    };
    if (threads == 1 || n_max < 2 * threads) {
        fill_rows(1, n_max + 1);
        return table;
    }
    std::vector<std::thread> pool;
    std::int64_t chunk = (n_max + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::int64_t lo = 1 + t * chunk;
        std::int64_t hi = std::min<std::int64_t>(lo + chunk, n_max + 1);
        if (lo > n_max) break;
        pool.emplace_back(fill_rows, lo, hi);
    }
    for (std::thread& t : pool) t.join();
    return table;
}

std::string to_csv(const CountTable& table) {
    std::string out = "n,phi,interval";
    for (const CountRow& row : table.rows) {
        out += '\n';
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.phi);
        out += ',';
        out += std::to_string(row.interval);
    }
    out += '\n';
    return out;
}

}  // namespace semigrowth
