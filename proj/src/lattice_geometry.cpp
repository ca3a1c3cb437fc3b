#include "semigrowth/lattice_geometry.hpp"

#include "semigrowth/numeric_core.hpp"

#include <functional>
#include <stdexcept>

namespace semigrowth {

namespace {

void validate_dimension(std::size_t d) {
    if (d < 1 || d > 4)
        throw std::invalid_argument("dimension must be between 1 and 4");
}

}  // namespace

Int count_wedge(const WedgeSystem& sys) {
    validate_dimension(sys.weights.size());
    for (const Rational& w : sys.weights)
        if (w < Rational(1))
            throw std::invalid_argument("wedge weights must be >= 1");
    if (sys.alpha.is_negative())
        throw std::invalid_argument("wedge offset must be nonnegative");
    if (sys.n < 1) throw std::invalid_argument("wedge threshold must be >= 1");

    Rational budget = Rational(sys.n) - sys.alpha;
    Int total = 0;
    // rec walks coordinates 2..d; the base case solves the first coordinate's
    // admissible interval exactly.
    std::function<void(std::size_t, Rational, Rational)> rec =
        [&](std::size_t idx, Rational weighted_tail, Rational plain_tail) {
            Rational room = budget - plain_tail;  // plain sum must stay below this
            if (!(room > Rational(0))) return;
            if (idx == sys.weights.size()) {
                Int hi = room.ceil() - 1;  // n_1 < room
                Rational needed = budget - weighted_tail;
                Int lo = 0;
                if (needed > Rational(0)) lo = (needed / sys.weights[0]).ceil();
                if (hi >= lo) total += hi - lo + 1;
                return;
            }
            Int max_c = room.ceil() - 1;
            for (Int c = 0; c <= max_c; ++c)
                rec(idx + 1, weighted_tail + Rational(c) * sys.weights[idx],
                    plain_tail + Rational(c));
        };
    rec(1, Rational(0), Rational(0));
    return total;
}

Rational simplex_volume(const Simplex& s) {
    validate_dimension(s.intercepts.size());
    Rational volume(Int(1), factorial(static_cast<int>(s.intercepts.size())));
    for (const Rational& c : s.intercepts) {
        if (!c.is_positive())
            throw std::invalid_argument("simplex intercepts must be positive");
        volume *= c;
    }
    return volume;
}

Int ehrhart_count(const Simplex& s, std::int64_t n) {
    validate_dimension(s.intercepts.size());
    for (const Rational& c : s.intercepts)
        if (!c.is_positive())
            throw std::invalid_argument("simplex intercepts must be positive");
    if (n < 1) throw std::invalid_argument("dilation factor must be >= 1");

    Int total = 0;
    // used accumulates sum z_i / c_i over the tail coordinates.
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t idx, Rational used) {
        Rational room = Rational(n) - used;
        if (room.is_negative()) return;
        if (idx == s.intercepts.size()) {
            total += (room * s.intercepts[0]).floor() + 1;  // z_1 = 0..floor
            return;
        }
        Int max_z = (room * s.intercepts[idx]).floor();
        for (Int z = 0; z <= max_z; ++z)
            rec(idx + 1, used + Rational(z) / s.intercepts[idx]);
    };
    rec(1, Rational(0));
    return total;
}

Rational ehrhart_ratio(const Simplex& s, std::int64_t n) {
    return Rational(ehrhart_count(s, n),
                    int_pow(Int(n), static_cast<unsigned long>(s.intercepts.size())));
}

DeviationFloor deviation_floor(const std::vector<Rational>& weights, const Rational& e) {
    validate_dimension(weights.size());
    if (!e.is_positive()) throw std::invalid_argument("multiplicity must be positive");
    Rational product(1);
    for (const Rational& w : weights) {
        if (!w.is_positive())
            throw std::invalid_argument("weights must be positive");
        product *= w;
    }
    DeviationFloor floor;
    floor.weights_distinct = true;
    for (std::size_t i = 0; i < weights.size() && floor.weights_distinct; ++i)
        for (std::size_t j = i + 1; j < weights.size(); ++j)
            if (weights[i] == weights[j]) {
                floor.weights_distinct = false;
                break;
            }
    floor.value = e / Rational(factorial(static_cast<int>(weights.size()))) *
                  (Rational(1) - product.reciprocal());
    return floor;
}

}  // namespace semigrowth
