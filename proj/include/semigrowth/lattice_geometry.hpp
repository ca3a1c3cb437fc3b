#pragma once

#include "semigrowth/rational.hpp"

#include <cstdint>
#include <vector>

namespace semigrowth {

/// The two-inequality system counted by count_wedge: tuples in N^d with
/// weighted sum at least n - alpha but plain coordinate sum strictly below
/// n - alpha. Weights must be >= 1; when every weight is 1 the constraints
/// contradict each other and the count is zero.
struct WedgeSystem {
    std::vector<Rational> weights;
    Rational alpha;
    std::int64_t n = 0;
};

/// Exact number of tuples (n_1,...,n_d) in N^d with
///   w_1 n_1 + ... + w_d n_d >= n - alpha   and   n_1 + ... + n_d < n - alpha.
/// Iterates the last d-1 coordinates and solves the first one's admissible
/// interval in exact rationals. d <= 4.
Int count_wedge(const WedgeSystem& sys);

/// Simplex with vertices at the origin and at distance c_i along each
/// coordinate axis.
struct Simplex {
    std::vector<Rational> intercepts;
};

/// (1/d!) c_1 ... c_d.
Rational simplex_volume(const Simplex& s);

/// Number of integer points z in N^d with sum z_i / c_i <= n, i.e. points of
/// the n-fold dilation of the closed simplex. d <= 4.
Int ehrhart_count(const Simplex& s, std::int64_t n);

/// ehrhart_count / n^d; converges to the volume.
Rational ehrhart_ratio(const Simplex& s, std::int64_t n);

struct DeviationFloor {
    Rational value;
    bool weights_distinct = false;  // the floor is meaningful only when true
};

/// The liminf floor (e/d!)(1 - 1/(w_1...w_d)) for the deviation ratio
/// psi(n)/n^d. Repeated weights degenerate the floor; the flag reports it
/// rather than rejecting the input.
DeviationFloor deviation_floor(const std::vector<Rational>& weights, const Rational& e);

}  // namespace semigrowth
