#pragma once

#include "semigrowth/plane_valuation.hpp"
#include "semigrowth/rational.hpp"
#include "semigrowth/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semigrowth {

/// Length of R/m^n for a regular local ring of dimension d: C(n+d-1, d).
Int hilbert_regular_length(std::int64_t n, int d);

/// Length of R/m^n for the plane cusp (1-dimensional, multiplicity 2): 2n-1.
Int hilbert_cusp_length(std::int64_t n);

struct BoundCheck {
    std::string name;
    std::string predicate;  // human-readable form of the inequality
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    bool pass = false;
    std::optional<std::int64_t> first_violation;
    std::string note;
};

struct FitModel {
    std::string selected;  // "power" or "nlogn", by smaller residual
    double exponent = 0;   // power-law slope of log phi vs log n
    double band_lo = 0;    // exponent - 0.1
    double band_hi = 0;    // exponent + 0.1
    double power_sse = 0;
    double nlogn_sse = 0;
    double nlogn_coefficient = 0;  // c in phi ~ c * n * log10(n)
    std::vector<std::int64_t> sample_points;
};

struct GrowthReport {
    CountTable table;
    std::vector<BoundCheck> bounds;
    std::optional<FitModel> model;
};

/// Verifies phi(n) < C(n+d-1, d) for 1 <= n <= n_max. Requires the smallest
/// generator to be 1. A violation is recorded in the report, not thrown: it
/// certifies the semigroup cannot live on a d-dimensional regular local ring.
GrowthReport check_bounds(Semigroup& s, int d, std::int64_t n_max, int threads = 1);

/// Verifies the family's proved two-sided phi bounds over the stated
/// validity range, as exact rational or certified inequalities:
///   exf1:       36 phi^2 > n^3 (n >= 2) and 9 phi^2 < 16 n^3
///   power(p,q): (2 s^2 phi)^q > n^(p+q) and phi^q < 3^q n^(p+q) (n >= r)
///   quadratic:  8 phi > n^2 (n >= 4) and phi < C(n+1, 2)
///   nlog:       4 phi > n log10(n) and phi < 2 n log10(n) (n >= 10),
///               decided by certified floating point (margin 1e-6) with an
///               exact big-integer power comparison as fallback.
/// levels < 0 picks the truncation covering n_max; an explicit truncation
/// too small for n_max is an input error naming the required level.
GrowthReport check_example_inequalities(const ExampleFamily& family, std::int64_t n_max,
                                        int levels = -1, int threads = 1);

/// Finite surrogate of the ratio bound phi(n)/n^d < (e/d!) / (s_1...s_d),
/// where s_1..s_d are the d smallest elements of the semigroup. Only the
/// sampled range is certified; the note says so.
GrowthReport check_growth_ratio_bound(Semigroup& s, int d, const Rational& e,
                                      std::int64_t n_lo, std::int64_t n_hi,
                                      int threads = 1);

/// psi(n) = C(n+1, 2) - 1 - phi(n), the deviation of phi from the regular
/// 2-dimensional length. Requires smallest generator 1 and at least one
/// non-integer generator (otherwise the semigroup is N, not a 2-dimensional
/// example). The convention pins the hand count psi(2) = 1 for the first
/// family; the alternative off-by-one convention differs only by the
/// constant 1 and is noted in the reports.
Int deviation_psi(Semigroup& s, std::int64_t n);

/// The liminf floor for psi(n)/n^2: (1/2)(1 - 1/a1) with a1 the smallest
/// non-integer element (the second minimal generator).
Rational psi_floor(Semigroup& s);

struct PsiRow {
    std::int64_t n = 0;
    Int psi;
    Rational ratio;  // psi(n) / n^2
};

struct PsiReport {
    Rational second_generator;  // a1
    Rational floor_value;       // (1/2)(1 - 1/a1)
    std::vector<PsiRow> rows;
    std::vector<BoundCheck> bounds;
};

/// psi rows for 1..n_max; when check_lo >= 1, also checks
/// psi(n)/n^2 > floor - margin exactly for check_lo <= n <= check_hi.
PsiReport psi_report(Semigroup& s, std::int64_t n_max, std::int64_t check_lo = 0,
                     std::int64_t check_hi = 0,
                     const Rational& margin = Rational(Int(1), Int(20)));

/// Fits log phi against log n on the dyadic points 2^j of the upper half of
/// the table's range, and against the n*log10(n) model; selects the smaller
/// residual. Requires the table to reach n = 256. Verdicts that matter are
/// never derived from the fit; it only names the apparent growth regime.
FitModel fit_growth(const CountTable& table);

struct SeedCount {
    std::int64_t n = 0;
    Int count;     // |T cap (0, n)|
    Int required;  // n^n
    bool ok = false;
};

struct CounterexampleResult {
    int levels = 0;
    std::vector<Rational> seeds;  // T, ascending
    std::vector<SeedCount> seed_counts;
    CountTable table;  // phi over (0, n_max) for U = <T>
    std::vector<BoundCheck> bound_checks;  // vs C(n+d-1,d), d = 1..3
};

/// Builds the seed set T = {1} plus, for each k = 2..levels, the k^k points
/// k - j/2^(m_k) with 2^(m_k) > k^k, so |T cap (0,n)| >= n^n at the integer
/// checkpoints. The semigroup U generated by T then violates every
/// d-dimensional regular length bound for d <= 3 at small n, which the
/// returned bound checks record. 2 <= levels <= 5; n_max defaults to
/// 2 * levels.
CounterexampleResult counterexample_semigroup(int levels, std::int64_t n_max = 0);

}  // namespace semigrowth
