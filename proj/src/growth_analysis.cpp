#include "semigrowth/growth_analysis.hpp"

#include "semigrowth/numeric_core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

namespace semigrowth {

namespace {

BoundCheck scan_bound(std::string name, std::string predicate, std::int64_t n_lo,
                      std::int64_t n_hi, const std::function<bool(std::int64_t)>& holds,
                      std::string note) {
    BoundCheck check;
    check.name = std::move(name);
    check.predicate = std::move(predicate);
    check.n_lo = n_lo;
    check.n_hi = n_hi;
    check.note = std::move(note);
    check.pass = true;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        if (!holds(n)) {
            check.pass = false;
            check.first_violation = n;
            break;
        }
    }
    return check;
}

std::int64_t row_phi(const CountTable& table, std::int64_t n) {
    return table.rows[static_cast<std::size_t>(n - 1)].phi;
}

// Sign of a - n*log10(n) when the floating-point margin is conclusive.
std::optional<bool> certainly_greater(double a, std::int64_t n) {
    double t = static_cast<double>(n) * std::log10(static_cast<double>(n));
    double margin = 1e-6 * std::max(1.0, std::abs(t));
    if (a > t + margin) return true;
    if (a < t - margin) return false;
    return std::nullopt;
}

void validate_two_dimensional(Semigroup& s) {
    if (s.min_generator() != Rational(1))
        throw std::invalid_argument("the smallest generator must be 1");
    for (const Rational& g : s.generators())
        if (!g.is_integer()) return;
    throw std::invalid_argument(
        "all generators are integers: the semigroup is N, not a 2-dimensional example");
}

Rational second_minimal_generator(const Semigroup& s) {
    // The smallest non-integer element; sums always exceed their non-integer
    // part, so it is the smallest non-integer generator.
    std::optional<Rational> best;
    for (const Rational& g : s.generators())
        if (!g.is_integer() && (!best || g < *best)) best = g;
    if (!best)
        throw std::invalid_argument(
            "all generators are integers: the semigroup is N, not a 2-dimensional example");
    return *best;
}

}  // namespace

Int hilbert_regular_length(std::int64_t n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("length needs n >= 0 and d >= 1");
    return binomial(Int(n) + (d - 1), d);
}

Int hilbert_cusp_length(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("length needs n >= 1");
    return Int(2) * n - 1;
}

GrowthReport check_bounds(Semigroup& s, int d, std::int64_t n_max, int threads) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (s.min_generator() != Rational(1))
        throw std::invalid_argument("the smallest generator must be 1");
    GrowthReport report;
    report.table = s.build_count_table(n_max, threads);

    Int min_margin;
    std::int64_t min_margin_n = 0;
    auto holds = [&](std::int64_t n) {
        Int margin = hilbert_regular_length(n, d) - row_phi(report.table, n);
        if (min_margin_n == 0 || margin < min_margin) {
            min_margin = margin;
            min_margin_n = n;
        }
        return margin > 0;
    };
    BoundCheck check = scan_bound(
        "phi_below_regular_length_d" + std::to_string(d),
        "phi(n) < C(n+" + std::to_string(d - 1) + "," + std::to_string(d) + ")", 1, n_max,
        holds, "");
    check.note = check.pass
                     ? "smallest margin " + min_margin.str() + " at n = " +
                           std::to_string(min_margin_n)
                     : "violation certifies non-realizability on a " + std::to_string(d) +
                           "-dimensional regular local ring";
    report.bounds.push_back(std::move(check));
    return report;
}

GrowthReport check_example_inequalities(const ExampleFamily& family, std::int64_t n_max,
                                        int levels, int threads) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    int required = family.levels_for_bound(Int(n_max));
    if (levels < 0) levels = required;
    if (levels < required)
        throw std::invalid_argument("truncation level " + std::to_string(levels) +
                                    " is too small for n_max; need level " +
                                    std::to_string(required));
    Semigroup s(family.values(levels));
    GrowthReport report;
    report.table = s.build_count_table(n_max, threads);
    const CountTable& t = report.table;
    const std::string surrogate = "finite-range surrogate of the asymptotic claim";

    switch (family.tag) {
        case FamilyTag::exf1: {
            // An empty scan range (n_max below the bound's validity) passes
            // vacuously rather than sampling where the claim does not apply.
            report.bounds.push_back(scan_bound(
                "exf1_lower", "36*phi(n)^2 > n^3", 2, n_max,
                [&](std::int64_t n) {
                    Int phi = row_phi(t, n);
                    return Int(36) * phi * phi > int_pow(Int(n), 3);
                },
                surrogate + "; exact square form of phi(n) > n*sqrt(n)/6"));
            report.bounds.push_back(scan_bound(
                "exf1_upper", "9*phi(n)^2 < 16*n^3", 1, n_max,
                [&](std::int64_t n) {
                    Int phi = row_phi(t, n);
                    return Int(9) * phi * phi < Int(16) * int_pow(Int(n), 3);
                },
                surrogate + "; exact square form of phi(n) < 4*n*sqrt(n)/3"));
            break;
        }
        case FamilyTag::power: {
            unsigned long p = static_cast<unsigned long>(family.p);
            unsigned long q = static_cast<unsigned long>(family.q);
            Int r = int_pow(2, q);
            Int s2 = int_pow(2, 2 * p);  // s^2
            std::int64_t lo = static_cast<std::int64_t>(r);
            report.bounds.push_back(scan_bound(
                "power_lower", "(2*s^2*phi(n))^q > n^(p+q)", lo, n_max,
                [&](std::int64_t n) {
                    Int phi = row_phi(t, n);
                    return int_pow(Int(2) * s2 * phi, q) > int_pow(Int(n), p + q);
                },
                surrogate + "; exact power form of phi(n) > n^(1+p/q)/(2*s^2)"));
            report.bounds.push_back(scan_bound(
                "power_upper", "phi(n)^q < 3^q*n^(p+q)", lo, n_max,
                [&](std::int64_t n) {
                    Int phi = row_phi(t, n);
                    return int_pow(phi, q) < int_pow(3, q) * int_pow(Int(n), p + q);
                },
                surrogate + "; exact power form of phi(n) < 3*n^(1+p/q)"));
            break;
        }
        case FamilyTag::quadratic: {
            report.bounds.push_back(scan_bound(
                "quadratic_lower", "8*phi(n) > n^2", 4, n_max,
                [&](std::int64_t n) {
                    return Int(8) * row_phi(t, n) > int_pow(Int(n), 2);
                },
                surrogate));
            report.bounds.push_back(scan_bound(
                "quadratic_upper", "phi(n) < C(n+1,2)", 1, n_max,
                [&](std::int64_t n) {
                    return Int(row_phi(t, n)) < hilbert_regular_length(n, 2);
                },
                "the 2-dimensional regular length bound"));
            break;
        }
        case FamilyTag::nlog: {
            std::int64_t lo = 10;
            report.bounds.push_back(scan_bound(
                "nlog_lower", "4*phi(n) > n*log10(n)", lo, n_max,
                [&](std::int64_t n) {
                    std::int64_t phi = row_phi(t, n);
                    if (auto sign = certainly_greater(4.0 * static_cast<double>(phi), n))
                        return *sign;
                    // Equivalent exact form: 10^(4 phi) > n^n.
                    return int_pow(Int(10), static_cast<unsigned long>(4 * phi)) >
                           int_pow(Int(n), static_cast<unsigned long>(n));
                },
                surrogate + "; certified float, exact power fallback"));
            report.bounds.push_back(scan_bound(
                "nlog_upper", "phi(n) < 2*n*log10(n)", lo, n_max,
                [&](std::int64_t n) {
                    std::int64_t phi = row_phi(t, n);
                    if (auto sign = certainly_greater(static_cast<double>(phi) / 2.0, n))
                        return !*sign;
                    // Equivalent exact form: 10^phi < n^(2n).
                    return int_pow(Int(10), static_cast<unsigned long>(phi)) <
                           int_pow(Int(n), static_cast<unsigned long>(2 * n));
                },
                surrogate + "; certified float, exact power fallback"));
            break;
        }
    }
    return report;
}

GrowthReport check_growth_ratio_bound(Semigroup& s, int d, const Rational& e,
                                      std::int64_t n_lo, std::int64_t n_hi, int threads) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (!e.is_positive()) throw std::invalid_argument("multiplicity must be positive");
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("bad n range");

    // The d smallest elements lie in (0, d*s0 + 1).
    Rational window = Rational(d) * s.min_generator() + Rational(1);
    std::vector<Rational> smallest = s.enumerate(window);
    smallest.resize(static_cast<std::size_t>(d));
    Rational product(1);
    std::string elements;
    for (const Rational& x : smallest) {
        product *= x;
        if (!elements.empty()) elements += ",";
        elements += x.to_string();
    }
    Rational bound = e / (Rational(factorial(d)) * product);

    GrowthReport report;
    report.table = s.build_count_table(n_hi, threads);
    report.bounds.push_back(scan_bound(
        "ratio_below_limsup_bound",
        "phi(n)/n^" + std::to_string(d) + " < " + bound.to_string() + " (e = " +
            e.to_string() + ", smallest elements " + elements + ")",
        n_lo, n_hi,
        [&](std::int64_t n) {
            return Rational(Int(row_phi(report.table, n)), int_pow(Int(n), static_cast<unsigned long>(d))) < bound;
        },
        "finite-range surrogate: the limsup statement is certified only on the sampled range"));
    return report;
}

Int deviation_psi(Semigroup& s, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("psi is defined for n >= 1");
    validate_two_dimensional(s);
    return hilbert_regular_length(n, 2) - 1 - Int(s.phi(n));
}

Rational psi_floor(Semigroup& s) {
    Rational a1 = second_minimal_generator(s);
    return Rational(Int(1), Int(2)) * (Rational(1) - a1.reciprocal());
}

PsiReport psi_report(Semigroup& s, std::int64_t n_max, std::int64_t check_lo,
                     std::int64_t check_hi, const Rational& margin) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    validate_two_dimensional(s);
    PsiReport report;
    report.second_generator = second_minimal_generator(s);
    report.floor_value =
        Rational(Int(1), Int(2)) * (Rational(1) - report.second_generator.reciprocal());

    CountTable table = s.build_count_table(n_max);
    report.rows.reserve(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n) {
        PsiRow row;
        row.n = n;
        row.psi = hilbert_regular_length(n, 2) - 1 - Int(row_phi(table, n));
        row.ratio = Rational(row.psi, int_pow(Int(n), 2));
        report.rows.push_back(std::move(row));
    }

    if (check_lo >= 1) {
        if (check_hi < check_lo || check_hi > n_max)
            throw std::invalid_argument("bad psi check range");
        Rational threshold = report.floor_value - margin;
        report.bounds.push_back(scan_bound(
            "psi_ratio_above_floor",
            "psi(n)/n^2 > " + report.floor_value.to_string() + " - " + margin.to_string(),
            check_lo, check_hi,
            [&](std::int64_t n) {
                return report.rows[static_cast<std::size_t>(n - 1)].ratio > threshold;
            },
            "finite-range surrogate of the liminf floor"));
    }
    return report;
}

FitModel fit_growth(const CountTable& table) {
    if (table.rows.empty() || table.rows.back().n < 256)
        throw std::invalid_argument("growth fitting needs a table reaching n = 256");
    for (std::size_t i = 0; i < table.rows.size(); ++i)
        if (table.rows[i].n != static_cast<std::int64_t>(i) + 1)
            throw std::invalid_argument("growth fitting needs contiguous rows from n = 1");
    std::int64_t n_max = table.rows.back().n;

    int top = 0;
    while ((std::int64_t(1) << (top + 1)) <= n_max) ++top;
    int j_lo = (top + 1) / 2;

    std::vector<std::int64_t> ns;
    std::vector<double> xs, ys, zs;  // log n, log phi, log(n*log10 n)
    for (int j = j_lo; j <= top; ++j) {
        std::int64_t n = std::int64_t(1) << j;
        std::int64_t phi = row_phi(table, n);
        if (phi < 1) continue;
        ns.push_back(n);
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(static_cast<double>(phi)));
        zs.push_back(std::log(static_cast<double>(n) * std::log10(static_cast<double>(n))));
    }
    if (ns.size() < 2)
        throw std::invalid_argument("growth fitting needs at least two nonzero samples");

    std::size_t m = ns.size();
    double x_mean = 0, y_mean = 0;
    for (std::size_t i = 0; i < m; ++i) {
        x_mean += xs[i];
        y_mean += ys[i];
    }
    x_mean /= static_cast<double>(m);
    y_mean /= static_cast<double>(m);
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sxy += (xs[i] - x_mean) * (ys[i] - y_mean);
        sxx += (xs[i] - x_mean) * (xs[i] - x_mean);
    }
    double slope = sxy / sxx;
    double intercept = y_mean - slope * x_mean;
    double power_sse = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double r = ys[i] - (intercept + slope * xs[i]);
        power_sse += r * r;
    }

    double log_c = 0;
    for (std::size_t i = 0; i < m; ++i) log_c += ys[i] - zs[i];
    log_c /= static_cast<double>(m);
    double nlogn_sse = 0;
    for (std::size_t i = 0; i < m; ++i) {
        double r = ys[i] - (log_c + zs[i]);
        nlogn_sse += r * r;
    }

    FitModel model;
    model.selected = nlogn_sse < power_sse ? "nlogn" : "power";
    model.exponent = slope;
    model.band_lo = slope - 0.1;
    model.band_hi = slope + 0.1;
    model.power_sse = power_sse;
    model.nlogn_sse = nlogn_sse;
    model.nlogn_coefficient = std::exp(log_c);
    model.sample_points = std::move(ns);
    return model;
}

CounterexampleResult counterexample_semigroup(int levels, std::int64_t n_max) {
    if (levels < 2 || levels > 5)
        throw std::invalid_argument("counterexample levels must be between 2 and 5");
    if (n_max <= 0) n_max = 2 * levels;

    CounterexampleResult result;
    result.levels = levels;
    result.seeds.emplace_back(1);
    for (int k = 2; k <= levels; ++k) {
        std::int64_t kk = 1;
        for (int i = 0; i < k; ++i) kk *= k;
        int m = 0;
        while ((std::int64_t(1) << m) <= kk) ++m;
        Int denom = int_pow(2, static_cast<unsigned long>(m));
        // j descending keeps the seed list ascending: k - j/2^m.
        for (std::int64_t j = kk; j >= 1; --j)
            result.seeds.emplace_back(Int(k) * denom - j, denom);
    }

    Int cumulative = 1;  // the seed 1; the block for k lies inside (k-1, k)
    for (int n = 2; n <= levels; ++n) {
        std::int64_t kk = 1;
        for (int i = 0; i < n; ++i) kk *= n;
        cumulative += kk;
        SeedCount sc;
        sc.n = n;
        sc.count = cumulative;
        sc.required = int_pow(Int(n), static_cast<unsigned long>(n));
        sc.ok = sc.count >= sc.required;
        result.seed_counts.push_back(std::move(sc));
    }

    Semigroup u(result.seeds);
    result.table = u.build_count_table(n_max);
    for (int d = 1; d <= 3; ++d) {
        BoundCheck check = scan_bound(
            "phi_below_regular_length_d" + std::to_string(d),
            "phi(n) < C(n+" + std::to_string(d - 1) + "," + std::to_string(d) + ")", 1,
            n_max,
            [&](std::int64_t n) {
                return Int(row_phi(result.table, n)) < hilbert_regular_length(n, d);
            },
            "");
        check.note = check.pass ? "no violation in range"
                                : "violation shows the " + std::to_string(d) +
                                      "-dimensional regular bound fails for this semigroup";
        result.bound_checks.push_back(std::move(check));
    }
    return result;
}

}  // namespace semigrowth
