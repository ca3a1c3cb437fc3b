#include "semigrowth/plane_valuation.hpp"

#include "semigrowth/numeric_core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace semigrowth {

namespace {

// Certified members beyond the conductor are cross-checked on the
// reachability table only while it stays this small.
constexpr std::int64_t kVerifySlotCap = std::int64_t(1) << 20;

Int group_index_ratio(const Rational& prev_gen, const Rational& next_gen) {
    Rational ratio = prev_gen / next_gen;
    if (!ratio.is_integer() || !ratio.is_positive())
        throw std::logic_error("consecutive group generators have a non-integer ratio");
    return ratio.numerator();
}

// Membership oracle for the semigroup generated by a fixed prefix of values,
// combining three layers: points off the group grid are never members;
// on-grid points beyond conductor + 1 are members by the density argument;
// the finite region in between is decided by the reachability table, built
// only when actually needed (the prefix may contain values far beyond any
// buildable table).
class PrefixOracle {
public:
    PrefixOracle(const std::vector<Rational>* gens, Rational group_gen, Rational conductor)
        : gens_(gens), group_gen_(std::move(group_gen)), conductor_(std::move(conductor)) {}

    bool contains(const Rational& v) {
        if (!(v / group_gen_).is_integer()) return false;
        if (v <= conductor_ + Rational(1)) return table().contains(v);
        if (verifiable(v) && !table().contains(v))
            throw std::logic_error("density certificate contradicted by the table");
        return true;
    }

private:
    const std::vector<Rational>* gens_;
    Rational group_gen_;
    Rational conductor_;
    std::optional<Semigroup> table_;

    Semigroup& table() {
        if (!table_) table_.emplace(*gens_);
        return *table_;
    }

    bool verifiable(const Rational& v) const {
        Int d = common_denominator(*gens_);
        Rational scaled = v * Rational(d);
        if (!scaled.is_integer() || scaled.numerator() > kVerifySlotCap) return false;
        for (const Rational& g : *gens_)
            if (g.numerator() * (d / g.denominator()) > kVerifySlotCap) return false;
        return true;
    }
};

void validate_sequence_start(const std::vector<Rational>& values) {
    if (values.empty() || values.front() != Rational(1))
        throw std::invalid_argument("generating sequence must start at a_0 = 1");
    for (const Rational& v : values)
        if (v < Rational(1))
            throw std::invalid_argument("generating sequence values must be >= 1");
}

// Order is not required here: the density bound x_i is valid for any positive
// values, which is what lets the criterion checker process misordered input
// and report the failure instead of erroring out.
GeneratingSequence derive_levels_impl(const std::vector<Rational>& values) {
    validate_sequence_start(values);
    GeneratingSequence seq;
    seq.values = values;
    Rational group_gen(1);  // G_0 = Z
    Rational conductor(0);
    std::vector<Rational> prefix = {values.front()};
    for (std::size_t i = 1; i < values.size(); ++i) {
        const Rational& a = values[i];
        std::vector<Rational> with_a = prefix;
        with_a.push_back(a);
        Rational next_gen = cyclic_group_generator(with_a);
        Int q = group_index_ratio(group_gen, next_gen);

        PrefixOracle oracle(&prefix, group_gen, conductor);
        Int s = 0;
        for (Int m = q;; m += q) {
            if (oracle.contains(Rational(m) * a)) {
                s = m;
                break;
            }
            if (Rational(m) * a > conductor + Rational(1))
                throw std::logic_error("minimal multiple search passed the certified bound");
        }

        conductor += Rational(q - 1) * a;
        seq.levels.push_back(
            Level{static_cast<int>(i), a, q, s, conductor});
        group_gen = next_gen;
        prefix = std::move(with_a);
    }
    return seq;
}

struct Reduction {
    std::vector<bool> input_kept;  // aligned with the input values
};

// Ascending sweep: a value is redundant exactly when it lies in the semigroup
// of the strictly smaller kept values (every decomposition of a value uses
// only smaller generators).
Reduction reduce_to_minimal(const std::vector<Rational>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    Reduction red;
    red.input_kept.assign(values.size(), false);
    std::vector<Rational> kept;
    Rational group_gen(1);
    Rational conductor(0);
    for (std::size_t idx : order) {
        const Rational& v = values[idx];
        if (kept.empty()) {
            kept.push_back(v);  // the validated minimum, 1
            red.input_kept[idx] = true;
            continue;
        }
        PrefixOracle oracle(&kept, group_gen, conductor);
        if (oracle.contains(v)) continue;  // redundant
        std::vector<Rational> with_v = kept;
        with_v.push_back(v);
        Rational next_gen = cyclic_group_generator(with_v);
        Int q = group_index_ratio(group_gen, next_gen);
        conductor += Rational(q - 1) * v;
        group_gen = next_gen;
        kept = std::move(with_v);
        red.input_kept[idx] = true;
    }
    return red;
}

}  // namespace

GeneratingSequence derive_levels(const std::vector<Rational>& values) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i + 1] <= values[i])
            throw std::invalid_argument("generating sequence values must strictly increase");
    return derive_levels_impl(values);
}

CriterionReport check_plane_criterion(const std::vector<Rational>& values) {
    validate_sequence_start(values);
    CriterionReport report;
    report.input_values = values;

    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i + 1] <= values[i])
            report.ordering_violations.push_back(
                "a[" + std::to_string(i + 1) + "] = " + values[i + 1].to_string() +
                " does not exceed a[" + std::to_string(i) + "] = " +
                values[i].to_string());
    }

    Reduction red = reduce_to_minimal(values);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (red.input_kept[i])
            report.reduced_values.push_back(values[i]);
        else
            report.redundant_values.push_back(values[i]);
    }

    GeneratingSequence seq = derive_levels_impl(report.reduced_values);
    std::size_t m = seq.levels.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Level& lv = seq.levels[i];
        LevelCheck check;
        check.index = lv.index;
        check.value = lv.value;
        check.group_index = lv.group_index;
        check.min_multiple = lv.min_multiple;
        check.equality_ok = lv.min_multiple == lv.group_index;
        check.gap_threshold = Rational(lv.group_index) * lv.value;
        if (i + 1 < m)
            check.gap_ok = seq.levels[i + 1].value > check.gap_threshold;
        report.levels.push_back(check);

        if (!check.equality_ok)
            report.failures.push_back(
                "level " + std::to_string(check.index) + ": minimal multiple s = " +
                check.min_multiple.str() + " differs from group index q = " +
                check.group_index.str());
        if (check.gap_ok && !*check.gap_ok)
            report.failures.push_back(
                "level " + std::to_string(check.index) + " gap: next value " +
                seq.levels[i + 1].value.to_string() + " does not exceed q*a = " +
                check.gap_threshold.to_string());
    }
    for (const std::string& v : report.ordering_violations)
        report.failures.push_back("ordering: " + v);

    report.pass = report.failures.empty();
    return report;
}

ExampleFamily ExampleFamily::parse(std::string_view text) {
    ExampleFamily fam;
    if (text == "exf1") {
        fam.tag = FamilyTag::exf1;
        return fam;
    }
    if (text == "quadratic") {
        fam.tag = FamilyTag::quadratic;
        return fam;
    }
    if (text == "nlog") {
        fam.tag = FamilyTag::nlog;
        return fam;
    }
    if (text.rfind("power:", 0) == 0) {
        std::string_view params = text.substr(6);
        std::size_t comma = params.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("power family needs parameters p,q");
        Rational p = Rational::parse(params.substr(0, comma));
        Rational q = Rational::parse(params.substr(comma + 1));
        if (!p.is_integer() || !q.is_integer() || !p.is_positive() || q <= p)
            throw std::invalid_argument("power family needs integers 0 < p < q");
        if (q.numerator() > 62)
            throw std::invalid_argument("power family parameters too large");
        fam.tag = FamilyTag::power;
        fam.p = static_cast<int>(p.numerator());
        fam.q = static_cast<int>(q.numerator());
        if (boost::multiprecision::gcd(Int(fam.p), Int(fam.q)) != 1)
            throw std::invalid_argument("power family needs coprime p, q");
        return fam;
    }
    throw std::invalid_argument("unknown family: '" + std::string(text) +
                                "' (expected exf1, power:p,q, quadratic, nlog)");
}

std::string ExampleFamily::to_string() const {
    switch (tag) {
        case FamilyTag::exf1: return "exf1";
        case FamilyTag::power:
            return "power:" + std::to_string(p) + "," + std::to_string(q);
        case FamilyTag::quadratic: return "quadratic";
        case FamilyTag::nlog: return "nlog";
    }
    return "";
}

Rational ExampleFamily::value_at(int i) const {
    if (i < 0) throw std::invalid_argument("family level must be >= 0");
    if (i == 0) return Rational(1);
    unsigned long ui = static_cast<unsigned long>(i);
    switch (tag) {
        case FamilyTag::exf1:
            return Rational(int_pow(4, ui)) + Rational(1, int_pow(2, ui));
        case FamilyTag::power:
            return Rational(int_pow(2, static_cast<unsigned long>(q) * ui)) +
                   Rational(1, int_pow(2, static_cast<unsigned long>(p) * ui));
        case FamilyTag::quadratic:
            return Rational(int_pow(2, ui - 1)) +
                   (Rational(int_pow(2, ui)) - Rational(1, int_pow(2, ui))) / Rational(3);
        case FamilyTag::nlog: {
            if (i > 16)
                throw std::invalid_argument("nlog level too large (doubly exponential)");
            return Rational(int_pow(10, 1UL << (ui - 1))) + Rational(1, int_pow(2, ui));
        }
    }
    throw std::logic_error("unhandled family tag");
}

Rational ExampleFamily::value_at_recursive(int i) const {
    if (i < 0) throw std::invalid_argument("family level must be >= 0");
    if (i == 0) return Rational(1);
    if (tag == FamilyTag::nlog && i > 16)
        throw std::invalid_argument("nlog level too large (doubly exponential)");
    Rational a = value_at(1);
    for (int j = 2; j <= i; ++j) {
        unsigned long uj = static_cast<unsigned long>(j);
        switch (tag) {
            case FamilyTag::exf1:
                a = Rational(4) * a - Rational(7, int_pow(2, uj));
                break;
            case FamilyTag::power: {
                Int r = int_pow(2, static_cast<unsigned long>(q));
                Int s = int_pow(2, static_cast<unsigned long>(p));
                a = Rational(r) * a -
                    Rational(r * s - 1, int_pow(2, static_cast<unsigned long>(p) * uj));
                break;
            }
            case FamilyTag::quadratic:
                a = Rational(2) * a + Rational(1, int_pow(2, uj));
                break;
            case FamilyTag::nlog: {
                Rational base = a - Rational(1, int_pow(2, uj - 1));
                a = base * base + Rational(1, int_pow(2, uj));
                break;
            }
        }
    }
    return a;
}

std::vector<Rational> ExampleFamily::values(int k) const {
    if (k < 0) throw std::invalid_argument("family truncation level must be >= 0");
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) out.push_back(value_at(i));
    return out;
}

int ExampleFamily::levels_for_bound(const Int& n_max) const {
    if (n_max < 1) throw std::invalid_argument("bound must be >= 1");
    Rational bound(n_max);
    for (int k = 1; k <= 256; ++k)
        if (value_at(k) >= bound) return k + 1;
    throw std::logic_error("family values failed to reach the bound");
}

std::vector<int> quadratic_displayed_pattern_mismatches(int k) {
    ExampleFamily fam;
    fam.tag = FamilyTag::quadratic;
    std::vector<int> mismatches;
    for (int i = 1; i <= k; ++i) {
        // 2^(i-1) + 2^(i-2) + 2^(i-4) + ... down to 2^(-i), steps of two in
        // the exponent.
        Rational displayed(int_pow(2, static_cast<unsigned long>(i - 1)));
        for (int e = i - 2; e >= -i; e -= 2) {
            if (e >= 0)
                displayed += Rational(int_pow(2, static_cast<unsigned long>(e)));
            else
                displayed += Rational(1, int_pow(2, static_cast<unsigned long>(-e)));
        }
        if (displayed != fam.value_at(i)) mismatches.push_back(i);
    }
    return mismatches;
}

MonomialCurve realize_monomial_curve(const std::vector<Rational>& generators) {
    if (generators.empty())
        throw std::invalid_argument("realization needs at least one generator");
    for (const Rational& g : generators)
        if (!g.is_positive())
            throw std::invalid_argument("realization needs positive generators");
    Int d = common_denominator(generators);
    std::vector<Int> scaled;
    scaled.reserve(generators.size());
    Int g = 0;
    for (const Rational& v : generators) {
        scaled.push_back(v.numerator() * (d / v.denominator()));
        g = boost::multiprecision::gcd(g, scaled.back());
    }
    MonomialCurve curve;
    curve.alpha = Rational(g, d);
    for (Int& e : scaled) curve.exponents.push_back(e / g);
    return curve;
}

}  // namespace semigrowth
