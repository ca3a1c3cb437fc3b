#include "semigrowth/serialization.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace semigrowth {

namespace {

nlohmann::json rational_array(const std::vector<Rational>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& v : values) arr.push_back(v.to_string());
    return arr;
}

std::int64_t to_int64(const Int& value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        throw std::length_error("integer too large for a JSON number");
    return static_cast<std::int64_t>(value);
}

std::string pass_word(bool pass) { return pass ? "pass" : "FAIL"; }

}  // namespace

nlohmann::json to_json(const Rational& value) { return value.to_string(); }

nlohmann::json to_json(const CountTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const CountRow& row : table.rows)
        rows.push_back({{"interval", row.interval}, {"n", row.n}, {"phi", row.phi}});
    return rows;
}

nlohmann::json to_json(const BoundCheck& check) {
    nlohmann::json j{{"name", check.name},
                     {"predicate", check.predicate},
                     {"n_lo", check.n_lo},
                     {"n_hi", check.n_hi},
                     {"pass", check.pass},
                     {"note", check.note}};
    if (check.first_violation)
        j["first_violation"] = *check.first_violation;
    else
        j["first_violation"] = nullptr;
    return j;
}

nlohmann::json to_json(const FitModel& model) {
    return {{"band_hi", model.band_hi},
            {"band_lo", model.band_lo},
            {"exponent", model.exponent},
            {"nlogn_coefficient", model.nlogn_coefficient},
            {"nlogn_sse", model.nlogn_sse},
            {"power_sse", model.power_sse},
            {"sample_points", model.sample_points},
            {"selected", model.selected}};
}

nlohmann::json to_json(const GrowthReport& report) {
    nlohmann::json bounds = nlohmann::json::array();
    for (const BoundCheck& check : report.bounds) bounds.push_back(to_json(check));
    nlohmann::json j{{"bounds", bounds}};
    j["model"] = report.model ? to_json(*report.model) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const CriterionReport& report) {
    nlohmann::json levels = nlohmann::json::array();
    for (const LevelCheck& lv : report.levels) {
        nlohmann::json level{{"index", lv.index},
                             {"value", lv.value.to_string()},
                             {"group_index", lv.group_index.str()},
                             {"min_multiple", lv.min_multiple.str()},
                             {"equality_ok", lv.equality_ok},
                             {"gap_checkable", lv.gap_ok.has_value()},
                             {"gap_threshold", lv.gap_threshold.to_string()}};
        level["gap_ok"] = lv.gap_ok ? nlohmann::json(*lv.gap_ok) : nlohmann::json(nullptr);
        levels.push_back(level);
    }
    return {{"failures", report.failures},
            {"input_values", rational_array(report.input_values)},
            {"levels", levels},
            {"ordering_violations", report.ordering_violations},
            {"pass", report.pass},
            {"redundant_values", rational_array(report.redundant_values)},
            {"reduced_values", rational_array(report.reduced_values)}};
}

nlohmann::json to_json(const PsiReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const PsiRow& row : report.rows)
        rows.push_back({{"n", row.n},
                        {"psi", row.psi.str()},
                        {"ratio", row.ratio.to_string()}});
    nlohmann::json bounds = nlohmann::json::array();
    for (const BoundCheck& check : report.bounds) bounds.push_back(to_json(check));
    return {{"bounds", bounds},
            {"floor", report.floor_value.to_string()},
            {"rows", rows},
            {"second_generator", report.second_generator.to_string()}};
}

nlohmann::json to_json(const CounterexampleResult& result) {
    nlohmann::json seed_counts = nlohmann::json::array();
    for (const SeedCount& sc : result.seed_counts)
        seed_counts.push_back({{"count", sc.count.str()},
                               {"n", sc.n},
                               {"ok", sc.ok},
                               {"required", sc.required.str()}});
    nlohmann::json checks = nlohmann::json::array();
    for (const BoundCheck& check : result.bound_checks) checks.push_back(to_json(check));
    return {{"bound_checks", checks},
            {"levels", result.levels},
            {"seed_counts", seed_counts},
            {"seeds", rational_array(result.seeds)}};
}

nlohmann::json to_json(const MonomialCurve& curve, const std::vector<Rational>& generators) {
    nlohmann::json exponents = nlohmann::json::array();
    for (const Int& e : curve.exponents) exponents.push_back(to_int64(e));
    return {{"alpha", curve.alpha.to_string()},
            {"exponents", exponents},
            {"generators", rational_array(generators)}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string to_text(const CountTable& table) {
    std::ostringstream out;
    out << "n phi interval\n";
    for (const CountRow& row : table.rows)
        out << row.n << ' ' << row.phi << ' ' << row.interval << '\n';
    return out.str();
}

std::string to_text(const BoundCheck& check) {
    std::ostringstream out;
    out << '[' << pass_word(check.pass) << "] " << check.name << ": " << check.predicate
        << " for " << check.n_lo << " <= n <= " << check.n_hi;
    if (check.first_violation) out << "; first violation at n = " << *check.first_violation;
    if (!check.note.empty()) out << " (" << check.note << ')';
    out << '\n';
    return out.str();
}

std::string to_text(const GrowthReport& report) {
    std::ostringstream out;
    for (const BoundCheck& check : report.bounds) out << to_text(check);
    if (report.model) {
        const FitModel& m = *report.model;
        out << "fitted model: " << m.selected << ", exponent " << m.exponent << " in ["
            << m.band_lo << ", " << m.band_hi << "], sse power " << m.power_sse
            << " vs nlogn " << m.nlogn_sse << '\n';
    }
    return out.str();
}

std::string to_text(const CriterionReport& report) {
    std::ostringstream out;
    out << "plane-valuation criterion: " << (report.pass ? "PASS" : "FAIL") << '\n';
    for (const LevelCheck& lv : report.levels) {
        out << "level " << lv.index << ": a = " << lv.value << ", q = " << lv.group_index
            << ", s = " << lv.min_multiple << ", equality "
            << (lv.equality_ok ? "ok" : "FAIL") << ", gap ";
        if (!lv.gap_ok)
            out << "not checkable at this truncation";
        else
            out << (*lv.gap_ok ? "ok" : "FAIL") << " (threshold " << lv.gap_threshold << ")";
        out << '\n';
    }
    if (!report.redundant_values.empty()) {
        out << "redundant values:";
        for (const Rational& v : report.redundant_values) out << ' ' << v;
        out << '\n';
    }
    for (const std::string& f : report.failures) out << "failure: " << f << '\n';
    return out.str();
}

std::string to_text(const PsiReport& report) {
    std::ostringstream out;
    out << "second generator a1 = " << report.second_generator << ", deviation floor "
        << report.floor_value << '\n';
    for (const BoundCheck& check : report.bounds) out << to_text(check);
    if (!report.rows.empty()) {
        const PsiRow& last = report.rows.back();
        out << "psi(" << last.n << ") = " << last.psi << ", ratio " << last.ratio << '\n';
    }
    return out.str();
}

std::string to_text(const CounterexampleResult& result) {
    std::ostringstream out;
    out << "seed set: " << result.seeds.size() << " values, levels = " << result.levels
        << '\n';
    for (const SeedCount& sc : result.seed_counts)
        out << "[" << (sc.ok ? "pass" : "FAIL") << "] |T cap (0," << sc.n
            << ")| = " << sc.count << " >= " << sc.required << '\n';
    for (const BoundCheck& check : result.bound_checks) out << to_text(check);
    return out.str();
}

std::string to_text(const MonomialCurve& curve) {
    std::ostringstream out;
    out << "alpha = " << curve.alpha << ", exponents =";
    for (const Int& e : curve.exponents) out << ' ' << e;
    out << '\n';
    return out.str();
}

std::string to_csv(const PsiReport& report) {
    std::string out = "n,psi,ratio";
    for (const PsiRow& row : report.rows) {
        out += '\n';
        out += std::to_string(row.n);
        out += ',';
        out += row.psi.str();
        out += ',';
        out += row.ratio.to_string();
    }
    out += '\n';
    return out;
}

}  // namespace semigrowth
