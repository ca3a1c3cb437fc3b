#include "semigrowth/serialization.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sg = semigrowth;

namespace {

struct CommonOptions {
    std::string format = "json";
    std::string output;
    int threads = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json", "text"}))
            ->capture_default_str();
        cmd->add_option("--output", output,
                        "output file; a bare filename lands in $SEMIGROWTH_OUTPUT_DIR "
                        "when that is set; default is standard output");
        cmd->add_option("--threads", threads, "worker threads for table builds")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    }

    void emit(const std::string& text) const {
        if (output.empty()) {
            std::cout << text;
            return;
        }
        std::filesystem::path path(output);
        if (path.is_relative() && !path.has_parent_path())
            if (const char* dir = std::getenv("SEMIGROWTH_OUTPUT_DIR"))
                path = std::filesystem::path(dir) / path;
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + path.string());
        file << text;
    }

    [[noreturn]] void reject_csv(const std::string& subcommand) const {
        throw std::invalid_argument("csv format is not available for `" + subcommand +
                                    "`; use json or text");
    }
};

// Semigroup source shared by most subcommands: raw --values or a built-in
// --family. With a family, --levels picks the truncation; subcommands that
// know an n bound may auto-pick the truncation covering it instead.
struct SourceOptions {
    std::string values_text;
    std::string family_text;
    int levels = -1;

    void attach(CLI::App* cmd) {
        auto* values = cmd->add_option("--values", values_text,
                                       "generators, e.g. \"1,9/2,65/4\"");
        auto* family = cmd->add_option("--family", family_text,
                                       "built-in family: exf1 | power:p,q | quadratic | nlog");
        values->excludes(family);
        family->excludes(values);
        cmd->add_option("--levels", levels, "family truncation level")->needs(family);
    }

    bool is_family() const { return !family_text.empty(); }

    sg::ExampleFamily family() const { return sg::ExampleFamily::parse(family_text); }

    // n_max_hint < 1 means no bound is available to auto-pick levels from.
    std::vector<sg::Rational> resolve(std::int64_t n_max_hint) const {
        if (!values_text.empty()) return sg::parse_rational_list(values_text);
        if (family_text.empty())
            throw std::invalid_argument("exactly one of --values or --family is required");
        sg::ExampleFamily fam = family();
        int k = levels;
        if (k < 0) {
            if (n_max_hint < 1)
                throw std::invalid_argument("--levels is required with --family here");
            k = fam.levels_for_bound(sg::Int(n_max_hint));
        }
        return fam.values(k);
    }
};

nlohmann::json bounds_json(const sg::GrowthReport& report) { return sg::to_json(report); }

bool all_pass(const std::vector<sg::BoundCheck>& bounds) {
    for (const sg::BoundCheck& check : bounds)
        if (!check.pass) return false;
    return true;
}

int handle_enumerate(const SourceOptions& source, const CommonOptions& common,
                     const std::string& bound_text) {
    sg::Rational bound = sg::Rational::parse(bound_text);
    sg::Semigroup s(source.resolve(-1));
    std::vector<sg::Rational> elements = s.enumerate(bound);
    if (common.format == "json") {
        nlohmann::json j;
        j["bound"] = bound.to_string();
        nlohmann::json arr = nlohmann::json::array();
        for (const sg::Rational& e : elements) arr.push_back(e.to_string());
        j["elements"] = arr;
        nlohmann::json gens = nlohmann::json::array();
        for (const sg::Rational& g : s.generators()) gens.push_back(g.to_string());
        j["generators"] = gens;
        common.emit(sg::dump_json(j));
    } else {
        std::ostringstream out;
        if (common.format == "csv") out << "element\n";
        for (const sg::Rational& e : elements) out << e << '\n';
        common.emit(out.str());
    }
    return 0;
}

int handle_phi(const SourceOptions& source, const CommonOptions& common,
               std::int64_t n_max) {
    sg::Semigroup s(source.resolve(n_max));
    sg::CountTable table = s.build_count_table(n_max, common.threads);
    if (common.format == "csv") {
        common.emit(sg::to_csv(table));
    } else if (common.format == "text") {
        common.emit(sg::to_text(table));
    } else {
        nlohmann::json j;
        nlohmann::json gens = nlohmann::json::array();
        for (const sg::Rational& g : s.generators()) gens.push_back(g.to_string());
        j["generators"] = gens;
        j["nmax"] = n_max;
        j["rows"] = sg::to_json(table);
        common.emit(sg::dump_json(j));
    }
    return 0;
}

int handle_criterion(const SourceOptions& source, const CommonOptions& common) {
    if (common.format == "csv") common.reject_csv("criterion");
    sg::CriterionReport report = sg::check_plane_criterion(source.resolve(-1));
    common.emit(common.format == "json" ? sg::dump_json(sg::to_json(report))
                                        : sg::to_text(report));
    return report.pass ? 0 : 1;
}

int handle_bounds(const SourceOptions& source, const CommonOptions& common,
                  std::int64_t n_max, int dim) {
    if (common.format == "csv") common.reject_csv("bounds");
    sg::Semigroup s(source.resolve(n_max));
    sg::GrowthReport report = sg::check_bounds(s, dim, n_max, common.threads);
    if (common.format == "json") {
        nlohmann::json j = bounds_json(report);
        j["dim"] = dim;
        nlohmann::json gens = nlohmann::json::array();
        for (const sg::Rational& g : s.generators()) gens.push_back(g.to_string());
        j["generators"] = gens;
        j["nmax"] = n_max;
        common.emit(sg::dump_json(j));
    } else {
        common.emit(sg::to_text(report));
    }
    return all_pass(report.bounds) ? 0 : 1;
}

int handle_examples(const CommonOptions& common, const std::string& family_text,
                    std::int64_t n_max, int levels) {
    if (common.format == "csv") common.reject_csv("examples");
    sg::ExampleFamily family = sg::ExampleFamily::parse(family_text);
    int used = levels >= 0 ? levels : family.levels_for_bound(sg::Int(n_max));
    sg::GrowthReport report =
        sg::check_example_inequalities(family, n_max, used, common.threads);
    if (common.format == "json") {
        nlohmann::json j = bounds_json(report);
        j["family"] = family.to_string();
        j["levels"] = used;
        j["nmax"] = n_max;
        common.emit(sg::dump_json(j));
    } else {
        common.emit(sg::to_text(report));
    }
    return all_pass(report.bounds) ? 0 : 1;
}

int handle_corn1(const SourceOptions& source, const CommonOptions& common,
                 std::int64_t n_lo, std::int64_t n_max, int dim,
                 const std::string& mult_text) {
    if (common.format == "csv") common.reject_csv("corn1");
    sg::Rational mult = sg::Rational::parse(mult_text);
    sg::Semigroup s(source.resolve(n_max));
    sg::GrowthReport report =
        sg::check_growth_ratio_bound(s, dim, mult, n_lo, n_max, common.threads);
    if (common.format == "json") {
        nlohmann::json j = bounds_json(report);
        j["dim"] = dim;
        nlohmann::json gens = nlohmann::json::array();
        for (const sg::Rational& g : s.generators()) gens.push_back(g.to_string());
        j["generators"] = gens;
        j["mult"] = mult.to_string();
        j["n_hi"] = n_max;
        j["n_lo"] = n_lo;
        common.emit(sg::dump_json(j));
    } else {
        common.emit(sg::to_text(report));
    }
    return all_pass(report.bounds) ? 0 : 1;
}

int handle_psi(const SourceOptions& source, const CommonOptions& common, std::int64_t n_max,
               std::int64_t check_lo, std::int64_t check_hi, const std::string& margin_text) {
    sg::Semigroup s(source.resolve(n_max));
    sg::PsiReport report = sg::psi_report(s, n_max, check_lo, check_hi,
                                          sg::Rational::parse(margin_text));
    if (common.format == "csv")
        common.emit(sg::to_csv(report));
    else if (common.format == "text")
        common.emit(sg::to_text(report));
    else
        common.emit(sg::dump_json(sg::to_json(report)));
    return all_pass(report.bounds) ? 0 : 1;
}

struct SweepRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::int64_t step = 0;
};

SweepRange parse_sweep(const std::string& text) {
    SweepRange range;
    char colon1 = 0;
    char colon2 = 0;
    std::istringstream in(text);
    if (!(in >> range.lo >> colon1 >> range.hi >> colon2 >> range.step) ||
        colon1 != ':' || colon2 != ':' || !(in >> std::ws).eof())
        throw std::invalid_argument("--sweep expects n1:n2:step");
    if (range.lo < 1 || range.hi < range.lo || range.step < 1)
        throw std::invalid_argument("--sweep needs 1 <= n1 <= n2 and step >= 1");
    return range;
}

int handle_lattice_count(const CommonOptions& common, const std::string& weights_text,
                         const std::string& alpha_text, std::int64_t n,
                         const std::string& sweep_text) {
    std::vector<sg::Rational> weights = sg::parse_rational_list(weights_text);
    sg::Rational alpha = sg::Rational::parse(alpha_text);
    std::vector<std::int64_t> points;
    if (!sweep_text.empty()) {
        SweepRange range = parse_sweep(sweep_text);
        for (std::int64_t v = range.lo; v <= range.hi; v += range.step) points.push_back(v);
    } else {
        if (n < 1) throw std::invalid_argument("either --n or --sweep is required");
        points.push_back(n);
    }

    struct Row {
        std::int64_t n;
        sg::Int count;
        sg::Rational ratio;
    };
    std::vector<Row> rows;
    sg::Int nd;
    for (std::int64_t v : points) {
        sg::WedgeSystem sys{weights, alpha, v};
        sg::Int count = sg::count_wedge(sys);
        nd = sg::int_pow(sg::Int(v), static_cast<unsigned long>(weights.size()));
        rows.push_back({v, count, sg::Rational(count, nd)});
    }

    if (common.format == "csv") {
        std::ostringstream out;
        out << "n,count,ratio\n";
        for (const Row& row : rows)
            out << row.n << ',' << row.count.str() << ',' << row.ratio << '\n';
        common.emit(out.str());
    } else if (common.format == "text") {
        std::ostringstream out;
        if (sweep_text.empty()) {
            out << rows.front().count.str() << '\n';
        } else {
            for (const Row& row : rows)
                out << "n = " << row.n << ": count " << row.count.str() << ", ratio "
                    << row.ratio << '\n';
        }
        common.emit(out.str());
    } else {
        nlohmann::json j;
        j["alpha"] = alpha.to_string();
        nlohmann::json arr = nlohmann::json::array();
        for (const Row& row : rows)
            arr.push_back({{"count", row.count.str()},
                           {"n", row.n},
                           {"ratio", row.ratio.to_string()}});
        j["rows"] = arr;
        nlohmann::json w = nlohmann::json::array();
        for (const sg::Rational& weight : weights) w.push_back(weight.to_string());
        j["weights"] = w;
        common.emit(sg::dump_json(j));
    }
    return 0;
}

int handle_realize(const CommonOptions& common, const std::string& generators_text) {
    if (common.format == "csv") common.reject_csv("realize");
    std::vector<sg::Rational> generators = sg::parse_rational_list(generators_text);
    sg::MonomialCurve curve = sg::realize_monomial_curve(generators);
    common.emit(common.format == "json" ? sg::dump_json(sg::to_json(curve, generators))
                                        : sg::to_text(curve));
    return 0;
}

int handle_counterexample(const CommonOptions& common, int levels, std::int64_t n_max) {
    if (common.format == "csv") common.reject_csv("counterexample");
    sg::CounterexampleResult result = sg::counterexample_semigroup(levels, n_max);
    common.emit(common.format == "json" ? sg::dump_json(sg::to_json(result))
                                        : sg::to_text(result));
    // Success means the construction worked: the seed counts reach n^n and at
    // least one regular-length bound is actually violated.
    bool seeds_ok = true;
    for (const sg::SeedCount& sc : result.seed_counts) seeds_ok = seeds_ok && sc.ok;
    bool violated = false;
    for (const sg::BoundCheck& check : result.bound_checks) violated = violated || !check.pass;
    return seeds_ok && violated ? 0 : 1;
}

int handle_fit(const SourceOptions& source, const CommonOptions& common,
               std::int64_t n_max) {
    if (common.format == "csv") common.reject_csv("fit");
    sg::Semigroup s(source.resolve(n_max));
    sg::CountTable table = s.build_count_table(n_max, common.threads);
    sg::FitModel model = sg::fit_growth(table);
    if (common.format == "json") {
        nlohmann::json j = sg::to_json(model);
        nlohmann::json gens = nlohmann::json::array();
        for (const sg::Rational& g : s.generators()) gens.push_back(g.to_string());
        j["generators"] = gens;
        j["nmax"] = n_max;
        common.emit(sg::dump_json(j));
    } else {
        std::ostringstream out;
        out << "selected model: " << model.selected << '\n'
            << "power exponent " << model.exponent << " in [" << model.band_lo << ", "
            << model.band_hi << "], sse " << model.power_sse << '\n'
            << "nlogn coefficient " << model.nlogn_coefficient << ", sse "
            << model.nlogn_sse << '\n';
        common.emit(out.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact growth analysis for finitely generated semigroups of positive rationals"};
    app.require_subcommand(1);

    CommonOptions common;
    SourceOptions source;
    std::string bound_text;
    std::string family_text;
    std::string weights_text;
    std::string alpha_text = "0";
    std::string sweep_text;
    std::string generators_text;
    std::string mult_text = "1";
    std::string margin_text = "1/20";
    std::int64_t n_max = 0;
    std::int64_t n_lo = 1;
    std::int64_t lattice_n = 0;
    std::int64_t check_lo = 0;
    std::int64_t check_hi = 0;
    int dim = 2;
    int levels = -1;
    int ce_levels = 0;
    int exit_code = 0;

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "list the semigroup elements in (0, bound)");
    source.attach(enumerate);
    common.attach(enumerate);
    enumerate->add_option("--bound", bound_text, "open upper bound, a rational")
        ->required();
    enumerate->callback(
        [&] { exit_code = handle_enumerate(source, common, bound_text); });

    CLI::App* phi = app.add_subcommand("phi", "tabulate phi(n) = |S cap (0,n)|");
    source.attach(phi);
    common.attach(phi);
    phi->add_option("--nmax", n_max, "largest n")->required()->check(CLI::PositiveNumber);
    phi->callback([&] { exit_code = handle_phi(source, common, n_max); });

    CLI::App* criterion =
        app.add_subcommand("criterion", "decide the plane-valuation criterion");
    source.attach(criterion);
    common.attach(criterion);
    criterion->callback([&] { exit_code = handle_criterion(source, common); });

    CLI::App* bounds =
        app.add_subcommand("bounds", "check phi against the regular length C(n+d-1,d)");
    source.attach(bounds);
    common.attach(bounds);
    bounds->add_option("--nmax", n_max, "largest n")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--dim", dim, "ambient regular dimension d")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bounds->callback([&] { exit_code = handle_bounds(source, common, n_max, dim); });

    CLI::App* examples =
        app.add_subcommand("examples", "verify a family's proved two-sided phi bounds");
    common.attach(examples);
    examples->add_option("--family", family_text, "exf1 | power:p,q | quadratic | nlog")
        ->required();
    examples->add_option("--nmax", n_max, "largest n")
        ->required()
        ->check(CLI::PositiveNumber);
    examples->add_option("--levels", levels, "family truncation level (default: cover nmax)");
    examples->callback(
        [&] { exit_code = handle_examples(common, family_text, n_max, levels); });

    CLI::App* corn1 = app.add_subcommand(
        "corn1", "check the finite ratio bound phi(n)/n^d < (e/d!)/(s_1...s_d)");
    source.attach(corn1);
    common.attach(corn1);
    corn1->add_option("--nmax", n_max, "largest n")->required()->check(CLI::PositiveNumber);
    corn1->add_option("--nlo", n_lo, "smallest n")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    corn1->add_option("--dim", dim, "dimension d")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    corn1->add_option("--mult", mult_text, "multiplicity e, a rational")
        ->capture_default_str();
    corn1->callback(
        [&] { exit_code = handle_corn1(source, common, n_lo, n_max, dim, mult_text); });

    CLI::App* psi = app.add_subcommand(
        "psi", "tabulate the deviation psi(n) = C(n+1,2) - 1 - phi(n)");
    source.attach(psi);
    common.attach(psi);
    psi->add_option("--nmax", n_max, "largest n")->required()->check(CLI::PositiveNumber);
    psi->add_option("--check-lo", check_lo, "floor check range start (0 = no check)")
        ->capture_default_str();
    psi->add_option("--check-hi", check_hi, "floor check range end")->capture_default_str();
    psi->add_option("--margin", margin_text, "floor check margin, a rational")
        ->capture_default_str();
    psi->callback([&] {
        exit_code = handle_psi(source, common, n_max, check_lo, check_hi, margin_text);
    });

    CLI::App* lattice = app.add_subcommand(
        "lattice-count", "count lattice points between the weighted and plain half-planes");
    common.attach(lattice);
    lattice->add_option("--weights", weights_text, "weights, e.g. \"1,9/2\"")->required();
    lattice->add_option("--alpha", alpha_text, "offset alpha")->capture_default_str();
    lattice->add_option("--n", lattice_n, "single count at this n")->check(CLI::PositiveNumber);
    lattice->add_option("--sweep", sweep_text, "range n1:n2:step");
    lattice->callback([&] {
        exit_code =
            handle_lattice_count(common, weights_text, alpha_text, lattice_n, sweep_text);
    });

    CLI::App* realize = app.add_subcommand(
        "realize", "scale generators onto a monomial curve: alpha and coprime exponents");
    common.attach(realize);
    realize->add_option("--generators", generators_text, "generators, e.g. \"1,3/2\"")
        ->required();
    realize->callback([&] { exit_code = handle_realize(common, generators_text); });

    CLI::App* counterexample = app.add_subcommand(
        "counterexample",
        "build the dense seed set whose semigroup beats every C(n+d-1,d) bound, d <= 3");
    common.attach(counterexample);
    counterexample->add_option("--levels", ce_levels, "seed blocks (2..5)")->required();
    counterexample->add_option("--nmax", n_max, "table range (default 2*levels)");
    counterexample->callback(
        [&] { exit_code = handle_counterexample(common, ce_levels, n_max); });

    CLI::App* fit = app.add_subcommand(
        "fit", "name the apparent growth regime from dyadic samples of phi");
    source.attach(fit);
    common.attach(fit);
    fit->add_option("--nmax", n_max, "largest n (>= 256)")
        ->required()
        ->check(CLI::PositiveNumber);
    fit->callback([&] { exit_code = handle_fit(source, common, n_max); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
