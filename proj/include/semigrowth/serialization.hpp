#pragma once

#include "semigrowth/growth_analysis.hpp"
#include "semigrowth/lattice_geometry.hpp"
#include "semigrowth/plane_valuation.hpp"
#include "semigrowth/semigroup.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace semigrowth {

/// JSON conventions used by every report: objects with lexicographically
/// sorted keys, UTF-8, and every arbitrary-precision number rendered as a
/// lowest-terms "p/q" string ("p" when the denominator is 1). Machine-sized
/// integers, booleans, and the floating-point fit diagnostics stay native.
nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const CountTable& table);
nlohmann::json to_json(const BoundCheck& check);
nlohmann::json to_json(const FitModel& model);
nlohmann::json to_json(const GrowthReport& report);
nlohmann::json to_json(const CriterionReport& report);
nlohmann::json to_json(const PsiReport& report);
nlohmann::json to_json(const CounterexampleResult& result);
nlohmann::json to_json(const MonomialCurve& curve, const std::vector<Rational>& generators);

/// Canonical dump: two-space indent, trailing newline; byte-identical for
/// equal inputs.
std::string dump_json(const nlohmann::json& j);

std::string to_text(const CountTable& table);
std::string to_text(const BoundCheck& check);
std::string to_text(const GrowthReport& report);
std::string to_text(const CriterionReport& report);
std::string to_text(const PsiReport& report);
std::string to_text(const CounterexampleResult& result);
std::string to_text(const MonomialCurve& curve);

/// CSV for psi tables: header `n,psi,ratio`, LF, no trailing separator.
std::string to_csv(const PsiReport& report);

}  // namespace semigrowth
