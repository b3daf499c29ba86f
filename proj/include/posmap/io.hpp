#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "posmap/choi.hpp"
#include "posmap/nonneg.hpp"

namespace posmap::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with line and column.
json parse_json(std::string_view text);

// {"n": int, "terms": [{"alpha": "p/q", "matrix": [["a+bi", ...], ...]}, ...]}
Superoperator superoperator_from_json(const json& j);
ordered_json to_json(const Superoperator& phi);

// {"n": int, "choi": [[...], ...]} with n² rows of n² entries.
HermitianOperator choi_from_json(const json& j);
ordered_json to_json(const HermitianOperator& t);

/// Either map form, told apart by the "terms" / "choi" key.
std::variant<Superoperator, HermitianOperator> map_input_from_json(const json& j);

ordered_json to_json(const std::vector<Rational>& v);
ordered_json to_json(const CVector& v);
std::vector<Rational> rationals_from_json(const json& j, const std::string& where);
CVector gaussians_from_json(const json& j, const std::string& where);

/// Settings echoed into reports.
struct RunInfo {
    Budget budget;
    std::optional<std::string> timestamp;
    std::optional<double> elapsed_ms;
};

ordered_json trace_to_json(const Trace& trace, std::span<const std::string> names);

/// Verdict on a raw polynomial; the witness lists the variable names.
ordered_json verdict_to_json(const Verdict& v, std::span<const std::string> names, const RunInfo& info);

/// Map report; the witness is given as complex vectors x, y.
ordered_json report_to_json(const MapReport& r, const RunInfo& info);

}  // namespace posmap::io
