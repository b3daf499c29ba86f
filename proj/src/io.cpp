#include "posmap/io.hpp"

#include "posmap/error.hpp"
#include "posmap/poly_text.hpp"

namespace posmap::io {

namespace {

using Idx = Eigen::Index;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
    return *it;
}

std::size_t positive_int(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() <= 0) throw ParseError(where + ": expected a positive integer");
    return j.get<std::size_t>();
}

std::string string_at(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

Rational rational_at(const json& j, const std::string& where) {
    try {
        return Rational::parse(string_at(j, where));
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    } catch (const DivisionByZero& e) {
        throw ParseError(where + ": " + e.what());
    }
}

GaussianRational gaussian_at(const json& j, const std::string& where) {
    try {
        return GaussianRational::parse(string_at(j, where));
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    } catch (const DivisionByZero& e) {
        throw ParseError(where + ": " + e.what());
    }
}

CMatrix matrix_at(const json& j, std::size_t size, const std::string& where) {
    if (!j.is_array() || j.size() != size)
        throw ParseError(where + ": expected " + std::to_string(size) + " rows");
    CMatrix m(static_cast<Idx>(size), static_cast<Idx>(size));
    for (std::size_t r = 0; r < size; ++r) {
        const std::string row_where = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != size)
            throw ParseError(row_where + ": expected " + std::to_string(size) + " entries");
        for (std::size_t c = 0; c < size; ++c)
            m(static_cast<Idx>(r), static_cast<Idx>(c)) =
                gaussian_at(j[r][c], row_where + "[" + std::to_string(c) + "]");
    }
    return m;
}

ordered_json matrix_to_json(const CMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (Idx r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Idx c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string branch_name(PipelineBranch b) {
    switch (b) {
        case PipelineBranch::Plus: return "plus";
        case PipelineBranch::Minus: return "minus";
        case PipelineBranch::None: break;
    }
    return "none";
}

ordered_json budgets_json(const RunInfo& info, const Trace& trace) {
    ordered_json b;
    b["samples"] = info.budget.samples;
    b["pipeline"] = info.budget.pipeline;
    b["samples_used"] = trace.samples_used;
    b["pipeline_indices_used"] = trace.pipeline_indices_used;
    return b;
}

void append_run_info(ordered_json& out, const RunInfo& info) {
    if (info.elapsed_ms) out["timings"] = {{"total_ms", *info.elapsed_ms}};
    if (info.timestamp) out["timestamp"] = *info.timestamp;
}

}  // namespace

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }
}

Superoperator superoperator_from_json(const json& j) {
    const std::size_t n = positive_int(field(j, "n", "superoperator"), "n");
    const json& terms = field(j, "terms", "superoperator");
    if (!terms.is_array() || terms.empty()) throw ParseError("terms: expected a non-empty array");
    std::vector<KrausTerm> out;
    for (std::size_t r = 0; r < terms.size(); ++r) {
        const std::string where = "terms[" + std::to_string(r) + "]";
        Rational alpha = rational_at(field(terms[r], "alpha", where), where + ".alpha");
        CMatrix m = matrix_at(field(terms[r], "matrix", where), n, where + ".matrix");
        out.push_back({std::move(alpha), std::move(m)});
    }
    return Superoperator(n, std::move(out));
}

ordered_json to_json(const Superoperator& phi) {
    ordered_json out;
    out["n"] = phi.n();
    ordered_json terms = ordered_json::array();
    for (const auto& [alpha, m] : phi.terms()) {
        ordered_json t;
        t["alpha"] = alpha.str();
        t["matrix"] = matrix_to_json(m);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

HermitianOperator choi_from_json(const json& j) {
    const std::size_t n = positive_int(field(j, "n", "choi operator"), "n");
    CMatrix m = matrix_at(field(j, "choi", "choi operator"), n * n, "choi");
    for (Idx r = 0; r < m.rows(); ++r)
        for (Idx c = r; c < m.cols(); ++c)
            if (!(m(r, c) == m(c, r).conj()))
                throw PreconditionError("choi[" + std::to_string(r) + "][" + std::to_string(c) +
                                        "]: not the conjugate of choi[" + std::to_string(c) + "][" +
                                        std::to_string(r) + "]");
    return HermitianOperator(n, std::move(m));
}

ordered_json to_json(const HermitianOperator& t) {
    ordered_json out;
    out["n"] = t.n();
    out["choi"] = matrix_to_json(t.matrix());
    return out;
}

std::variant<Superoperator, HermitianOperator> map_input_from_json(const json& j) {
    if (j.is_object() && j.contains("terms")) return superoperator_from_json(j);
    if (j.is_object() && j.contains("choi")) return choi_from_json(j);
    throw ParseError("input is neither a superoperator (\"terms\") nor a Choi operator (\"choi\")");
}

ordered_json to_json(const std::vector<Rational>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& q : v) out.push_back(q.str());
    return out;
}

ordered_json to_json(const CVector& v) {
    ordered_json out = ordered_json::array();
    for (Idx k = 0; k < v.size(); ++k) out.push_back(v(k).str());
    return out;
}

std::vector<Rational> rationals_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<Rational> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(rational_at(j[k], where + "[" + std::to_string(k) + "]"));
    return out;
}

CVector gaussians_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    CVector out(static_cast<Idx>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k)
        out(static_cast<Idx>(k)) = gaussian_at(j[k], where + "[" + std::to_string(k) + "]");
    return out;
}

ordered_json trace_to_json(const Trace& trace, std::span<const std::string> names) {
    ordered_json t;
    t["provider"] = trace.provider.empty() ? ordered_json(nullptr) : ordered_json(trace.provider);
    t["provider_complete"] = trace.provider_complete;
    if (trace.refuting_index) {
        const RefutingIndex& r = *trace.refuting_index;
        std::vector<std::string> u_names;
        for (std::size_t k = 1; k <= names.size() + 1; ++k) u_names.push_back("u" + std::to_string(k));
        ordered_json beta = ordered_json::array();
        for (const auto& b : r.beta) beta.push_back(b.get_str());
        t["refuting_index"] = {{"j", r.j.get_str()}, {"beta", beta}, {"r", to_text(r.r, u_names)},
                               {"branch", branch_name(r.branch)}};
    } else {
        t["refuting_index"] = nullptr;
    }
    t["notes"] = trace.notes;
    return t;
}

ordered_json verdict_to_json(const Verdict& v, std::span<const std::string> names, const RunInfo& info) {
    ordered_json out;
    out["status"] = to_string(v.status);
    out["engine"] = v.trace.engine;
    if (v.witness) {
        ordered_json w;
        w["variables"] = std::vector<std::string>(names.begin(), names.end());
        w["point"] = to_json(*v.witness);
        w["value"] = v.value->str();
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    out["seed"] = info.budget.seed;
    out["budgets"] = budgets_json(info, v.trace);
    out["trace"] = trace_to_json(v.trace, names);
    append_run_info(out, info);
    return out;
}

ordered_json report_to_json(const MapReport& r, const RunInfo& info) {
    const std::vector<std::string> names = positivity_variable_names(r.n);
    ordered_json out;
    out["n"] = r.n;
    out["hermiticity_preserving"] = r.hermiticity_preserving;
    out["completely_positive"] = r.completely_positive;
    out["status"] = to_string(r.verdict.status);
    out["engine"] = r.verdict.trace.engine;
    if (r.verdict.witness) {
        ordered_json w;
        w["x"] = to_json(*r.witness_x);
        w["y"] = to_json(*r.witness_y);
        w["value"] = r.bilinear_value->str();
        w["verified"] = r.witness_verified;
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    out["seed"] = info.budget.seed;
    out["budgets"] = budgets_json(info, r.verdict.trace);
    out["trace"] = trace_to_json(r.verdict.trace, names);
    out["polynomial"] = to_text(r.polynomial.poly, names);
    append_run_info(out, info);
    return out;
}

}  // namespace posmap::io
