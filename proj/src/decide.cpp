#include "posmap/nonneg.hpp"

#include "posmap/poly_text.hpp"
#include "posmap/sturm.hpp"

namespace posmap {

std::string to_string(Status s) {
    switch (s) {
        case Status::Nonnegative: return "nonnegative";
        case Status::NotNonnegative: return "not_nonnegative";
        case Status::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

Verdict decided(Status status, std::string engine, Trace trace) {
    trace.engine = std::move(engine);
    Verdict v;
    v.status = status;
    v.trace = std::move(trace);
    return v;
}

Verdict refuted(const MultiPoly& g, std::vector<Rational> witness, std::string engine, Trace trace) {
    Rational value = evaluate(g, witness);
    if (value.sign() >= 0) throw InternalError("refutation witness does not evaluate negative");
    Verdict v = decided(Status::NotNonnegative, std::move(engine), std::move(trace));
    v.witness = std::move(witness);
    v.value = std::move(value);
    return v;
}

/// g restricted to the listed variables, others set to zero.
MultiPoly project(const MultiPoly& g, const std::vector<std::size_t>& vars) {
    MultiPoly out(vars.size());
    Exponents e(vars.size());
    for (const auto& [full, c] : g.terms()) {
        for (std::size_t q = 0; q < vars.size(); ++q) e[q] = full[vars[q]];
        out.add_term(e, c);
    }
    return out;
}

std::vector<Rational> lift(const std::vector<Rational>& local, const std::vector<std::size_t>& vars,
                           std::size_t nvars) {
    std::vector<Rational> point(nvars, Rational(0));
    for (std::size_t q = 0; q < vars.size(); ++q) point[vars[q]] = local[q];
    return point;
}

std::optional<Verdict> exact_stage(const MultiPoly& g, Trace& trace) {
    const std::vector<std::size_t> active = g.active_variables();
    if (active.size() == 1) {
        // g = c·x^d with d even
        const Rational c = g.terms().begin()->second;
        const UniPoly uni = UniPoly::monomial(c, static_cast<unsigned>(g.total_degree()));
        if (univariate_nonneg(uni)) return decided(Status::Nonnegative, "exact-univariate", trace);
        return refuted(g, lift({Rational(1)}, active, g.nvars()), "exact-univariate", trace);
    }
    if (active.size() == 2) {
        const MultiPoly two = project(g, active);
        if (bivariate_homogeneous_nonneg(two)) return decided(Status::Nonnegative, "exact-bivariate", trace);
        const std::vector<Rational> x_axis{Rational(1), Rational(0)};
        if (evaluate(two, x_axis).sign() < 0)
            return refuted(g, lift(x_axis, active, g.nvars()), "exact-bivariate", trace);
        const std::vector<UniPoly> at_y_one{UniPoly::t(), UniPoly(1)};
        if (auto t = find_negative_point(compose(two, at_y_one)))
            return refuted(g, lift({*t, Rational(1)}, active, g.nvars()), "exact-bivariate", trace);
        trace.notes.push_back("exact-bivariate refutation without a located witness point");
        return decided(Status::NotNonnegative, "exact-bivariate", trace);
    }
    return std::nullopt;
}

std::optional<Verdict> pipeline_stage(const MultiPoly& g, const CandidateSetProvider& provider,
                                      const Budget& budget, Trace& trace) {
    trace.provider = provider.name();
    trace.provider_complete = provider.complete();
    const std::vector<MultiPoly> family = provider.candidates(g);
    if (family.empty()) {
        if (provider.complete()) return decided(Status::Nonnegative, "pipeline", trace);
        trace.notes.push_back("candidate family is empty");
        return std::nullopt;
    }
    const IndexRange range(g.nvars(), static_cast<unsigned>(g.total_degree()));
    for (const IndexPair& pair : range) {
        for (const MultiPoly& r : family) {
            if (trace.pipeline_indices_used >= budget.pipeline) {
                trace.notes.push_back("pipeline budget exhausted");
                return std::nullopt;
            }
            ++trace.pipeline_indices_used;
            const PipelineIndex idx{pair.j, pair.beta, r};
            const PipelineBranch branch = pipeline_branch(g, idx);
            if (branch == PipelineBranch::None) continue;

            trace.refuting_index = RefutingIndex{pair.j, pair.beta, r, branch};
            const PipelineRestriction res = pipeline_restriction(g, idx);
            const UniPoly& restricted = branch == PipelineBranch::Plus ? res.g_plus : res.g_minus;
            if (auto t = find_negative_point(restricted)) {
                std::vector<Rational> point;
                for (const auto& d : res.derivatives) point.push_back(branch == PipelineBranch::Plus ? d(*t) : -d(*t));
                return refuted(g, std::move(point), "pipeline", trace);
            }
            trace.notes.push_back("pipeline refutation without a located witness point");
            return decided(Status::NotNonnegative, "pipeline", trace);
        }
    }
    if (provider.complete()) return decided(Status::Nonnegative, "pipeline", trace);
    trace.notes.push_back("index set exhausted with an incomplete provider");
    return std::nullopt;
}

}  // namespace

Verdict decide_nonneg(const MultiPoly& g, const std::optional<std::vector<SosTerm>>& sos,
                      const CandidateSetProvider* provider, const Budget& budget,
                      const DecideOptions& options) {
    if (!g.is_homogeneous()) throw PreconditionError("polynomial is not homogeneous");
    Trace trace;
    if (g.is_zero()) return decided(Status::Nonnegative, "zero", trace);
    if (g.total_degree() % 2 != 0) throw PreconditionError("polynomial has odd degree");

    if (g.total_degree() == 0) {
        if (g.terms().begin()->second.sign() > 0) return decided(Status::Nonnegative, "exact-constant", trace);
        return refuted(g, std::vector<Rational>(g.nvars(), Rational(0)), "exact-constant", trace);
    }

    if (options.use_sos && sos && certifies_nonnegative(*sos, g))
        return decided(Status::Nonnegative, "sos-fast-path", trace);

    if (options.use_exact)
        if (auto v = exact_stage(g, trace)) return *v;

    if (options.external_certificate) return decided(Status::Nonnegative, *options.external_certificate, trace);

    if (options.use_sampler) {
        SampleResult s = sample_refute(g, budget.samples, budget.seed);
        trace.samples_used = s.samples_used;
        if (s.witness) return refuted(g, std::move(*s.witness), "sampler", trace);
    }

    if (options.use_pipeline && provider)
        if (auto v = pipeline_stage(g, *provider, budget, trace)) return *v;

    return decided(Status::Unknown, "none", trace);
}

MapReport analyze_map(const Superoperator& phi, const CandidateSetProvider* provider, const Budget& budget) {
    MapReport report;
    report.n = phi.n();
    const HermitianOperator choi = choi_matrix(phi);
    report.hermiticity_preserving = is_hermiticity_preserving(choi.matrix());
    report.completely_positive = is_completely_positive(phi);

    report.polynomial = positivity_polynomial_from_kraus(phi);
    if (!(positivity_polynomial_from_choi(choi).poly == report.polynomial.poly))
        throw InternalError("positivity polynomial constructions disagree");

    DecideOptions options;
    if (report.completely_positive) options.external_certificate = "choi-psd";
    report.verdict = decide_nonneg(report.polynomial.poly, report.polynomial.sos, provider, budget, options);

    if (report.verdict.witness) {
        auto [x, y] = complex_vectors(phi.n(), *report.verdict.witness);
        report.bilinear_value = evaluate_bilinear_form(choi, x, y);
        report.witness_verified =
            report.bilinear_value->sign() < 0 && *report.bilinear_value == *report.verdict.value;
        report.witness_x = std::move(x);
        report.witness_y = std::move(y);
    }
    return report;
}

}  // namespace posmap
