#include "posmap/nonneg.hpp"
#include "posmap/sturm.hpp"

namespace posmap {

std::vector<Integer> beta_template(std::size_t n, const Integer& i) {
    std::vector<Integer> beta(n + 1);
    for (std::size_t k = 0; k < n; ++k)
        mpz_pow_ui(beta[k].get_mpz_t(), i.get_mpz_t(), static_cast<unsigned long>(n - 1 - k));
    beta[n] = 0;
    return beta;
}

IndexRange::IndexRange(std::size_t n, unsigned d) : n_(n), d_(d) {
    if (n == 0) throw PreconditionError("index range needs at least one variable");
    if (d < 2 || d % 2 != 0) throw PreconditionError("index range needs an even degree >= 2");
    mpz_ui_pow_ui(top_.get_mpz_t(), d, 2 * static_cast<unsigned long>(n));
    top_ *= static_cast<unsigned long>(n);
}

IndexRange::iterator::iterator(const IndexRange* range, bool done) : range_(range), done_(done) {
    if (!done_) current_ = {Integer(0), Integer(0), beta_template(range_->n(), Integer(0))};
}

IndexRange::iterator& IndexRange::iterator::operator++() {
    if (done_) return *this;
    if (range_->n() > 1 && current_.i < range_->top()) {
        ++current_.i;
        current_.beta = beta_template(range_->n(), current_.i);
        return *this;
    }
    if (current_.j >= range_->top()) {
        done_ = true;
        return *this;
    }
    ++current_.j;
    current_.i = 0;
    current_.beta = beta_template(range_->n(), current_.i);
    return *this;
}

PipelineRestriction pipeline_restriction(const MultiPoly& g, const PipelineIndex& idx) {
    const std::size_t n = g.nvars();
    if (idx.r.nvars() != n + 1)
        throw PreconditionError("candidate polynomial must have " + std::to_string(n + 1) + " variables");
    if (idx.beta.size() != n + 1) throw PreconditionError("beta must have " + std::to_string(n + 1) + " entries");
    if (idx.j < 0) throw PreconditionError("derivative order must be non-negative");

    std::vector<Rational> base;
    base.reserve(n + 1);
    for (const auto& b : idx.beta) base.emplace_back(b);
    std::vector<Rational> direction(n + 1, Rational(0));
    direction[n] = Rational(1);

    PipelineRestriction out;
    out.r.reserve(n + 1);
    for (std::size_t v = 0; v <= n; ++v) out.r.push_back(restrict_line(partial(idx.r, v), base, direction));

    const bool small_j = idx.j.fits_ulong_p();
    const unsigned long j = small_j ? idx.j.get_ui() : 0;
    std::vector<UniPoly> negated;
    for (std::size_t v = 0; v < n; ++v) {
        out.derivatives.push_back(small_j ? derivative(out.r[v], j) : UniPoly());
        negated.push_back(-out.derivatives.back());
    }
    out.g_plus = compose(g, out.derivatives);
    out.g_minus = compose(g, negated);
    return out;
}

PipelineBranch pipeline_branch(const MultiPoly& g, const PipelineIndex& idx) {
    const PipelineRestriction res = pipeline_restriction(g, idx);
    const UniPoly& last = res.r.back();
    if (last.is_zero()) return PipelineBranch::None;
    if (!res.g_plus.is_zero() && exists_joint_positive(-res.g_plus, last)) return PipelineBranch::Plus;
    if (!res.g_minus.is_zero() && exists_joint_positive(-res.g_minus, -last)) return PipelineBranch::Minus;
    return PipelineBranch::None;
}

bool pipeline_test(const MultiPoly& g, const PipelineIndex& idx) {
    return pipeline_branch(g, idx) != PipelineBranch::None;
}

}  // namespace posmap
