#pragma once

#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "posmap/choi.hpp"
#include "posmap/multipoly.hpp"
#include "posmap/sos.hpp"
#include "posmap/unipoly.hpp"

namespace posmap {

// ---------------------------------------------------------------------------
// Index sets of the homogeneous reduction
// ---------------------------------------------------------------------------

/// One (j, beta) pair. `i` is the integer beta was instantiated from.
struct IndexPair {
    Integer j;
    Integer i;
    std::vector<Integer> beta;
};

/// beta = (i^{n-1}, ..., i, 1, 0) in N^{n+1}, with 0^0 = 1.
std::vector<Integer> beta_template(std::size_t n, const Integer& i);

/// Lazy view of J(n,d) × B(n,d), where J = {0, ..., n·d^{2n}} and B holds
/// the instantiations of beta_template for i in the same range. Iterates j
/// outermost. For n = 1 the template does not depend on i and B has a single
/// element.
class IndexRange {
public:
    IndexRange(std::size_t n, unsigned d);

    std::size_t n() const { return n_; }
    unsigned d() const { return d_; }
    /// n·d^{2n}.
    const Integer& top() const { return top_; }
    Integer j_count() const { return top_ + 1; }
    Integer beta_count() const { return n_ == 1 ? Integer(1) : Integer(top_ + 1); }
    Integer size() const { return j_count() * beta_count(); }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = IndexPair;
        using difference_type = std::ptrdiff_t;
        using pointer = const IndexPair*;
        using reference = const IndexPair&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || (a.current_.j == b.current_.j && a.current_.i == b.current_.i));
        }

    private:
        friend class IndexRange;
        iterator(const IndexRange* range, bool done);

        const IndexRange* range_ = nullptr;
        IndexPair current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(this, false); }
    iterator end() const { return iterator(this, true); }

private:
    std::size_t n_;
    unsigned d_;
    Integer top_;
};

/// (j, beta, r) with r a polynomial in n+1 variables.
struct PipelineIndex {
    Integer j;
    std::vector<Integer> beta;
    MultiPoly r;
};

/// Restrictions built for one pipeline index.
struct PipelineRestriction {
    std::vector<UniPoly> r;            ///< r_1(t), ..., r_{n+1}(t)
    std::vector<UniPoly> derivatives;  ///< r_1^{(j)}, ..., r_n^{(j)}
    UniPoly g_plus;
    UniPoly g_minus;
};

PipelineRestriction pipeline_restriction(const MultiPoly& g, const PipelineIndex& idx);

enum class PipelineBranch { None, Plus, Minus };

/// Which existential condition (if any) holds:
///   Plus:  ∃t  -g⁺(t) > 0 ∧  r_{n+1}(t) > 0
///   Minus: ∃t  -g⁻(t) > 0 ∧ -r_{n+1}(t) > 0
/// A zero polynomial on either side makes that branch false.
PipelineBranch pipeline_branch(const MultiPoly& g, const PipelineIndex& idx);

/// True iff this index refutes g >= 0.
bool pipeline_test(const MultiPoly& g, const PipelineIndex& idx);

// ---------------------------------------------------------------------------
// Candidate families
// ---------------------------------------------------------------------------

/// Source of the finite polynomial family in u_1, ..., u_{n+1} that the
/// reduction ranges over. Only a provider reporting complete() may back a
/// "nonnegative" conclusion; a faithful implementation of Renegar's
/// candidate construction for the existential theory of the reals belongs
/// here.
class CandidateSetProvider {
public:
    virtual ~CandidateSetProvider() = default;

    virtual std::string name() const = 0;
    virtual bool complete() const = 0;
    /// Deterministic: the same g yields the same sequence.
    virtual std::vector<MultiPoly> candidates(const MultiPoly& g) const = 0;
};

class EmptyProvider final : public CandidateSetProvider {
public:
    std::string name() const override { return "empty"; }
    bool complete() const override { return false; }
    std::vector<MultiPoly> candidates(const MultiPoly&) const override { return {}; }
};

/// Fixed family, mainly for exercising the pipeline. The completeness flag is
/// taken on trust.
class FixedProvider final : public CandidateSetProvider {
public:
    FixedProvider(std::vector<MultiPoly> family, bool complete, std::string name = "fixed")
        : family_(std::move(family)), complete_(complete), name_(std::move(name)) {}

    std::string name() const override { return name_; }
    bool complete() const override { return complete_; }
    std::vector<MultiPoly> candidates(const MultiPoly& g) const override;

private:
    std::vector<MultiPoly> family_;
    bool complete_;
    std::string name_;
};

/// Incomplete family turning the pipeline into exact line searches: for a
/// direction c, r_c = Σ_i (c_i·u_i·u_{n+1} + u_i²/2) gives r_i(t) = beta_i + c_i·t,
/// so at j = 0 the test decides whether g is negative anywhere on the line
/// beta + t·c (on the side selected by the sign of Σ c_i·beta_i). Directions:
/// e_i, then e_i + e_k and e_i - e_k for i < k.
class LineProbeProvider final : public CandidateSetProvider {
public:
    std::string name() const override { return "line-probe"; }
    bool complete() const override { return false; }
    std::vector<MultiPoly> candidates(const MultiPoly& g) const override;

    static MultiPoly probe(std::span<const Rational> direction);
};

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Deterministic point schedule over `nvars` coordinates, of which only
/// `active` are ever nonzero: first every 0/±1 pattern supported on at most
/// eight active coordinates (by support size, then combination, then sign
/// mask), then seeded pseudorandom rationals whose numerator and denominator
/// bounds double every 1000 points (capped at 2^20).
class SampleSchedule {
public:
    SampleSchedule(std::size_t nvars, std::vector<std::size_t> active, std::uint64_t seed);

    std::vector<Rational> next();
    std::uint64_t produced() const { return produced_; }

private:
    void advance_structured();

    std::size_t nvars_;
    std::vector<std::size_t> active_;
    std::mt19937_64 rng_;
    std::uint64_t produced_ = 0;
    std::uint64_t random_produced_ = 0;

    bool structured_done_ = false;
    std::size_t support_ = 0;
    std::vector<std::size_t> combo_;
    std::uint64_t mask_ = 0;
};

struct SampleResult {
    std::optional<std::vector<Rational>> witness;
    std::optional<Rational> value;
    std::uint64_t samples_used = 0;
};

/// Evaluates g along SampleSchedule until a negative value or the budget.
SampleResult sample_refute(const MultiPoly& g, std::uint64_t budget, std::uint64_t seed);

/// Looks for a rational t with f(t) < 0 on dyadic grids of growing
/// resolution inside the Cauchy root bound. Gives up after `max_evaluations`.
std::optional<Rational> find_negative_point(const UniPoly& f, std::uint64_t max_evaluations = 1u << 16);

// ---------------------------------------------------------------------------
// Decision
// ---------------------------------------------------------------------------

enum class Status { Nonnegative, NotNonnegative, Unknown };

std::string to_string(Status s);

struct Budget {
    std::uint64_t samples = 10000;
    std::uint64_t pipeline = 1000;
    std::uint64_t seed = 0;
};

struct DecideOptions {
    bool use_sos = true;
    bool use_exact = true;
    bool use_sampler = true;
    bool use_pipeline = true;
    /// Set by callers that hold an exact nonnegativity proof obtained
    /// elsewhere; names the engine recorded in the trace.
    std::optional<std::string> external_certificate;
};

struct RefutingIndex {
    Integer j;
    std::vector<Integer> beta;
    MultiPoly r;
    PipelineBranch branch = PipelineBranch::None;
};

struct Trace {
    /// zero, exact-constant, sos-fast-path, exact-univariate, exact-bivariate,
    /// sampler, pipeline, an external certificate name, or none.
    std::string engine = "none";
    std::uint64_t samples_used = 0;
    std::uint64_t pipeline_indices_used = 0;
    std::string provider;
    bool provider_complete = false;
    std::optional<RefutingIndex> refuting_index;
    std::vector<std::string> notes;
};

struct Verdict {
    Status status = Status::Unknown;
    /// Point (in g's variable order) with the exact value g(witness) < 0.
    std::optional<std::vector<Rational>> witness;
    std::optional<Rational> value;
    Trace trace;
};

/// Decides g >= 0 on R^n for homogeneous g of even degree. Every stage is
/// sound: "nonnegative" comes only from the zero/constant checks, a verified
/// SOS, the exact one- and two-variable deciders, an external certificate, or
/// a full pipeline pass with a complete provider; "not_nonnegative" comes with
/// an exact witness or a recorded refuting index.
Verdict decide_nonneg(const MultiPoly& g, const std::optional<std::vector<SosTerm>>& sos,
                      const CandidateSetProvider* provider, const Budget& budget,
                      const DecideOptions& options = {});

inline Verdict decide_nonneg(const MultiPoly& g, const CandidateSetProvider* provider,
                             const Budget& budget, const DecideOptions& options = {}) {
    return decide_nonneg(g, std::nullopt, provider, budget, options);
}

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------

struct MapReport {
    std::size_t n = 0;
    bool hermiticity_preserving = false;
    bool completely_positive = false;
    PositivityPolynomial polynomial;
    Verdict verdict;
    /// Witness as complex vectors, with ⟨x⊗y|J(Φ)|x⊗y⟩ recomputed directly.
    std::optional<CVector> witness_x;
    std::optional<CVector> witness_y;
    std::optional<Rational> bilinear_value;
    bool witness_verified = false;
};

/// Positivity analysis of Φ: Choi matrix, CP test, positivity polynomial
/// from both constructions (which must agree), and the nonnegativity verdict.
/// When the SOS and exact stages do not decide, a completely positive map is
/// certified nonnegative by its PSD Choi matrix before any sampling.
MapReport analyze_map(const Superoperator& phi, const CandidateSetProvider* provider, const Budget& budget);

}  // namespace posmap
