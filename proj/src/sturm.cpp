#include "posmap/sturm.hpp"

#include "posmap/error.hpp"

namespace posmap {

namespace {

void require_nonzero(const UniPoly& f, const char* what) {
    if (f.is_zero()) throw PreconditionError(std::string(what) + " must be a nonzero polynomial");
}

}  // namespace

SturmSequence generalized_sturm(const UniPoly& p, const UniPoly& q) {
    require_nonzero(p, "first Sturm argument");
    require_nonzero(q, "second Sturm argument");
    SturmSequence seq;
    seq.elements = {p, q};
    while (true) {
        const std::size_t k = seq.elements.size() - 1;
        UniPoly r = rem(seq.elements[k - 1], seq.elements[k]);
        if (r.is_zero()) break;
        seq.elements.push_back((-r).primitive());
    }
    return seq;
}

SturmSequence canonical_sturm(const UniPoly& p, const UniPoly& q) {
    SturmSequence seq = generalized_sturm(p, q);
    const UniPoly divisor = seq.last();
    for (auto& h : seq.elements) h = exact_div(h, divisor);
    seq.kind = SturmSequence::Kind::Canonical;
    return seq;
}

int sign_at_infinity(const UniPoly& h, Infinity end) {
    require_nonzero(h, "polynomial");
    const int lead = h.leading().sign();
    if (end == Infinity::Positive || h.degree() % 2 == 0) return lead;
    return -lead;
}

std::size_t sign_variations(const std::vector<int>& signs) {
    std::size_t count = 0;
    for (std::size_t k = 1; k < signs.size(); ++k)
        if (signs[k] != signs[k - 1]) ++count;
    return count;
}

long nu(const UniPoly& p, const UniPoly& q, SturmLog* log) {
    const SturmSequence seq = canonical_sturm(p, q);
    if (log) log->sequence_lengths.push_back(seq.size());
    std::vector<int> minus, plus;
    for (const auto& h : seq.elements) {
        minus.push_back(sign_at_infinity(h, Infinity::Negative));
        plus.push_back(sign_at_infinity(h, Infinity::Positive));
    }
    return static_cast<long>(sign_variations(minus)) - static_cast<long>(sign_variations(plus));
}

long tarski_query(const UniPoly& f, const UniPoly& g, SturmLog* log) {
    require_nonzero(f, "Tarski query polynomial");
    require_nonzero(g, "Tarski query sign polynomial");
    if (f.is_constant()) return 0;
    return nu(f, derivative(f) * g, log);
}

long count_joint_positive(const UniPoly& f, const UniPoly& p, const UniPoly& q, SturmLog* log) {
    require_nonzero(f, "root polynomial");
    require_nonzero(p, "first sign polynomial");
    require_nonzero(q, "second sign polynomial");
    const UniPoly pq = p * q;
    const long sum = tarski_query(f, pq * pq, log) + tarski_query(f, p * pq, log) +
                     tarski_query(f, pq * q, log) + tarski_query(f, pq, log);
    if (sum % 4 != 0)
        throw InternalError("joint-positive count is not integral: " + std::to_string(sum) + "/4");
    return sum / 4;
}

bool exists_joint_positive(const UniPoly& p, const UniPoly& q, SturmLog* log) {
    require_nonzero(p, "first polynomial");
    require_nonzero(q, "second polynomial");
    if (p.is_constant() && q.is_constant()) return p.leading().sign() > 0 && q.leading().sign() > 0;
    if (p.is_constant()) return p.leading().sign() > 0 && exists_joint_positive(q, q, log);
    if (q.is_constant()) return q.leading().sign() > 0 && exists_joint_positive(p, p, log);

    for (Infinity end : {Infinity::Negative, Infinity::Positive})
        if (sign_at_infinity(p, end) > 0 && sign_at_infinity(q, end) > 0) return true;

    const UniPoly critical = derivative(p * q);
    return count_joint_positive(critical, p, q, log) != 0;
}

bool univariate_nonneg(const UniPoly& g, SturmLog* log) {
    require_nonzero(g, "polynomial");
    const UniPoly neg = -g;
    return !exists_joint_positive(neg, neg, log);
}

bool bivariate_homogeneous_nonneg(const MultiPoly& g, SturmLog* log) {
    if (g.nvars() != 2) throw PreconditionError("bivariate decision needs exactly two variables");
    if (!g.is_homogeneous()) throw PreconditionError("polynomial is not homogeneous");
    if (g.is_zero()) return true;
    if (g.total_degree() % 2 != 0) throw PreconditionError("polynomial has odd degree");

    const std::vector<UniPoly> at_y_one{UniPoly::t(), UniPoly(1)};
    const UniPoly dehomogenized = compose(g, at_y_one);
    const std::vector<Rational> x_axis{Rational(1), Rational(0)};
    if (evaluate(g, x_axis).sign() < 0) return false;
    if (dehomogenized.is_zero()) return true;
    return univariate_nonneg(dehomogenized, log);
}

}  // namespace posmap
