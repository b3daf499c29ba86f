#pragma once

#include <cstddef>
#include <vector>

#include "posmap/multipoly.hpp"
#include "posmap/unipoly.hpp"

namespace posmap {

enum class Infinity { Negative, Positive };

/// Signed remainder sequence h0 = p, h1 = q, h_{k+1} = -rem(h_{k-1}, h_k),
/// stopped at the first h_k dividing h_{k-1}. Remainders are rescaled by
/// positive rationals to primitive integer form, which leaves every sign
/// pattern unchanged.
struct SturmSequence {
    enum class Kind { Generalized, Canonical };

    std::vector<UniPoly> elements;
    Kind kind = Kind::Generalized;

    std::size_t size() const { return elements.size(); }
    const UniPoly& last() const { return elements.back(); }
};

/// Records the length of every Sturm sequence built during a query.
struct SturmLog {
    std::vector<std::size_t> sequence_lengths;
};

SturmSequence generalized_sturm(const UniPoly& p, const UniPoly& q);

/// Generalized sequence divided through by its last element, ending in 1.
SturmSequence canonical_sturm(const UniPoly& p, const UniPoly& q);

/// +1 when h tends to +infinity at the given end (for constants, the sign
/// of the constant), else -1.
int sign_at_infinity(const UniPoly& h, Infinity end);

/// Number of adjacent sign changes in a ±1 word.
std::size_t sign_variations(const std::vector<int>& signs);

/// Variation count at -infinity minus variation count at +infinity over the
/// canonical sequence of (p, q).
long nu(const UniPoly& p, const UniPoly& q, SturmLog* log = nullptr);

/// Tarski query: #{f = 0, g > 0} - #{f = 0, g < 0} over distinct real roots,
/// computed as nu(f, f'·g). A constant f has no roots and yields 0.
long tarski_query(const UniPoly& f, const UniPoly& g, SturmLog* log = nullptr);

/// #{x : f(x) = 0, p(x) > 0, q(x) > 0}.
long count_joint_positive(const UniPoly& f, const UniPoly& p, const UniPoly& q,
                          SturmLog* log = nullptr);

/// Decides whether some real x has p(x) > 0 and q(x) > 0.
///
/// Both nonconstant: true when p and q both tend to +infinity at the same
/// end; otherwise every connected component of {p > 0, q > 0} is a bounded
/// interval on whose ends pq vanishes, so it holds an interior critical point
/// of pq and the question reduces to count_joint_positive((pq)', p, q) != 0.
/// A positive constant p reduces to "q > 0 somewhere", a non-positive
/// constant makes the answer false.
bool exists_joint_positive(const UniPoly& p, const UniPoly& q, SturmLog* log = nullptr);

/// True iff g(x) >= 0 for all real x. Throws PreconditionError on zero.
bool univariate_nonneg(const UniPoly& g, SturmLog* log = nullptr);

/// Nonnegativity on R^2 of a homogeneous polynomial of even degree in two
/// variables, via g(t, 1) >= 0 on R and g(1, 0) >= 0.
bool bivariate_homogeneous_nonneg(const MultiPoly& g, SturmLog* log = nullptr);

}  // namespace posmap
