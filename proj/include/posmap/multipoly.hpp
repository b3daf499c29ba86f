#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "posmap/error.hpp"
#include "posmap/rational.hpp"
#include "posmap/unipoly.hpp"

namespace posmap {

using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order, greatest first: higher total degree wins,
/// ties broken lexicographically on the exponent vector.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over the rationals in a fixed number of variables.
/// Variables are addressed 0-based. Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    explicit MultiPoly(std::size_t nvars = 1) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Rational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);
    static MultiPoly monomial(Exponents exponents, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Largest total degree of a term; -1 for the zero polynomial.
    int total_degree() const;
    /// Zero polynomial counts as homogeneous.
    bool is_homogeneous() const;
    /// Degree of the given variable across all terms.
    unsigned degree_in(std::size_t var) const;
    /// Indices of variables that occur with positive exponent.
    std::vector<std::size_t> active_variables() const;

    Rational coeff(const Exponents& e) const;

    /// Adds c·x^e in place.
    void add_term(const Exponents& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void check_compatible(const MultiPoly& other) const;

    std::size_t nvars_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Formal partial derivative in variable `var` (0-based).
MultiPoly partial(const MultiPoly& f, std::size_t var);

/// Evaluates f with each variable replaced by an element of a commutative
/// ring. `lift` embeds a rational coefficient into the ring. Powers of each
/// argument are computed once.
template <class Ring, class Lift>
Ring substitute(const MultiPoly& f, std::span<const Ring> args, Lift&& lift) {
    if (args.size() != f.nvars())
        throw DimensionMismatch("substitution expects " + std::to_string(f.nvars()) +
                                " arguments, got " + std::to_string(args.size()));
    std::vector<std::vector<Ring>> powers(f.nvars());
    for (std::size_t v = 0; v < f.nvars(); ++v) {
        const unsigned deg = f.degree_in(v);
        powers[v].reserve(deg + 1);
        powers[v].push_back(lift(Rational(1)));
        for (unsigned k = 1; k <= deg; ++k) powers[v].push_back(powers[v].back() * args[v]);
    }
    Ring acc = lift(Rational(0));
    for (const auto& [e, c] : f.terms()) {
        Ring term = lift(c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) term = term * powers[v][e[v]];
        acc = acc + term;
    }
    return acc;
}

Rational evaluate(const MultiPoly& f, std::span<const Rational> point);

/// t ↦ f(base + t·direction) as an exact univariate polynomial.
UniPoly restrict_line(const MultiPoly& f, std::span<const Rational> base,
                      std::span<const Rational> direction);

/// t ↦ g(args[0](t), ..., args[n-1](t)).
UniPoly compose(const MultiPoly& g, std::span<const UniPoly> args);

/// Multivariate substitution: variable v of f becomes images[v]. All images
/// must share one variable count.
MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images);

}  // namespace posmap
