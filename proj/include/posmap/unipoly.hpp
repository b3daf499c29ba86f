#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posmap/rational.hpp"

namespace posmap {

/// Dense univariate polynomial over the rationals, coefficients by
/// ascending degree. The zero polynomial has no coefficients and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(Rational constant);  // NOLINT: constants embed implicitly
    UniPoly(int constant) : UniPoly(Rational(constant)) {}  // NOLINT
    explicit UniPoly(std::vector<Rational> ascending);
    UniPoly(std::initializer_list<Rational> ascending);

    /// The monomial c·t^k.
    static UniPoly monomial(Rational c, unsigned k);
    static UniPoly t() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of t^k (zero beyond the degree).
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
    const Rational& leading() const;
    std::span<const Rational> coefficients() const { return coeffs_; }

    Rational operator()(const Rational& t) const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Dividing by the positive content: integer coefficients with gcd 1 and
    /// the same sign pattern. Zero stays zero.
    UniPoly primitive() const;

    /// "3 * t^2 - 1" style rendering in the given variable.
    std::string str(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

UniPoly derivative(const UniPoly& f);

/// j-fold derivative; zero once j exceeds the degree.
UniPoly derivative(const UniPoly& f, unsigned long j);

/// Euclidean division a = q·b + r with deg r < deg b. Throws DivisionByZero
/// for b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

inline UniPoly rem(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

/// a / b when b divides a exactly; throws InternalError otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const UniPoly& f);

}  // namespace posmap
