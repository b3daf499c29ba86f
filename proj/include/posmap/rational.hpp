#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace posmap {

using Integer = mpz_class;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator, so structural equality is value equality.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: numeric literal conversion
    Rational(int value) : value_(value) {}   // NOLINT
    Rational(const Integer& value) : value_(value) {}  // NOLINT
    Rational(const Integer& numerator, const Integer& denominator);
    Rational(long numerator, long denominator);

    /// Parses "p" or "p/q" (optional sign, decimal digits). Non-canonical
    /// input such as "3/6" is reduced.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;

    /// "p" when the denominator is 1, else "p/q".
    std::string str() const;
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace posmap

template <>
struct std::hash<posmap::Rational> {
    std::size_t operator()(const posmap::Rational& q) const;
};
