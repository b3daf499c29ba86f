#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "posmap/rational.hpp"

namespace posmap {

/// Complex number with rational real and imaginary parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int real) : re(real) {}  // NOLINT
    GaussianRational(long real) : re(real) {}  // NOLINT
    GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    /// Accepts "a", "bi", "a+bi", "a-bi" with rational a, b; a bare "i" or
    /// "-i" means unit coefficient.
    static GaussianRational parse(std::string_view text);

    /// Canonical rendering: "a" when real, "bi" when purely imaginary
    /// (including "0"), else "a+bi" / "a-bi".
    std::string str() const;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm_sq() const { return re * re + im * im; }

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re, -im}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline Rational norm_sq(const GaussianRational& z) { return z.norm_sq(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace posmap
