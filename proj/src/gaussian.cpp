#include "posmap/gaussian.hpp"

#include <cctype>
#include <ostream>

#include "posmap/error.hpp"

namespace posmap {

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

Rational parse_imaginary_coefficient(std::string_view body, std::string_view original) {
    if (body.empty() || body == "+") return Rational(1);
    if (body == "-") return Rational(-1);
    try {
        return Rational::parse(body);
    } catch (const ParseError&) {
        throw ParseError("malformed gaussian rational '" + std::string(original) + "'");
    }
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty gaussian rational");
    if (s.back() != 'i') {
        try {
            return {Rational::parse(s), Rational(0)};
        } catch (const ParseError&) {
            throw ParseError("malformed gaussian rational '" + std::string(text) + "'");
        }
    }
    const std::string_view body = std::string_view(s).substr(0, s.size() - 1);
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) return {Rational(0), parse_imaginary_coefficient(body, text)};
    Rational real;
    try {
        real = Rational::parse(body.substr(0, split));
    } catch (const ParseError&) {
        throw ParseError("malformed gaussian rational '" + std::string(text) + "'");
    }
    return {real, parse_imaginary_coefficient(body.substr(split), text)};
}

std::string GaussianRational::str() const {
    if (im.is_zero()) return re.str();
    if (re.is_zero()) return im.str() + "i";
    return re.str() + (im.sign() > 0 ? "+" : "-") + im.abs().str() + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    Rational r = re * rhs.re - im * rhs.im;
    Rational i = re * rhs.im + im * rhs.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    const Rational d = rhs.norm_sq();
    if (d.is_zero()) throw DivisionByZero();
    *this *= rhs.conj();
    re /= d;
    im /= d;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace posmap
