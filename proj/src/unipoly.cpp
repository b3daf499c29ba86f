#include "posmap/unipoly.hpp"

#include <ostream>

#include "posmap/error.hpp"

namespace posmap {

UniPoly::UniPoly(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

UniPoly UniPoly::monomial(Rational c, unsigned k) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) { return *this = *this * rhs; }

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return {};
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (c.is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return *this * Rational(den_lcm, num_gcd);
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        out += c.abs().str();
        if (k > 0) out += " * " + var + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return out;
}

UniPoly derivative(const UniPoly& f) {
    if (f.degree() < 1) return {};
    std::vector<Rational> out(static_cast<std::size_t>(f.degree()));
    for (std::size_t k = 1; k < f.coefficients().size(); ++k)
        out[k - 1] = f.coefficients()[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(out));
}

UniPoly derivative(const UniPoly& f, unsigned long j) {
    if (j > static_cast<unsigned long>(std::max(f.degree(), 0))) return {};
    UniPoly out = f;
    for (unsigned long k = 0; k < j; ++k) out = derivative(out);
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<Rational> q(r.size() - db);
    const Rational& lead = b.leading();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        const Rational factor = r[k] / lead;
        q[k - db] = factor;
        for (std::size_t m = 0; m <= db; ++m) r[k - db + m] -= factor * b.coefficients()[m];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
    UniPoly result(1);
    UniPoly b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << f.str(); }

}  // namespace posmap
