#include "posmap/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace posmap {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return b < a;
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw DimensionMismatch("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(Exponents exponents, const Rational& c) {
    MultiPoly p(exponents.size());
    p.add_term(exponents, c);
    return p;
}

int MultiPoly::total_degree() const {
    // Graded order puts the highest degree first.
    return terms_.empty() ? -1 : static_cast<int>(posmap::total_degree(terms_.begin()->first));
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = posmap::total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return posmap::total_degree(t.first) == d; });
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

std::vector<std::size_t> MultiPoly::active_variables() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars_; ++v)
        if (degree_in(v) > 0) out.push_back(v);
    return out;
}

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw DimensionMismatch("exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (other.nvars_ != nvars_)
        throw DimensionMismatch("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                                std::to_string(other.nvars_));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
    MultiPoly result = MultiPoly::constant(base.nvars(), Rational(1));
    for (unsigned k = 0; k < exponent; ++k) result = result * base;
    return result;
}

MultiPoly partial(const MultiPoly& f, std::size_t var) {
    if (var >= f.nvars()) throw DimensionMismatch("partial derivative variable out of range");
    MultiPoly out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        out.add_term(d, c * Rational(static_cast<long>(e[var])));
    }
    return out;
}

Rational evaluate(const MultiPoly& f, std::span<const Rational> point) {
    return substitute<Rational>(f, point, [](const Rational& c) { return c; });
}

UniPoly compose(const MultiPoly& g, std::span<const UniPoly> args) {
    return substitute<UniPoly>(g, args, [](const Rational& c) { return UniPoly(c); });
}

UniPoly restrict_line(const MultiPoly& f, std::span<const Rational> base,
                      std::span<const Rational> direction) {
    if (base.size() != f.nvars() || direction.size() != f.nvars())
        throw DimensionMismatch("line base/direction length must equal the variable count");
    std::vector<UniPoly> args;
    args.reserve(f.nvars());
    for (std::size_t v = 0; v < f.nvars(); ++v) args.emplace_back(UniPoly{base[v], direction[v]});
    return compose(f, args);
}

MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images) {
    if (images.empty()) {
        if (f.nvars() != 0) throw DimensionMismatch("substitution expects one image per variable");
        return f;
    }
    const std::size_t m = images.front().nvars();
    return substitute<MultiPoly>(f, images, [m](const Rational& c) { return MultiPoly::constant(m, c); });
}

}  // namespace posmap
