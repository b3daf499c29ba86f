#include "posmap/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "posmap/error.hpp"

namespace posmap {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t k = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t m = 0; m < n; ++m, ++k) {
            if (s[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (k < s.size()) {
        const char c = s[k];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const std::size_t l = line, cl = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t e = k;
            while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
            out.push_back({Tok::Number, std::string(s.substr(k, e - k)), l, cl});
            advance(e - k);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t e = k;
            while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_')) ++e;
            out.push_back({Tok::Ident, std::string(s.substr(k, e - k)), l, cl});
            advance(e - k);
        } else {
            Tok kind;
            switch (c) {
                case '+': kind = Tok::Plus; break;
                case '-': kind = Tok::Minus; break;
                case '*': kind = Tok::Star; break;
                case '/': kind = Tok::Slash; break;
                case '^': kind = Tok::Caret; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
            }
            out.push_back({kind, std::string(1, c), l, cl});
            advance(1);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

/// Recursive-descent parser over the token stream. Variable lookup is
/// delegated so both the fixed-name and discovery modes share the grammar.
template <class Lookup>
class Parser {
public:
    Parser(std::vector<Token> tokens, std::size_t nvars, Lookup lookup)
        : toks_(std::move(tokens)), nvars_(nvars), lookup_(std::move(lookup)) {}

    MultiPoly parse() {
        MultiPoly result(nvars_);
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                sign = next().kind == Tok::Minus ? -1 : 1;
            } else if (!first) {
                break;
            }
            auto [e, c] = term();
            result.add_term(e, sign < 0 ? -c : c);
            first = false;
        }
        if (peek().kind != Tok::End) fail("expected '+', '-' or end of input");
        return result;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg + (t.kind == Tok::End ? "" : " near '" + t.text + "'"), t.line, t.column);
    }

    bool starts_factor() const { return peek().kind == Tok::Number || peek().kind == Tok::Ident; }

    std::pair<Exponents, Rational> term() {
        Exponents e(nvars_, 0);
        Rational c(1);
        if (!starts_factor()) fail("expected a number or variable");
        while (true) {
            factor(e, c);
            if (peek().kind == Tok::Star) {
                next();
                if (!starts_factor()) fail("expected a factor after '*'");
            } else if (!starts_factor()) {
                break;
            }
        }
        return {std::move(e), std::move(c)};
    }

    void factor(Exponents& e, Rational& c) {
        const Token t = next();
        if (t.kind == Tok::Number) {
            Integer num(t.text, 10);
            Integer den(1);
            if (peek().kind == Tok::Slash) {
                next();
                if (peek().kind != Tok::Number) fail("expected denominator after '/'");
                den = Integer(next().text, 10);
                if (den == 0) throw ParseError("zero denominator", t.line, t.column);
            }
            c *= Rational(num, den);
            return;
        }
        const std::size_t var = lookup_(t);
        unsigned long k = 1;
        if (peek().kind == Tok::Caret) {
            next();
            if (peek().kind != Tok::Number) fail("expected exponent after '^'");
            const Token& ex = next();
            try {
                k = std::stoul(ex.text);
            } catch (const std::exception&) {
                throw ParseError("exponent out of range", ex.line, ex.column);
            }
        }
        e[var] += static_cast<std::uint32_t>(k);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::size_t nvars_;
    Lookup lookup_;
};

bool natural_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        std::size_t k = s.size();
        while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
        const std::string digits = s.substr(k);
        std::optional<Integer> n;
        if (!digits.empty()) n = Integer(digits, 10);
        return std::pair{s.substr(0, k), n};
    };
    auto [pa, na] = split(a);
    auto [pb, nb] = split(b);
    if (pa != pb) return pa < pb;
    if (na.has_value() != nb.has_value()) return !na.has_value();
    if (na && *na != *nb) return *na < *nb;
    return a < b;
}

}  // namespace

std::vector<std::string> default_variable_names(std::size_t nvars) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < nvars; ++v) out.push_back("x" + std::to_string(v + 1));
    return out;
}

std::string to_text(const MultiPoly& f, std::span<const std::string> names) {
    if (names.size() != f.nvars()) throw DimensionMismatch("one name per variable required");
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : f.terms()) {
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        out += c.abs().str();
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += ' ';
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        if (!mono.empty()) out += " * " + mono;
    }
    return out;
}

std::string to_text(const MultiPoly& f) { return to_text(f, default_variable_names(f.nvars())); }

MultiPoly parse_poly(std::string_view text, std::span<const std::string> names) {
    auto lookup = [names](const Token& t) -> std::size_t {
        auto it = std::find(names.begin(), names.end(), t.text);
        if (it == names.end()) throw ParseError("unknown variable '" + t.text + "'", t.line, t.column);
        return static_cast<std::size_t>(it - names.begin());
    };
    return Parser(tokenize(text), names.size(), lookup).parse();
}

ParsedPoly parse_poly(std::string_view text) {
    std::set<std::string> seen;
    for (const Token& t : tokenize(text))
        if (t.kind == Tok::Ident) seen.insert(t.text);
    std::vector<std::string> names(seen.begin(), seen.end());
    std::sort(names.begin(), names.end(), natural_less);
    if (names.empty()) names.push_back("x");  // constants still need one variable slot
    MultiPoly poly = parse_poly(text, names);
    return {std::move(poly), std::move(names)};
}

UniPoly parse_unipoly(std::string_view text) {
    ParsedPoly parsed = parse_poly(text);
    if (parsed.names.size() != 1)
        throw ParseError("expected a univariate polynomial, found " +
                         std::to_string(parsed.names.size()) + " variables");
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(parsed.poly.total_degree(), 0)) + 1);
    for (const auto& [e, c] : parsed.poly.terms()) coeffs[e[0]] = c;
    return UniPoly(std::move(coeffs));
}

}  // namespace posmap
