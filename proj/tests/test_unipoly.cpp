#include <doctest.h>

#include "oracles.hpp"
#include "posmap/error.hpp"
#include "posmap/poly_text.hpp"
#include "posmap/unipoly.hpp"

using namespace posmap;
using posmap::testing::Gen;

namespace {
UniPoly up(const char* text) { return parse_unipoly(text); }
}  // namespace

TEST_CASE("unipoly ring operations") {
    CHECK(up("x + 1") * up("x - 1") == up("x^2 - 1"));
    CHECK(up("x^3 + 2") + UniPoly() == up("x^3 + 2"));
    CHECK((up("x^2 + 1") - up("x^2 + 1")).is_zero());
    CHECK(UniPoly().degree() == -1);
    CHECK(up("2*x^3 - x").leading() == Rational(2));
    CHECK(up("x^2 - 1")(Rational(3)) == Rational(8));
    CHECK(up("6 x^2 + 4/3 x").primitive() == up("9 x^2 + 2 x"));
    CHECK(up("-2 x + 4").primitive() == up("-x + 2"));
}

TEST_CASE("unipoly derivatives") {
    CHECK(derivative(up("x^3 - 3 x")) == up("3 x^2 - 3"));
    CHECK(derivative(UniPoly(5)).is_zero());
    CHECK(derivative(up("x^3"), 2) == up("6 x"));
    CHECK(derivative(up("x^3"), 5).is_zero());
    CHECK(derivative(up("x^4 + x"), 1) == up("4 x^3 + 1"));
    CHECK(derivative(up("x^4 + x"), 0) == up("x^4 + x"));
}

TEST_CASE("unipoly division") {
    auto [q, r] = divmod(up("x^3 - 3 x"), up("3 x^2 - 3"));
    CHECK(q == up("1/3 x"));
    CHECK(r == up("-2 x"));
    std::tie(q, r) = divmod(up("x^2 - 1"), up("x - 1"));
    CHECK(q == up("x + 1"));
    CHECK(r.is_zero());
    std::tie(q, r) = divmod(up("x"), up("x^2"));
    CHECK(q.is_zero());
    CHECK(r == up("x"));
    CHECK_THROWS_AS(divmod(up("x"), UniPoly()), DivisionByZero);
    CHECK(exact_div(up("x^2 - 1"), up("x + 1")) == up("x - 1"));
    CHECK_THROWS_AS(exact_div(up("x^2 + 1"), up("x + 1")), InternalError);
}

TEST_CASE("unipoly rendering") {
    CHECK(up("x^2 - 1").str() == "1 * x^2 - 1");
    CHECK(up("-1/2 t").str("t") == "-1/2 * t");
    CHECK(UniPoly().str() == "0");
}

TEST_CASE("property: divmod reconstruction") {
    Gen gen(21);
    for (int trial = 0; trial < 400; ++trial) {
        const UniPoly a = gen.unipoly(8);
        UniPoly b = gen.unipoly(5);
        if (b.is_zero()) b = UniPoly(1);
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("property: derivative is linear and obeys the product rule") {
    Gen gen(22);
    for (int trial = 0; trial < 300; ++trial) {
        const UniPoly f = gen.unipoly(6), g = gen.unipoly(6);
        const Rational c = gen.rational();
        CHECK(derivative(f + c * g) == derivative(f) + c * derivative(g));
        CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
        CHECK(derivative(f, 2) == derivative(derivative(f)));
    }
}
