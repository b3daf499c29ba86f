#include <doctest.h>

#include "../tools/quartic.hpp"
#include "oracles.hpp"
#include "posmap/error.hpp"
#include "posmap/poly_text.hpp"
#include "posmap/sturm.hpp"

using namespace posmap;
using posmap::testing::Gen;

namespace {
UniPoly up(const char* text) { return parse_unipoly(text); }

/// a equals c·b for some rational c > 0.
bool positive_multiple(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree() || a.is_zero()) return a == b;
    const Rational c = a.leading() / b.leading();
    return c.sign() > 0 && a == c * b;
}
}  // namespace

TEST_CASE("generalized sequences") {
    auto s = generalized_sturm(up("x^2 - 1"), up("2 x"));
    REQUIRE(s.size() == 3);
    CHECK(positive_multiple(s.elements[2], UniPoly(1)));
    s = generalized_sturm(up("x - 1"), up("x - 1"));
    CHECK(s.size() == 2);
    s = generalized_sturm(up("x^3 - 3 x"), up("3 x^2 - 3"));
    CHECK(s.size() == 4);
    CHECK(s.last().is_constant());
}

TEST_CASE("canonical sequences") {
    auto s = canonical_sturm(up("x^2 - 2 x + 1"), up("x - 1"));
    REQUIRE(s.size() == 2);
    CHECK(s.elements[0] == up("x - 1"));
    CHECK(s.elements[1] == UniPoly(1));
    s = canonical_sturm(up("x^2 - 1"), up("2 x"));
    CHECK(s.size() == 3);
    CHECK(s.last() == UniPoly(1));
    s = canonical_sturm(up("3 x^2 + x"), up("3 x^2 + x"));
    CHECK(s.elements == std::vector<UniPoly>{UniPoly(1), UniPoly(1)});
    CHECK_THROWS_AS(canonical_sturm(UniPoly(), up("x")), PreconditionError);
}

TEST_CASE("signs at infinity and variations") {
    CHECK(sign_at_infinity(up("x^2"), Infinity::Negative) == 1);
    CHECK(sign_at_infinity(up("x^3"), Infinity::Negative) == -1);
    CHECK(sign_at_infinity(UniPoly(-5), Infinity::Positive) == -1);
    CHECK(sign_variations({1, -1, -1, 1}) == 2);
    CHECK(sign_variations({}) == 0);
}

TEST_CASE("nu and Tarski queries") {
    CHECK(nu(up("x^2 - 1"), up("2 x")) == 2);
    CHECK(nu(up("x^2 + 1"), up("2 x")) == 0);
    CHECK(nu(up("x"), UniPoly(1)) == 1);
    CHECK(tarski_query(up("x^2 - 1"), UniPoly(1)) == 2);
    CHECK(tarski_query(up("x^2 - 1"), up("x")) == 0);
    CHECK(tarski_query(up("x^2 - 5 x + 6"), up("x")) == 2);
    CHECK(tarski_query(UniPoly(3), up("x")) == 0);
}

TEST_CASE("joint positivity counts") {
    CHECK(count_joint_positive(up("x^2 - 1"), up("x + 2"), up("x + 2")) == 2);
    CHECK(count_joint_positive(up("x^2 - 1"), up("x"), up("x")) == 1);
    CHECK(count_joint_positive(up("x"), UniPoly(1), UniPoly(1)) == 1);
    SturmLog log;
    (void)count_joint_positive(up("x^3 - x"), up("x"), up("x + 1/2"), &log);
    CHECK(log.sequence_lengths.size() == 4);
}

TEST_CASE("existence of joint positivity") {
    CHECK(exists_joint_positive(up("x"), up("x")));
    CHECK(!exists_joint_positive(up("x"), up("-x")));
    CHECK(exists_joint_positive(up("1 - x^2"), up("x")));
    CHECK(exists_joint_positive(UniPoly(2), up("-x^2 + 1/100")));
    CHECK(!exists_joint_positive(UniPoly(-2), up("x")));
    CHECK(!exists_joint_positive(up("-x^2"), up("-x^2")));
}

TEST_CASE("univariate and bivariate nonnegativity") {
    CHECK(univariate_nonneg(up("x^4 - 2 x^2 + 1")));
    CHECK(!univariate_nonneg(up("x^4 - 1")));
    CHECK(univariate_nonneg(up("x^2")));
    CHECK(!univariate_nonneg(up("x^3")));
    CHECK_THROWS_AS(univariate_nonneg(UniPoly()), PreconditionError);
    const std::vector<std::string> xy = {"x1", "x2"};
    CHECK(bivariate_homogeneous_nonneg(parse_poly("x1^2 + x2^2", xy)));
    CHECK(!bivariate_homogeneous_nonneg(parse_poly("x1^2 - x2^2", xy)));
    CHECK(bivariate_homogeneous_nonneg(pow(parse_poly("x1 - x2", xy), 4)));
    CHECK(!bivariate_homogeneous_nonneg(parse_poly("x1^2 x2^2 - x1^4", xy)));
    CHECK(!bivariate_homogeneous_nonneg(parse_poly("-x1^2", xy)));
    CHECK_THROWS_AS(bivariate_homogeneous_nonneg(parse_poly("x1^3", xy)), PreconditionError);
}

TEST_CASE("property: planted roots") {
    Gen gen(51);
    for (int trial = 0; trial < 300; ++trial) {
        const auto f = posmap::testing::planted(gen);
        const UniPoly g = gen.unipoly(4), p = gen.unipoly(3), q = gen.unipoly(3);
        const UniPoly fp = f.build();
        CHECK(tarski_query(fp, UniPoly(1)) == static_cast<long>(f.roots.size()));
        if (!g.is_zero()) CHECK(tarski_query(fp, g) == posmap::testing::brute_tarski(f, g));
        if (!p.is_zero() && !q.is_zero())
            CHECK(count_joint_positive(fp, p, q) == posmap::testing::brute_joint_positive(f, p, q));
    }
}

TEST_CASE("property: existence against planted roots") {
    Gen gen(52);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pr = posmap::testing::planted(gen, 3), qr = posmap::testing::planted(gen, 3);
        const UniPoly p = pr.build(), q = qr.build();
        const bool expected = posmap::testing::brute_exists_joint_positive(pr, qr);
        CHECK(exists_joint_positive(p, q) == expected);
        CHECK(exists_joint_positive(q, p) == expected);
        const Rational c = Rational(gen.integer(1, 9), gen.integer(1, 9));
        CHECK(exists_joint_positive(c * p, q) == expected);
    }
}

TEST_CASE("property: remainder recursion and final divisor") {
    Gen gen(53);
    for (int trial = 0; trial < 300; ++trial) {
        const UniPoly p = gen.unipoly(7), q = gen.unipoly(6);
        if (p.is_zero() || q.is_zero()) continue;
        const auto s = generalized_sturm(p, q);
        CHECK(s.elements[0] == p);
        CHECK(s.elements[1] == q);
        for (std::size_t k = 1; k + 1 < s.size(); ++k)
            CHECK(positive_multiple(s.elements[k + 1], -rem(s.elements[k - 1], s.elements[k])));
        for (const auto& h : s.elements) CHECK(rem(h, s.last()).is_zero());
        const auto c = canonical_sturm(p, q);
        CHECK(c.last() == UniPoly(1));
    }
}

TEST_CASE("property: quartic criterion agrees with Sturm") {
    for (const auto& f : posmap::quartic::random_quartics(200, 54)) CHECK(posmap::quartic::criterion_nonneg(f) == posmap::quartic::sturm_nonneg(f));
}
