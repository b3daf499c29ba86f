#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "posmap/choi.hpp"
#include "posmap/error.hpp"
#include "posmap/poly_text.hpp"
#include "posmap/sos.hpp"

using namespace posmap;
using posmap::testing::Gen;

namespace {
CMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = GaussianRational(1);
    return m;
}

CMatrix identity(std::size_t n) { return CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)); }

Superoperator transposition2() {
    CMatrix s = unit(2, 0, 1) + unit(2, 1, 0), a = unit(2, 0, 1) - unit(2, 1, 0);
    return Superoperator(2, {{Rational(1), unit(2, 0, 0)},
                             {Rational(1), unit(2, 1, 1)},
                             {Rational(1, 2), s},
                             {Rational(-1, 2), a}});
}

Superoperator trace_map(std::size_t n) {
    std::vector<KrausTerm> terms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) terms.push_back({Rational(1), unit(n, i, j)});
    return Superoperator(n, std::move(terms));
}

/// Signed permutation matrix sending e_k to sign_k·e_{perm[k]}.
CMatrix signed_permutation(const std::vector<std::size_t>& perm, const std::vector<int>& sign) {
    const std::size_t n = perm.size();
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k)
        m(static_cast<Eigen::Index>(perm[k]), static_cast<Eigen::Index>(k)) = GaussianRational(sign[k]);
    return m;
}
}  // namespace

TEST_CASE("Choi matrices of standard maps") {
    const auto id = choi_matrix(Superoperator(2, {{Rational(1), identity(2)}}));
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const bool on = (r == 0 || r == 3) && (c == 0 || c == 3);
            CHECK(id.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) == GaussianRational(on ? 1 : 0));
        }
    CHECK(choi_matrix(trace_map(2)).matrix() == identity(4));
    CHECK(choi_matrix(Superoperator(2, {{Rational(0), identity(2)}})) == HermitianOperator::zero(2));

    // Transposition: the swap operator.
    const auto sw = choi_matrix(transposition2());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) CHECK(sw(i, j, k, l) == GaussianRational(i == l && j == k ? 1 : 0));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(Superoperator(2, {{Rational(1), identity(3)}}), DimensionMismatch);
    CHECK_THROWS_AS(Superoperator(0, {}), PreconditionError);
    CHECK_THROWS_AS(HermitianOperator(2, identity(3)), DimensionMismatch);
}

TEST_CASE("hermiticity") {
    CHECK(is_hermiticity_preserving(choi_matrix(transposition2()).matrix()));
    CMatrix bad = CMatrix::Zero(4, 4);
    bad(0, 1) = GaussianRational::i();
    bad(1, 0) = GaussianRational::i();
    CHECK(!is_hermiticity_preserving(bad));
    CMatrix sym = CMatrix::Zero(4, 4);
    sym(0, 2) = sym(2, 0) = GaussianRational(Rational(3, 2));
    CHECK(is_hermiticity_preserving(sym));
}

TEST_CASE("complete positivity") {
    Gen gen(61);
    CHECK(is_completely_positive(gen.superoperator(2, 3, true)));
    CHECK(!is_completely_positive(transposition2()));
    CHECK(is_completely_positive(Superoperator(2, {{Rational(0), identity(2)}})));
    CHECK(characteristic_polynomial(choi_matrix(transposition2())) == parse_unipoly("x^4 - 2 x^3 + 2 x - 1"));
    CHECK(characteristic_polynomial(choi_matrix(transposition2())) ==
          pow(parse_unipoly("x - 1"), 3) * parse_unipoly("x + 1"));
}

TEST_CASE("positivity polynomial examples") {
    const auto id1 = positivity_polynomial_from_choi(choi_matrix(Superoperator(1, {{Rational(1), identity(1)}})));
    CHECK(to_text(id1.poly, positivity_variable_names(1)) == "1 * x1^2 y1^2 + 1 * x1^2 y2^2 + 1 * x2^2 y1^2 + 1 * x2^2 y2^2");
    CHECK(positivity_polynomial_from_kraus(Superoperator(1, {{Rational(1), identity(1)}})).poly == id1.poly);
    CHECK(positivity_polynomial_from_choi(HermitianOperator::zero(2)).poly.is_zero());

    const auto names = positivity_variable_names(2);
    CHECK(names == std::vector<std::string>{"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"});
    CHECK(x_variable(2, 1, 1) == 3);
    CHECK(y_variable(2, 0, 0) == 4);
    const MultiPoly re = parse_poly("x1 y1 + x2 y2 + x3 y3 + x4 y4", names);
    const MultiPoly im = parse_poly("x1 y2 - x2 y1 + x3 y4 - x4 y3", names);
    CHECK(positivity_polynomial_from_choi(choi_matrix(transposition2())).poly == re * re + im * im);
}

TEST_CASE("Kraus construction carries a valid SOS") {
    Gen gen(62);
    const auto phi = gen.superoperator(2, 3);
    const auto p = positivity_polynomial_from_kraus(phi);
    REQUIRE(p.sos.has_value());
    CHECK(expand(*p.sos, p.poly.nvars()) == p.poly);
}

TEST_CASE("bilinear form examples") {
    CVector x(1), y(1);
    x(0) = GaussianRational(1);
    y(0) = GaussianRational::i();
    CHECK(evaluate_bilinear_form(choi_matrix(Superoperator(1, {{Rational(1), identity(1)}})), x, y) == Rational(1));
    CVector e1(2), e2(2);
    e1 << GaussianRational(1), GaussianRational(0);
    e2 << GaussianRational(0), GaussianRational(1);
    CHECK(evaluate_bilinear_form(choi_matrix(transposition2()), e1, e2) == Rational(0));
    CHECK(evaluate_bilinear_form(HermitianOperator::zero(2), e1, e2) == Rational(0));
    CMatrix skew = CMatrix::Zero(4, 4);
    skew(0, 0) = GaussianRational::i();
    CHECK_THROWS_AS(evaluate_bilinear_form(HermitianOperator(2, skew), e1, e1), InternalError);
}

TEST_CASE("point conversion round trip") {
    Gen gen(63);
    const auto x = gen.cvector(3), y = gen.cvector(3);
    const auto pt = real_point(x, y);
    CHECK(pt.size() == 12);
    const auto [x2, y2] = complex_vectors(3, pt);
    CHECK(x2 == x);
    CHECK(y2 == y);
}

TEST_CASE("property: Choi entries match the map on matrix units") {
    Gen gen(64);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        const auto phi = gen.superoperator(n, 3);
        const auto j = choi_matrix(phi);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) {
                const CMatrix image = phi.apply(unit(n, k, i));
                for (std::size_t jj = 0; jj < n; ++jj)
                    for (std::size_t l = 0; l < n; ++l)
                        CHECK(j(i, jj, k, l) == image(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(jj)));
            }
        CHECK(j.is_selfadjoint());
    }
}

TEST_CASE("property: dual construction") {
    Gen gen(65);
    for (int trial = 0; trial < 60; ++trial) {
        const auto phi = gen.superoperator(static_cast<std::size_t>(gen.integer(1, 3)), 4);
        CHECK(positivity_polynomial_from_kraus(phi).poly == positivity_polynomial_from_choi(choi_matrix(phi)).poly);
    }
}

TEST_CASE("property: evaluation oracle and bihomogeneity") {
    Gen gen(66);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        const auto t = gen.selfadjoint(n);
        const auto p = positivity_polynomial_from_choi(t).poly;
        const auto x = gen.cvector(n), y = gen.cvector(n);
        CHECK(evaluate(p, real_point(x, y)) == evaluate_bilinear_form(t, x, y));
        CHECK((p.is_zero() || p.total_degree() == 4));

        const Rational c = gen.rational();
        CVector cx = x;
        for (auto& z : cx) z *= GaussianRational(c);
        CHECK(evaluate(p, real_point(cx, y)) == c * c * evaluate(p, real_point(x, y)));
        CVector cy = y;
        for (auto& z : cy) z *= GaussianRational(c);
        CHECK(evaluate(p, real_point(x, cy)) == c * c * evaluate(p, real_point(x, y)));
    }
}

TEST_CASE("property: scaling and linearity in the weights") {
    Gen gen(67);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        const auto t = gen.selfadjoint(n);
        const Rational c = gen.rational();
        const CMatrix scaled = t.matrix() * GaussianRational(c);
        CHECK(positivity_polynomial_from_choi(HermitianOperator(n, scaled)).poly == c * positivity_polynomial_from_choi(t).poly);

        auto phi = gen.superoperator(n, 3);
        auto terms = phi.terms();
        for (auto& term : terms) term.alpha *= c;
        CHECK(choi_matrix(Superoperator(n, terms)).matrix() == choi_matrix(phi).matrix() * GaussianRational(c));
    }
}

TEST_CASE("property: signed permutations act by substitution") {
    Gen gen(68);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        std::vector<std::size_t> pp(n), qp(n);
        std::vector<int> ps(n), qs(n);
        for (std::size_t k = 0; k < n; ++k) pp[k] = qp[k] = k;
        std::shuffle(pp.begin(), pp.end(), gen.engine());
        std::shuffle(qp.begin(), qp.end(), gen.engine());
        for (std::size_t k = 0; k < n; ++k) {
            ps[k] = gen.coin() ? 1 : -1;
            qs[k] = gen.coin() ? 1 : -1;
        }
        const CMatrix p = signed_permutation(pp, ps), q = signed_permutation(qp, qs);
        const auto phi = gen.superoperator(n, 3);
        std::vector<KrausTerm> moved;
        for (const auto& term : phi.terms()) moved.push_back({term.alpha, CMatrix(p * term.matrix * q)});
        const auto original = positivity_polynomial_from_kraus(phi).poly;
        const auto transformed = positivity_polynomial_from_kraus(Superoperator(n, moved)).poly;

        // x·(PAQ)^*·yᵀ = (x Q^*)·A^*·(P^* yᵀ) with real P, Q, so x' = x Qᵀ and y' = y P.
        const std::size_t nv = 4 * n;
        std::vector<MultiPoly> images(nv, MultiPoly(nv));
        for (std::size_t k = 0; k < n; ++k)
            for (int part = 0; part < 2; ++part) {
                // x'_{qp[k]} = qs[k]·x_k, y'_k = ps[k]·y_{pp[k]}
                images[x_variable(n, qp[k], part)] = MultiPoly::variable(nv, x_variable(n, k, part)) * Rational(qs[k]);
                images[y_variable(n, k, part)] = MultiPoly::variable(nv, y_variable(n, pp[k], part)) * Rational(ps[k]);
            }
        CHECK(transformed == substitute(original, std::span<const MultiPoly>(images)));
    }
}

TEST_CASE("property: CP maps are nonnegative") {
    Gen gen(69);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        const auto phi = gen.superoperator(n, 4, true);
        const auto p = positivity_polynomial_from_kraus(phi);
        CHECK(is_completely_positive(phi));
        REQUIRE(p.sos.has_value());
        CHECK(certifies_nonnegative(*p.sos, p.poly));
        for (int s = 0; s < 50; ++s) CHECK(evaluate(p.poly, gen.point(4 * n)).sign() >= 0);
    }
}
