#include <doctest.h>

#include "oracles.hpp"
#include "posmap/error.hpp"
#include "posmap/io.hpp"
#include "posmap/nonneg.hpp"
#include "posmap/poly_text.hpp"

using namespace posmap;
using posmap::testing::Gen;

namespace {
MultiPoly u1u2() { return parse_poly("u1 u2", std::vector<std::string>{"u1", "u2"}); }

Superoperator fixture(const std::string& name) {
    return io::superoperator_from_json(io::parse_json(posmap::testing::read_text(posmap::testing::data_path("fixtures/" + name))));
}

const std::vector<std::string> kThree = {"x1", "x2", "x3"};
MultiPoly refutable_ternary() { return parse_poly("x1^2 x2^2 + x2^2 x3^2 + x3^2 x1^2 - 2 x1^4", kThree); }

DecideOptions pipeline_only() {
    DecideOptions o;
    o.use_sos = false;
    o.use_exact = false;
    o.use_sampler = false;
    return o;
}
}  // namespace

TEST_CASE("index ranges") {
    const IndexRange r(2, 4);
    CHECK(r.top() == 512);
    CHECK(r.j_count() == 513);
    CHECK(r.beta_count() == 513);
    CHECK(r.size() == 513 * 513);
    CHECK(beta_template(2, 3) == std::vector<Integer>{3, 1, 0});
    CHECK(beta_template(3, 3) == std::vector<Integer>{9, 3, 1, 0});
    CHECK(beta_template(3, 0) == std::vector<Integer>{0, 0, 1, 0});
    CHECK(beta_template(1, 7) == std::vector<Integer>{1, 0});

    // Streamed prefix: j is the outer loop.
    std::size_t seen = 0;
    for (const IndexPair& p : r) {
        if (seen == 600) break;
        CHECK(p.j == Integer(seen / 513));
        CHECK(p.i == Integer(seen % 513));
        CHECK(p.beta == beta_template(2, p.i));
        ++seen;
    }
    CHECK(seen == 600);

    const IndexRange one(1, 2);
    CHECK(one.j_count() == 5);
    CHECK(one.beta_count() == 1);
    std::size_t count = 0;
    for (const IndexPair& p : one) {
        CHECK(p.beta == std::vector<Integer>{1, 0});
        ++count;
    }
    CHECK(count == 5);
    CHECK_THROWS_AS(IndexRange(2, 3), PreconditionError);
}

TEST_CASE("pipeline restriction and test") {
    const std::vector<std::string> x = {"x1"};
    const PipelineIndex idx{Integer(0), {1, 0}, u1u2()};
    const auto res = pipeline_restriction(parse_poly("-x1^4", x), idx);
    CHECK(res.r[0] == UniPoly::t());
    CHECK(res.r[1] == UniPoly(1));
    CHECK(res.g_plus == -pow(UniPoly::t(), 4));
    CHECK(pipeline_test(parse_poly("-x1^4", x), idx));
    CHECK(pipeline_branch(parse_poly("-x1^4", x), idx) == PipelineBranch::Plus);

    // A square never refutes.
    const std::vector<std::string> u = {"u1", "u2"};
    const std::vector<MultiPoly> panel{u1u2(), parse_poly("u1^2 u2 + u2^3", u), parse_poly("u1 u2^2 - u1^3", u),
                                       parse_poly("1/2 u1^2 - u1 u2", u)};
    for (const auto& r : panel)
        for (long j = 0; j <= 4; ++j) CHECK(!pipeline_test(parse_poly("x1^2", x), {Integer(j), {1, 0}, r}));

    // j beyond every degree makes g^un the zero polynomial.
    CHECK(!pipeline_test(parse_poly("-x1^2", x), {Integer(3), {1, 0}, u1u2()}));
    CHECK_THROWS_AS(pipeline_test(parse_poly("x1^2", x), {Integer(0), {1, 0, 0}, u1u2()}), PreconditionError);
}

TEST_CASE("line probes trace exact lines") {
    const std::vector<Rational> c{Rational(2), Rational(-1)};
    const MultiPoly probe = LineProbeProvider::probe(c);
    const PipelineIndex idx{Integer(0), {3, 1, 0}, probe};
    const auto res = pipeline_restriction(parse_poly("x1^2 + x2^2", std::vector<std::string>{"x1", "x2"}), idx);
    CHECK(res.r[0] == UniPoly({Rational(3), Rational(2)}));
    CHECK(res.r[1] == UniPoly({Rational(1), Rational(-1)}));
    CHECK(res.r[2] == UniPoly(5));
    CHECK(LineProbeProvider().candidates(refutable_ternary()).size() == 9);
}

TEST_CASE("negative point search") {
    const auto t = find_negative_point(parse_unipoly("x^2 - 1"));
    REQUIRE(t.has_value());
    CHECK(parse_unipoly("x^2 - 1")(*t).sign() < 0);
    CHECK(!find_negative_point(parse_unipoly("x^2 + 1")).has_value());
    const UniPoly narrow = parse_unipoly("x^4 - 4 x^2 + 39999/10000");
    const auto dip = find_negative_point(narrow);
    REQUIRE(dip.has_value());
    CHECK(narrow(*dip).sign() < 0);
}

TEST_CASE("sample schedule") {
    SampleSchedule s(4, {1, 3}, 0);
    CHECK(s.next() == std::vector<Rational>{0, 1, 0, 0});
    CHECK(s.next() == std::vector<Rational>{0, -1, 0, 0});
    CHECK(s.next() == std::vector<Rational>{0, 0, 0, 1});
    CHECK(s.next() == std::vector<Rational>{0, 0, 0, -1});
    CHECK(s.next() == std::vector<Rational>{0, 1, 0, 1});
    for (int k = 0; k < 3; ++k) (void)s.next();
    const auto random = s.next();
    CHECK(random[0] == Rational(0));
    CHECK(random[2] == Rational(0));
    SampleSchedule again(4, {1, 3}, 0);
    for (int k = 0; k < 8; ++k) (void)again.next();
    CHECK(again.next() == random);
}

TEST_CASE("decision examples") {
    const Budget budget;
    const std::vector<std::string> xy = {"x1", "x2"};
    auto v = decide_nonneg(parse_poly("x1^2 x2^2 - x1^4", xy), nullptr, budget);
    CHECK(v.status == Status::NotNonnegative);
    CHECK(v.trace.engine == "exact-bivariate");
    REQUIRE(v.witness.has_value());
    CHECK(evaluate(parse_poly("x1^2 x2^2 - x1^4", xy), *v.witness).sign() < 0);

    v = decide_nonneg(MultiPoly(3), nullptr, budget);
    CHECK(v.status == Status::Nonnegative);
    CHECK(v.trace.engine == "zero");
    CHECK(decide_nonneg(MultiPoly::constant(2, Rational(-3)), nullptr, budget).status == Status::NotNonnegative);
    CHECK(decide_nonneg(parse_poly("x2^4", xy), nullptr, budget).trace.engine == "exact-univariate");
    CHECK_THROWS_AS(decide_nonneg(parse_poly("x1^3", xy), nullptr, budget), PreconditionError);
    CHECK_THROWS_AS(decide_nonneg(parse_poly("x1^2 + x2", xy), nullptr, budget), PreconditionError);

    const auto motzkin_like = parse_poly("x1^4 x2^2 + x1^2 x2^4 + x3^6 - 3 x1^2 x2^2 x3^2", kThree);
    v = decide_nonneg(motzkin_like, nullptr, budget);
    CHECK(v.status == Status::Unknown);
    CHECK(v.trace.samples_used == budget.samples);
}

TEST_CASE("map decisions") {
    const Budget budget;
    LineProbeProvider probes;
    auto r = analyze_map(fixture("reduction_n2_lambda2.json"), &probes, budget);
    CHECK(r.verdict.status == Status::NotNonnegative);
    CHECK(!r.completely_positive);
    REQUIRE(r.verdict.witness.has_value());
    CHECK(*r.verdict.witness == std::vector<Rational>{1, 0, 0, 0, 1, 0, 0, 0});
    CHECK(*r.verdict.value == Rational(-1));
    CHECK(r.witness_verified);

    r = analyze_map(fixture("identity_n2.json"), &probes, budget);
    CHECK(r.hermiticity_preserving);
    CHECK(r.completely_positive);
    CHECK(r.verdict.status == Status::Nonnegative);
    CHECK(r.verdict.trace.engine == "sos-fast-path");

    r = analyze_map(fixture("transposition_n2.json"), &probes, budget);
    CHECK(!r.completely_positive);
    CHECK(r.verdict.status != Status::NotNonnegative);
    CHECK(!r.verdict.witness.has_value());

    Gen gen(71);
    const auto cp = gen.superoperator(2, 3, true);
    r = analyze_map(cp, &probes, budget);
    CHECK(r.verdict.status == Status::Nonnegative);
    CHECK(r.verdict.trace.engine == "sos-fast-path");
}

TEST_CASE("pipeline decisions") {
    const std::vector<std::string> x = {"x1"};
    FixedProvider complete({u1u2()}, true);
    auto v = decide_nonneg(parse_poly("x1^4", x), &complete, Budget{}, pipeline_only());
    CHECK(v.status == Status::Nonnegative);
    CHECK(v.trace.engine == "pipeline");
    CHECK(v.trace.pipeline_indices_used == 17);

    v = decide_nonneg(parse_poly("-x1^4", x), &complete, Budget{}, pipeline_only());
    CHECK(v.status == Status::NotNonnegative);
    REQUIRE(v.trace.refuting_index.has_value());

    const MultiPoly g = refutable_ternary();
    LineProbeProvider probes;
    v = decide_nonneg(g, &probes, Budget{}, pipeline_only());
    CHECK(v.status == Status::NotNonnegative);
    CHECK(v.trace.engine == "pipeline");
    REQUIRE(v.trace.refuting_index.has_value());
    const auto& ri = *v.trace.refuting_index;
    CHECK(pipeline_test(g, {ri.j, ri.beta, ri.r}));
    if (v.witness) CHECK(evaluate(g, *v.witness).sign() < 0);

    // The sampler and a pipeline pass over a provider declared complete agree.
    CHECK(decide_nonneg(g, nullptr, Budget{}).status == Status::NotNonnegative);
    FixedProvider trusted(probes.candidates(g), true);
    CHECK(decide_nonneg(g, &trusted, Budget{}, pipeline_only()).status == Status::NotNonnegative);

    Budget tight;
    tight.pipeline = 3;
    v = decide_nonneg(g, &probes, tight, pipeline_only());
    CHECK(v.status == Status::Unknown);
    CHECK(v.trace.pipeline_indices_used == 3);
}

TEST_CASE("property: incomplete providers never confirm") {
    Gen gen(72);
    EmptyProvider empty;
    LineProbeProvider probes;
    Budget budget;
    budget.samples = 50;
    budget.pipeline = 40;
    for (int trial = 0; trial < 40; ++trial) {
        const MultiPoly g = gen.form(3, 2 * static_cast<unsigned>(gen.integer(1, 2)), 5);
        if (g.is_zero()) continue;
        DecideOptions o;
        o.use_exact = false;
        for (const CandidateSetProvider* p : {static_cast<const CandidateSetProvider*>(&empty),
                                               static_cast<const CandidateSetProvider*>(&probes)}) {
            const Verdict v = decide_nonneg(g, p, budget, o);
            CHECK(v.status != Status::Nonnegative);
            if (v.status == Status::NotNonnegative) {
                if (v.witness) CHECK(evaluate(g, *v.witness).sign() < 0);
                else CHECK(v.trace.refuting_index.has_value());
            }
        }
    }
}

TEST_CASE("property: determinism and monotone budget") {
    Gen gen(73);
    LineProbeProvider probes;
    for (int trial = 0; trial < 30; ++trial) {
        const MultiPoly g = gen.form(4, 4, 6) + parse_poly("x1^2 x2^2 + x3^2 x4^2", default_variable_names(4));
        Budget small;
        small.samples = 40;
        small.pipeline = 20;
        small.seed = static_cast<std::uint64_t>(trial);
        const Verdict a = decide_nonneg(g, &probes, small), b = decide_nonneg(g, &probes, small);
        CHECK(a.status == b.status);
        CHECK(a.witness == b.witness);
        CHECK(a.trace.samples_used == b.trace.samples_used);

        Budget large = small;
        large.samples = 400;
        const Verdict c = decide_nonneg(g, &probes, large);
        if (a.status == Status::NotNonnegative) CHECK(c.status == Status::NotNonnegative);
        if (a.status == Status::NotNonnegative && a.trace.engine == "sampler") CHECK(c.witness == a.witness);
    }
}
