#include "rbmono/operator.hpp"

#include <doctest.h>

using namespace rbm;

namespace {

// Integration in x: R(x^n y^m) = x^{n+1} y^m / (n+1). Weight-zero RB by integration by parts.
MonomialOperator integrate_x(AlgebraContext ctx) {
    return MonomialOperator::closed(ctx, [](const Monomial& z) {
        return Term{Rational(1, z.n + 1), {z.n + 1, z.m}};
    });
}

// Multiplication by y is averaging: y a y b = y (y a b).
MonomialOperator times_y(AlgebraContext ctx) {
    return MonomialOperator::closed(ctx, [](const Monomial& z) { return Term{Rational(1), {z.n, z.m + 1}}; });
}

} // namespace

TEST_CASE("integration is a weight-zero Rota-Baxter operator") {
    for (auto ctx : {AlgebraContext::F(), AlgebraContext::F0()}) {
        auto rep = check_rb0(integrate_x(ctx), ctx, 8);
        CHECK(rep.passed);
        CHECK(rep.witnesses.empty());
        CHECK(rep.pairs_checked > 0);
    }
}

TEST_CASE("identity is not Rota-Baxter and witnesses are capped") {
    auto ctx = AlgebraContext::F();
    auto id = MonomialOperator::closed(ctx, [](const Monomial& z) { return Term{Rational(1), z}; });
    auto rep = check_rb0(id, ctx, 6);
    CHECK_FALSE(rep.passed);
    CHECK(rep.failures == rep.pairs_checked);
    CHECK(rep.witnesses.size() == CheckReport::kKeptWitnesses);
    CHECK(rep.witnesses[0].at.size() == 4);
}

TEST_CASE("multiplication by y is averaging, integration is not") {
    auto ctx = AlgebraContext::F();
    CHECK(check_averaging(times_y(ctx), ctx, 8).passed);
    CHECK_FALSE(check_averaging(integrate_x(ctx), ctx, 4).passed);
}

TEST_CASE("parallel sweeps give the same report") {
    auto ctx = AlgebraContext::F();
    auto id = MonomialOperator::closed(ctx, [](const Monomial& z) { return Term{Rational(2), z}; });
    auto a = check_rb0(id, ctx, 7, {1});
    auto b = check_rb0(id, ctx, 7, {4});
    CHECK(a.failures == b.failures);
    CHECK(a.pairs_checked == b.pairs_checked);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i].at == b.witnesses[i].at);
}

TEST_CASE("tables enforce coverage and admissibility") {
    auto ctx = AlgebraContext::F0();
    auto t = integrate_x(ctx).truncated(4);
    CHECK(t.is_table());
    CHECK(t.eval({2, 2}).coeff == Rational(1, 3));
    CHECK_THROWS_AS(t.eval({3, 2}), CoverageError);
    CHECK_THROWS_AS(eval_term(t, {0, 0}, ctx), InvalidParams);
    TermTable rows;
    rows.emplace(Monomial{0, 0}, Term{Rational(1), {1, 0}});
    CHECK_THROWS_AS(MonomialOperator::table(ctx, rows, 3), InvalidParams);
    // check needs images of images: integration tables of degree 4 cannot support a degree-4 sweep
    CHECK_THROWS_AS(check_rb0(t, ctx, 4), CoverageError);
}

TEST_CASE("scaling and swapping") {
    auto ctx = AlgebraContext::F();
    auto R = integrate_x(ctx);
    CHECK_THROWS_AS(scale(R, Rational(0)), ZeroScalarError);
    CHECK(check_rb0(scale(R, Rational(-5, 3)), ctx, 6).passed);
    auto S = conjugate_swap(R);
    // psi R psi integrates in y
    CHECK(S.eval({2, 3}) == Term{Rational(1, 4), {2, 4}});
    CHECK(check_rb0(S, ctx, 6).passed);
    auto T = R.truncated(6);
    auto TT = conjugate_swap(conjugate_swap(T));
    CHECK(TT.rows(6) == T.rows(6));
}

TEST_CASE("coefficient relations") {
    auto ctx = AlgebraContext::F();
    // alpha_{n,m} = 1/(n+1) with output shift (1, 0): the case-iii relation is the RB identity
    auto table = CoefficientTable::from_operator(integrate_x(ctx), 30);
    RelationParams rel{RelationKind::CaseIII, 0, 0, 1, 0};
    CHECK(check_coefficient_relation(table, rel, ctx, 8).passed);
    rel.kind = RelationKind::Reciprocal;
    CHECK(check_coefficient_relation(table, rel, ctx, 8).passed);
    rel.p_x = 2;
    CHECK_FALSE(check_coefficient_relation(table, rel, ctx, 8).passed);
    CHECK(relation_kind_from_string("case-i") == RelationKind::CaseI);
    CHECK(to_string(RelationKind::CaseII) == "case-ii");
    CHECK_THROWS(relation_kind_from_string("case-v"));
}
