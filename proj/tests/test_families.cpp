#include "rbmono/families.hpp"
#include "samplers.hpp"

#include <doctest.h>

#include <set>

using namespace rbm;

namespace {

// Smallest l >= 0 with x^{rl+i} y^l admissible.
long zeta_brute(long r, long i, AlgebraContext ctx) {
    for (long l = 0;; ++l)
        if (ctx.admissible({r * l + i, l})) return l;
}

FamilySpec row_spec(Family f, AlgebraContext ctx, long r, long c, long delta, IndexGroup g) {
    RowFamilyParams p;
    p.r = r;
    p.c = c;
    p.delta = delta;
    p.I.groups.push_back(std::move(g));
    return FamilySpec{f, ctx, false, p};
}

IndexGroup single(long i, long k, Rational seed = Rational(1)) {
    IndexGroup g;
    g.elements = {i};
    g.k = {false, k};
    g.seed = seed;
    return g;
}

} // namespace

TEST_CASE("zeta agrees with a direct search") {
    for (auto ctx : {AlgebraContext::F(), AlgebraContext::F0()})
        for (long r = 1; r <= 4; ++r)
            for (long i = -15; i <= 6; ++i) CHECK(zeta(r, i, ctx) == zeta_brute(r, i, ctx));
    CHECK(zeta(2, -4, AlgebraContext::F()) == 2);
    CHECK(zeta(3, 5, AlgebraContext::F0()) == 0);
    CHECK(zeta(3, 0, AlgebraContext::F0()) == 1);
}

TEST_CASE("family tags round-trip") {
    for (Family f : all_families()) CHECK(family_from_string(to_string(f)) == f);
    CHECK(is_rb(Family::RB_IIIA));
    CHECK_FALSE(is_rb(Family::AVG_IV));
    CHECK_THROWS(family_from_string("RB-V"));
}

TEST_CASE("validation examples") {
    // no Delta with k0 < Delta <= k0 + 0
    CHECK_FALSE(validate_family_params(row_spec(Family::RB_II, AlgebraContext::F(), 1, 0, 1, single(0, 0))));
    CHECK(validate_family_params(discussion_presets("example-ii-delta8")));

    FamilySpec a;
    a.family = Family::AVG_IIIA;
    CaseIIIAParams q;
    q.c = 1;
    q.delta = 3;
    q.p_y = 1;
    a.params = q;
    CHECK_FALSE(validate_family_params(a));

    // unital context with r = c = 0 forces the zero operator
    auto z = row_spec(Family::RB_II, AlgebraContext::F(), 0, 0, 1, single(0, 1));
    CHECK_FALSE(validate_family_params(z));
    CHECK_THROWS_AS(require_valid(z), InvalidParams);
    z.ctx = AlgebraContext::F0();
    CHECK(validate_family_params(z));
}

TEST_CASE("degenerate RB-II on the nonunital algebra") {
    auto s = row_spec(Family::RB_II, AlgebraContext::F0(), 0, 0, 3, single(0, 3, Rational(5)));
    auto R = build_rb(s);
    for (long a = 1; a <= 6; ++a) CHECK(R.eval({0, 3 * a}) == Term{Rational(5, a), {0, 3 * a}});
    CHECK(R.eval({0, 4}).is_zero());
    CHECK(R.eval({1, 3}).is_zero());
    CHECK(check_rb0(R, s.ctx, 9).passed);
}

TEST_CASE("single-row RB-II") {
    auto s = row_spec(Family::RB_II, AlgebraContext::F(), 1, 0, 1, single(1, 0));
    auto R = build_rb(s);
    for (long t = 0; t <= 10; ++t) CHECK(R.eval({1, t}) == Term{Rational(1, t + 1), {0, t + 1}});
    CHECK(R.eval({0, 3}).is_zero());
    CHECK(R.eval({2, 0}).is_zero());
    CHECK(check_rb0(R, s.ctx, 10).passed);
    auto pts = support_lattice(s, 5, 5);
    CHECK(pts.size() == 6);
    for (auto [x, y] : pts) CHECK(x == 1);
}

TEST_CASE("unit averaging forms") {
    auto ctx = AlgebraContext::F();
    FamilySpec s{Family::AVG_II, ctx, false, AvgFormParams{2, 1, 0}};
    auto T = build_averaging(s);
    CHECK(T.eval({3, 1}) == Term{Rational(1), {0, 8}});
    CHECK(check_averaging(T, ctx, 8).passed);

    FamilySpec d;
    d.family = Family::AVG_IIIA;
    d.ctx = ctx;
    CaseIIIAParams q;
    q.p_x = q.p_y = 1;
    q.k = q.c = 0;
    q.delta = 1;
    d.params = q;
    auto D = build_averaging(d);
    for (long s2 = 0; s2 <= 5; ++s2) CHECK(D.eval({s2, s2}) == Term{Rational(1), {s2 + 1, s2 + 1}});
    CHECK(D.eval({1, 0}).is_zero());
    CHECK(check_averaging(D, ctx, 8).passed);
}

TEST_CASE("full RB-IIIB+ preset as averaging is the shift") {
    for (auto ctx : {AlgebraContext::F(), AlgebraContext::F0()}) {
        PresetOptions o;
        o.ctx = ctx;
        auto s = discussion_presets("full-iiib+", o);
        s.family = Family::AVG_IIIBPlus;
        auto T = build_averaging(s);
        for (const auto& z : admissible_monomials(ctx, 8)) CHECK(T.eval(z) == Term{Rational(1), {z.n + 1, z.m + 2}});
    }
}

TEST_CASE("full RB-II preset has no kernel and matches its closed form") {
    for (auto ctx : {AlgebraContext::F(), AlgebraContext::F0()}) {
        PresetOptions o;
        o.ctx = ctx;
        auto R = build_rb(discussion_presets("full-ii", o));
        const long r = 1, c = 1;
        for (const auto& z : admissible_monomials(ctx, 14)) {
            const long n = z.n, s = z.m;
            const Rational seed = n == 0 ? Rational(1) : Rational(2);
            const Rational want = Rational(r * n + c + nu(n, ctx)) * seed / Rational(r * n + c + s);
            CHECK(R.eval(z) == Term{want, {0, s + r * n + c}});
        }
    }
}

TEST_CASE("identity-support preset") {
    auto R = build_rb(discussion_presets("full-idsupp"));
    const Rational a1(2), a2(3);
    for (const auto& z : admissible_monomials(AlgebraContext::F0(), 12)) {
        const Rational want = a1 * a2 / (Rational(z.m) * a1 + Rational(z.n) * a2);
        CHECK(R.eval(z) == Term{want, z});
    }
    CHECK(check_rb0(R, AlgebraContext::F0(), 8).passed);
}

TEST_CASE("unknown preset") {
    CHECK_THROWS_AS(discussion_presets("full-iv"), UnknownPreset);
    CHECK(preset_names().size() >= 5);
}

TEST_CASE("RB-I lattice lines") {
    auto s = discussion_presets("example-i-even-valid");
    std::set<std::pair<long, long>> pts;
    for (auto p : support_lattice(s, 20, 10)) pts.insert(p);
    // t = 2u > 0: points (2l + 2u, l) with l even
    for (long u = 1; u <= 4; ++u)
        for (long l = 0; 2 * l + 2 * u <= 20 && l <= 10; ++l)
            CHECK(pts.count({2 * l + 2 * u, l}) == (l % 2 == 0 ? 1u : 0u));
    for (auto [x, y] : pts) CHECK((x - 2 * y) % 2 == 0);
    CHECK(support_lattice(FamilySpec{Family::RB_II, AlgebraContext::F(), false, RowFamilyParams{}}, 5, 5).empty());
}

TEST_CASE("swapped specs build the conjugate") {
    auto s = row_spec(Family::RB_II, AlgebraContext::F(), 1, 0, 1, single(1, 0));
    auto t = s;
    t.swapped = true;
    auto R = build_rb(s), S = build_rb(t);
    for (const auto& z : admissible_monomials(s.ctx, 8)) {
        Term a = R.eval({z.m, z.n});
        Term b = S.eval(z);
        CHECK(b == Term{a.coeff, {a.mono.m, a.mono.n}});
    }
}

TEST_CASE("sampled RB specs pass the identity") {
    testing::Sampler smp(11);
    for (long i = 0; i < 24; ++i) {
        auto s = smp.any_rb(i);
        auto rep = check_rb0(build_rb(s), s.ctx, 7);
        CHECK_MESSAGE(rep.passed, to_string(s.family));
    }
}

TEST_CASE("sampled averaging specs pass the identity") {
    testing::Sampler smp(12);
    for (long i = 0; i < 12; ++i) {
        FamilySpec s = i % 3 == 0 ? smp.iiia(false) : i % 3 == 1 ? smp.iiib0(false) : smp.iiibplus(false);
        CHECK(check_averaging(build_averaging(s), s.ctx, 7).passed);
    }
}
