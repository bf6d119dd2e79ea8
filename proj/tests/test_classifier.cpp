#include "rbmono/classifier.hpp"
#include "samplers.hpp"

#include <doctest.h>

using namespace rbm;

namespace {

bool has_family(const ClassificationResult& r, Family f) {
    for (const auto& c : r.candidates)
        if (c.spec.family == f) return true;
    return false;
}

bool same_rows(const MonomialOperator& a, const MonomialOperator& b, long degree) {
    return a.rows(degree) == b.rows(degree);
}

} // namespace

TEST_CASE("progression fitting") {
    auto f = fit_progression({11, 3, 7});
    CHECK(f.kind == ProgressionFit::Kind::Progression);
    CHECK(f.offset == 3);
    CHECK(f.gap == 4);
    f = fit_progression({5});
    CHECK(f.kind == ProgressionFit::Kind::Singleton);
    CHECK(f.offset == 5);
    CHECK(fit_progression({}).kind == ProgressionFit::Kind::Empty);
    try {
        fit_progression({1, 3, 5, 8, 9});
        FAIL("expected NotAProgression");
    } catch (const NotAProgression& e) {
        CHECK(e.element == 8);
    }
}

TEST_CASE("single-row RB-II is recovered exactly") {
    RowFamilyParams p;
    p.r = 1;
    p.c = 0;
    p.delta = 1;
    IndexGroup g;
    g.elements = {1};
    g.k = {false, 0};
    g.seed = Rational(1);
    p.I.groups.push_back(g);
    FamilySpec s{Family::RB_II, AlgebraContext::F(), false, p};
    auto table = build_rb(s).truncated(10);
    auto res = classify(table, 10);
    REQUIRE(res.status == ClassificationResult::Status::Classified);
    REQUIRE(has_family(res, Family::RB_II));
    for (const auto& c : res.candidates) {
        CHECK(validate_family_params(c.spec));
        CHECK(same_rows(build(c.spec), table, 10));
        if (c.spec.family == Family::RB_II) {
            CHECK(c.exact);
            CHECK(same_rows(build(c.spec), build_rb(s), 15));
        }
    }
}

TEST_CASE("zero table is reported as the zero operator") {
    auto res = classify(MonomialOperator::zero(AlgebraContext::F0()).truncated(6), 6);
    CHECK(res.status == ClassificationResult::Status::ZeroOperator);
    CHECK_FALSE(res.vacuous_families.empty());
    for (Family f : res.vacuous_families) CHECK(is_rb(f));
}

TEST_CASE("identity-support preset classifies with unit generators") {
    auto table = build_rb(discussion_presets("full-idsupp")).truncated(8);
    auto res = classify(table, 8);
    bool found = false;
    for (const auto& c : res.candidates) {
        if (c.spec.family != Family::RB_IDSUPP) continue;
        const auto& p = std::get<IdSuppParams>(c.spec.params);
        if (p.two_generator && p.k1 == 1 && p.k2 == 1) found = true;
    }
    CHECK(found);
}

TEST_CASE("non-linear averaging operator is averaging but unclassifiable") {
    for (auto ctx : {AlgebraContext::F(), AlgebraContext::F0()}) {
        auto T = nonlinear_averaging_counterexample(2, ctx);
        CHECK(check_averaging(T, ctx, 7).passed);
        auto table = T.truncated(10);
        CHECK_THROWS_AS(classify(table, 10), Unclassifiable);
        auto rep = classify_report(table, 10);
        CHECK(rep.status == ClassificationResult::Status::Unclassifiable);
        CHECK_FALSE(rep.reason.empty());
    }
}

TEST_CASE("coverage beyond the table is refused") {
    auto table = build_rb(discussion_presets("full-ii")).truncated(5);
    CHECK_THROWS_AS(classify(table, 6), CoverageError);
}

TEST_CASE("mirror tables give mirrored candidates") {
    auto s = discussion_presets("full-i");
    auto table = build_rb(s).truncated(8);
    auto mirror = conjugate_swap(table);
    auto a = classify(table, 8), b = classify(mirror, 8);
    REQUIRE_FALSE(a.candidates.empty());
    REQUIRE_FALSE(b.candidates.empty());
    for (const auto& c : b.candidates) {
        auto flipped = c.spec;
        flipped.swapped = !flipped.swapped;
        CHECK(same_rows(build(flipped), table, 8));
    }
}

TEST_CASE("round trips on sampled specs") {
    testing::Sampler smp(5);
    long passed = 0;
    const long total = 24;
    for (long i = 0; i < total; ++i) {
        auto s = smp.any_rb(i);
        bool exact = false;
        auto rep = round_trip(s, 8, &exact);
        if (rep.passed) ++passed;
    }
    CHECK(passed * 100 >= total * 90);
}

TEST_CASE("classification JSON") {
    auto res = classify(build_rb(discussion_presets("full-ii")).truncated(6), 6);
    auto j = classification_to_json(res);
    CHECK(j.at("status") == "classified");
    CHECK(j.at("candidates").is_array());
}
