#include "rbmono/errors.hpp"
#include "rbmono/recurrences.hpp"

#include <doctest.h>

using namespace rbm;

TEST_CASE("single recurrence: all-nonzero harmonic solution") {
    // Oracle: beta_t = 1/(t + d) satisfies the relation by partial fractions.
    for (long d = 0; d <= 3; ++d) {
        for (long tau = (d == 0 ? 1 : 0); tau <= 3; ++tau) {
            SingleRecParams p{d, tau, tau, 1, Rational(1, tau + d)};
            auto v = closed_single(p, 60);
            REQUIRE(v.size() == static_cast<std::size_t>(61 - tau));
            for (long t = tau; t <= 60; ++t) CHECK(v[t - tau] == Rational(1, t + d));
            CHECK(verify_single(v, d, tau).passed);
        }
    }
}

TEST_CASE("single recurrence: sparse support") {
    SingleRecParams p{1, 0, 1, 2, Rational(1)};
    auto v = closed_single(p, 6);
    CHECK(v[0] == Rational(0));
    CHECK(v[1] == Rational(1));
    CHECK(v[2] == Rational(0));
    CHECK(v[3] == Rational(1, 2));
    CHECK(v[5] == Rational(1, 3));
    CHECK(verify_single(v, 1, 0).passed);
}

TEST_CASE("single recurrence: parameter constraints") {
    CHECK_THROWS_AS(closed_single({0, 0, 0, 1, Rational(1)}, 5), InvalidParams);
    CHECK_THROWS_AS(closed_single({1, 0, 2, 2, Rational(1)}, 5), InvalidParams);   // 2 does not divide 3
    CHECK_THROWS_AS(closed_single({1, 0, 2, 1, Rational(1)}, 5), InvalidParams);   // k - tau >= Delta
    CHECK_THROWS_AS(closed_single({1, 0, 0, 1, Rational(0)}, 5), InvalidParams);
    CHECK(verify_single(std::vector<Rational>(20, Rational(0)), 0, 0).passed);
}

TEST_CASE("single recurrence: a perturbed value is caught") {
    SingleRecParams p{2, 1, 2, 4, Rational(3)};
    auto v = closed_single(p, 80);
    for (std::size_t i = 0; i < 30; ++i) {
        auto w = v;
        w[i] += Rational(1);
        auto rep = verify_single(w, 2, 1);
        CHECK_FALSE(rep.passed);
        CHECK_FALSE(rep.witnesses.empty());
    }
}

TEST_CASE("two-index recurrence") {
    TwoIndexRecParams p;
    p.N = 0;
    p.d_seq = Seq{0, {}, 1};
    p.tau_seq = Seq{0, {}, 0};
    p.delta = 2;
    IndexGroup g;
    g.elements = {2};
    g.k = KRule{false, 1};
    g.seed = Rational(1);
    p.I.groups.push_back(g);
    auto vals = closed_two_index(p, 10, 40);
    for (long l = 0; 1 + 2 * l <= 40; ++l) CHECK(vals.at({2, 1 + 2 * l}) == Rational(1, 1 + l));
    CHECK(vals.at({2, 0}) == Rational(0));
    CHECK(vals.at({3, 5}) == Rational(0));
    CHECK(verify_two_index(vals, p.d_seq, p.tau_seq, 40).passed);

    auto bad = vals;
    bad[{2, 3}] = Rational(7);
    CHECK_FALSE(verify_two_index(bad, p.d_seq, p.tau_seq, 40).passed);

    TwoIndexRecParams empty = p;
    empty.I.groups.clear();
    for (const auto& [key, v] : closed_two_index(empty, 5, 10)) CHECK(v.is_zero());

    // Delta must divide k_i + d_i
    p.I.groups[0].k = KRule{false, 0};
    CHECK_THROWS_AS(closed_two_index(p, 10, 40), InvalidParams);
}

TEST_CASE("two-index verifier needs coverage") {
    TwoIndexValues vals;
    vals[{0, 0}] = Rational(1);
    CHECK_THROWS_AS(verify_two_index(vals, Seq{0, {}, 1}, Seq{0, {}, 0}, 1), CoverageError);
}

TEST_CASE("additive k-sequence") {
    KSeqAdditiveParams p{2, 3, 1, 4, Seq{1, {2}, 2}};
    auto res = k_closed_additive(p, 12);
    CHECK(res.k[0] == 1);
    CHECK(res.k[1] == 4);
    CHECK(res.k[2] == 4);
    CHECK(res.xi.at({1, 1}) == 2);
    for (long s = 0; s <= 10; ++s) CHECK(3 * res.xi.at({s, 0}) == 1 + 2);
    CHECK(verify_k_recurrence(res.k, res.xi, 2, 3, 0, 12).passed);
    auto k = res.k;
    k[5] += 1;
    CHECK_FALSE(verify_k_recurrence(k, res.xi, 2, 3, 0, 12).passed);
    // 3 does not divide k0 + p
    CHECK_THROWS_AS(k_closed_additive({2, 3, 0, 4, Seq{1, {}, 2}}, 12), InvalidParams);
}

TEST_CASE("shifted k-sequence") {
    KSeqShiftedParams p{2, 1, 1, 3, Seq{0, {3, 2, 2}, 2}, Seq{1, {1}, std::nullopt}};
    CHECK(shifted_tau(p, 0) == 0);
    CHECK(shifted_tau(p, 1) == 4);
    auto res = k_closed_shifted(p, 20);
    CHECK(res.k[0] == 3);
    CHECK(res.k[1] == 3);
    CHECK(res.k[3] == 5);
    CHECK(res.tau[1] == 4);
    for (long s = 0; s + 2 <= 20; ++s) CHECK(res.xi.at({s, 0}) == res.xi.at({0, s}));
    CHECK(verify_k_recurrence(res.k, res.xi, 1, 1, 2, 20).passed);
    auto k = res.k;
    k[7] -= 1;
    auto rep = verify_k_recurrence(k, res.xi, 1, 1, 2, 20);
    CHECK_FALSE(rep.passed);
    CHECK(rep.witnesses[0].at.size() == 2);
}

TEST_CASE("support search finds nothing unexplained") {
    for (long d = 0; d <= 3; ++d) {
        for (long tau = 0; d + tau <= 3; ++tau) {
            auto res = search_single_supports(d, tau, 10);
            CHECK(res.unexplained.empty());
            if (d == 0 && tau == 0) CHECK(res.solvable == 0);
            else CHECK(res.solvable > 0);
            CHECK(res.matched == res.solvable);
        }
    }
}

TEST_CASE("sequences") {
    Seq s{1, {4, 5}, std::nullopt};
    CHECK(s.at(2) == 5);
    CHECK_FALSE(s.defined(3));
    CHECK_THROWS_AS(s.at(3), InvalidParams);
    CHECK_THROWS_AS(s.at(0), InvalidParams);
    CHECK(s.sum(3, 2) == 0);
    Seq t{0, {1}, 7};
    CHECK(t.sum(0, 3) == 22);
}
