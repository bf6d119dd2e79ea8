#include "rbmono/algebra.hpp"
#include "rbmono/errors.hpp"

#include <doctest.h>

using namespace rbm;

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(Rational::parse("-3").str() == "-3");
    CHECK_THROWS(Rational::parse("4/-2"));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK(Rational(3, 7).reciprocal() == Rational(7, 3));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational(0).reciprocal());
}

TEST_CASE("rational arithmetic stays exact beyond machine width") {
    Rational big(1);
    for (int i = 0; i < 40; ++i) big = big * Rational(1000003);
    Rational back = big;
    for (int i = 0; i < 40; ++i) back = back / Rational(1000003);
    CHECK(back == Rational(1));
}

TEST_CASE("nu is the degree floor") {
    CHECK(nu(0, AlgebraContext::F()) == 0);
    CHECK(nu(3, AlgebraContext::F()) == 0);
    CHECK(nu(0, AlgebraContext::F0()) == 1);
    CHECK(nu(2, AlgebraContext::F0()) == 0);
}

TEST_CASE("admissible monomials are counted by the triangle numbers") {
    for (long D = 0; D <= 12; ++D) {
        const long tri = (D + 1) * (D + 2) / 2;
        CHECK(static_cast<long>(admissible_monomials(AlgebraContext::F(), D).size()) == tri);
        CHECK(static_cast<long>(admissible_monomials(AlgebraContext::F0(), D).size()) == tri - 1);
    }
    auto ms = admissible_monomials(AlgebraContext::F(), 2);
    REQUIRE(ms.size() == 6);
    CHECK(ms[0] == Monomial{0, 0});
    CHECK(ms[1] == Monomial{1, 0});
    CHECK(ms[2] == Monomial{0, 1});
    CHECK(ms[3] == Monomial{2, 0});
    for (std::size_t i = 1; i < ms.size(); ++i) CHECK(graded_less(ms[i - 1], ms[i]));
}

TEST_CASE("sparse polynomials drop zero terms") {
    SparsePolynomial p({1, 0}, Rational(2));
    p += SparsePolynomial({1, 0}, Rational(-2));
    CHECK(p.is_zero());
    SparsePolynomial q({0, 1}, Rational(0));
    CHECK(q.is_zero());
}

TEST_CASE("polynomial product against a hand expansion") {
    // (x + y)(x - y) = x^2 - y^2
    SparsePolynomial a = SparsePolynomial({1, 0}, 1) + SparsePolynomial({0, 1}, 1);
    SparsePolynomial b = SparsePolynomial({1, 0}, 1) + SparsePolynomial({0, 1}, -1);
    SparsePolynomial c = poly_mul(a, b);
    CHECK(c.size() == 2);
    CHECK(c.coeff({2, 0}) == Rational(1));
    CHECK(c.coeff({0, 2}) == Rational(-1));
    CHECK(c.coeff({1, 1}) == Rational(0));
}
