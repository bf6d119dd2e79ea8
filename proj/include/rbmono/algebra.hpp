// SPDX-License-Identifier: MIT
#pragma once

#include "rbmono/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace rbm {

/// x^n y^m with n, m >= 0.
struct Monomial {
    long n = 0;
    long m = 0;

    long degree() const { return n + m; }
    Monomial operator*(const Monomial& o) const { return {n + o.n, m + o.m}; }
    bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic order: total degree first, then larger x-exponent first.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.n > b.n;
    }
};

inline bool graded_less(const Monomial& a, const Monomial& b) { return GradedLex{}(a, b); }

/// Selects F[x,y] (unital) or the ideal F0[x,y] without constants.
struct AlgebraContext {
    bool unital = true;

    static AlgebraContext F() { return {true}; }
    static AlgebraContext F0() { return {false}; }

    bool admissible(const Monomial& z) const {
        return z.n >= 0 && z.m >= 0 && (unital || z.degree() > 0);
    }
    std::string name() const { return unital ? "unital" : "nonunital"; }
    bool operator==(const AlgebraContext&) const = default;
};

/// Degree floor: 0 on F[x,y]; on F0[x,y] it is 1 at n = 0 and 0 otherwise.
long nu(long n, const AlgebraContext& ctx);

/// Every admissible monomial of total degree <= max_degree, in graded-lex order.
std::vector<Monomial> admissible_monomials(const AlgebraContext& ctx, long max_degree);

/// Finite sum of nonzero rational multiples of monomials.
class SparsePolynomial {
public:
    using Map = std::map<Monomial, Rational, GradedLex>;

    SparsePolynomial() = default;
    SparsePolynomial(const Monomial& z, const Rational& c) { add_term(z, c); }

    void add_term(const Monomial& z, const Rational& c);
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Monomial& z) const;

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial operator+(const SparsePolynomial& o) const { SparsePolynomial r = *this; return r += o; }
    SparsePolynomial scaled(const Rational& a) const;
    bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    Map terms_;
};

SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b);

} // namespace rbm
