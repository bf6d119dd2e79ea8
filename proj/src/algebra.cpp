#include "rbmono/algebra.hpp"

namespace rbm {

long nu(long n, const AlgebraContext& ctx) {
    if (ctx.unital) return 0;
    return n == 0 ? 1 : 0;
}

std::vector<Monomial> admissible_monomials(const AlgebraContext& ctx, long max_degree) {
    std::vector<Monomial> out;
    for (long d = ctx.unital ? 0 : 1; d <= max_degree; ++d)
        for (long n = d; n >= 0; --n) out.push_back({n, d - n});
    return out;
}

void SparsePolynomial::add_term(const Monomial& z, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(z, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational SparsePolynomial::coeff(const Monomial& z) const {
    auto it = terms_.find(z);
    return it == terms_.end() ? Rational(0) : it->second;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    for (const auto& [z, c] : o.terms_) add_term(z, c);
    return *this;
}

SparsePolynomial SparsePolynomial::scaled(const Rational& a) const {
    SparsePolynomial r;
    if (a.is_zero()) return r;
    for (const auto& [z, c] : terms_) r.terms_.emplace(z, c * a);
    return r;
}

std::string SparsePolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + it->second.str() + ")";
        if (it->first.n) s += "*x^" + std::to_string(it->first.n);
        if (it->first.m) s += "*y^" + std::to_string(it->first.m);
    }
    return s;
}

SparsePolynomial poly_mul(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial r;
    for (const auto& [za, ca] : a.terms())
        for (const auto& [zb, cb] : b.terms()) r.add_term(za * zb, ca * cb);
    return r;
}

} // namespace rbm
