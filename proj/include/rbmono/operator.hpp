// SPDX-License-Identifier: MIT
#pragma once

#include "rbmono/algebra.hpp"
#include "rbmono/errors.hpp"

#include <climits>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace rbm {

/// coeff * mono. A zero coefficient is the canonical zero term, whatever mono says.
struct Term {
    Rational coeff;
    Monomial mono;

    static Term zero() { return {}; }
    bool is_zero() const { return coeff.is_zero(); }
    SparsePolynomial poly() const { return SparsePolynomial(mono, coeff); }
    friend bool operator==(const Term& a, const Term& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.coeff == b.coeff && a.mono == b.mono;
    }
};

using TermTable = std::map<Monomial, Term, GradedLex>;

class MonomialOperator {
public:
    using Rule = std::function<Term(const Monomial&)>;

    static constexpr long kUnbounded = LONG_MAX;

    /// Total operator given by a rule; the rule is only called on admissible inputs.
    static MonomialOperator closed(AlgebraContext ctx, Rule rule, std::string label = "closed");
    /// Finite table; inputs above `coverage` raise CoverageError, absent rows are zero.
    static MonomialOperator table(AlgebraContext ctx, TermTable rows, long coverage);
    static MonomialOperator zero(AlgebraContext ctx);

    Term eval(const Monomial& z) const;
    SparsePolynomial apply(const SparsePolynomial& p) const;

    const AlgebraContext& ctx() const { return ctx_; }
    bool is_table() const { return table_ != nullptr; }
    long coverage() const { return coverage_; }
    const std::string& label() const { return label_; }

    /// Nonzero rows for every admissible monomial up to `degree`.
    TermTable rows(long degree) const;
    /// Table-backed copy restricted to total degree <= degree.
    MonomialOperator truncated(long degree) const;

private:
    AlgebraContext ctx_;
    Rule rule_;
    std::shared_ptr<const TermTable> table_;
    long coverage_ = kUnbounded;
    std::string label_;
};

Term eval_term(const MonomialOperator& op, const Monomial& z, const AlgebraContext& ctx);
SparsePolynomial apply(const MonomialOperator& op, const SparsePolynomial& p, const AlgebraContext& ctx);

MonomialOperator scale(const MonomialOperator& op, const Rational& a);
/// psi o op o psi with psi(x) = y, psi(y) = x.
MonomialOperator conjugate_swap(const MonomialOperator& op);

struct Witness {
    std::vector<long> at;   // indices of the failing instance
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct CheckReport {
    static constexpr std::size_t kKeptWitnesses = 10;

    bool passed = true;
    std::size_t pairs_checked = 0;
    std::size_t failures = 0;
    std::vector<Witness> witnesses;   // first kKeptWitnesses failures in check order

    void fail(Witness w);
    void merge(const CheckReport& other);
};

struct CheckOptions {
    unsigned jobs = 1;
};

/// R(a)R(b) = R(R(a)b + aR(b)) for admissible monomials a <= b of degree <= max_degree.
CheckReport check_rb0(const MonomialOperator& op, const AlgebraContext& ctx, long max_degree,
                      CheckOptions opts = {});
/// T(a)T(b) = T(T(a)b) = T(aT(b)) on the same pair set.
CheckReport check_averaging(const MonomialOperator& op, const AlgebraContext& ctx, long max_degree,
                            CheckOptions opts = {});

/// Coefficient-only view (n, m) -> coefficient, with declared coverage degree.
struct CoefficientTable {
    std::map<Monomial, Rational, GradedLex> coeffs;
    long coverage = 0;

    Rational at(long n, long m) const;
    static CoefficientTable from_operator(const MonomialOperator& op, long coverage);
};

enum class RelationKind { CaseII, CaseI, CaseIII, Reciprocal };

struct RelationParams {
    RelationKind kind = RelationKind::CaseIII;
    long r = 0;
    long c = 0;
    long p_x = 0;
    long p_y = 0;
};

RelationKind relation_kind_from_string(const std::string& s);
std::string to_string(RelationKind k);

/// Checks the selected coefficient identity on index pairs of degree <= max_index.
CheckReport check_coefficient_relation(const CoefficientTable& table, const RelationParams& rel,
                                       const AlgebraContext& ctx, long max_index);

} // namespace rbm
