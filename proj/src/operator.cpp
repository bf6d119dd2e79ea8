#include "rbmono/operator.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>

namespace rbm {

MonomialOperator MonomialOperator::closed(AlgebraContext ctx, Rule rule, std::string label) {
    MonomialOperator op;
    op.ctx_ = ctx;
    op.rule_ = std::move(rule);
    op.label_ = std::move(label);
    return op;
}

MonomialOperator MonomialOperator::table(AlgebraContext ctx, TermTable rows, long coverage) {
    TermTable clean;
    for (auto& [z, t] : rows) {
        if (!ctx.admissible(z)) throw InvalidParams("table row for inadmissible monomial");
        if (z.degree() > coverage) throw InvalidParams("table row above declared coverage");
        if (t.is_zero()) continue;
        if (!ctx.admissible(t.mono)) throw InvalidParams("table maps into a constant on F0[x,y]");
        clean.emplace(z, t);
    }
    MonomialOperator op;
    op.ctx_ = ctx;
    op.table_ = std::make_shared<const TermTable>(std::move(clean));
    op.coverage_ = coverage;
    op.label_ = "table";
    return op;
}

MonomialOperator MonomialOperator::zero(AlgebraContext ctx) {
    return closed(ctx, [](const Monomial&) { return Term::zero(); }, "zero");
}

Term MonomialOperator::eval(const Monomial& z) const {
    if (!ctx_.admissible(z)) throw InvalidParams("monomial not admissible in " + ctx_.name());
    if (table_) {
        if (z.degree() > coverage_)
            throw CoverageError("evaluation at degree " + std::to_string(z.degree()) +
                                " exceeds table coverage " + std::to_string(coverage_));
        auto it = table_->find(z);
        return it == table_->end() ? Term::zero() : it->second;
    }
    Term t = rule_(z);
    if (t.is_zero()) return Term::zero();
    return t;
}

SparsePolynomial MonomialOperator::apply(const SparsePolynomial& p) const {
    SparsePolynomial out;
    for (const auto& [z, c] : p.terms()) {
        Term t = eval(z);
        if (!t.is_zero()) out.add_term(t.mono, t.coeff * c);
    }
    return out;
}

TermTable MonomialOperator::rows(long degree) const {
    TermTable out;
    for (const auto& z : admissible_monomials(ctx_, degree)) {
        Term t = eval(z);
        if (!t.is_zero()) out.emplace(z, t);
    }
    return out;
}

MonomialOperator MonomialOperator::truncated(long degree) const {
    return table(ctx_, rows(degree), degree);
}

Term eval_term(const MonomialOperator& op, const Monomial& z, const AlgebraContext& ctx) {
    if (!ctx.admissible(z)) throw InvalidParams("monomial not admissible in " + ctx.name());
    return op.eval(z);
}

SparsePolynomial apply(const MonomialOperator& op, const SparsePolynomial& p, const AlgebraContext& ctx) {
    for (const auto& [z, c] : p.terms())
        if (!ctx.admissible(z)) throw InvalidParams("polynomial has an inadmissible monomial");
    return op.apply(p);
}

MonomialOperator scale(const MonomialOperator& op, const Rational& a) {
    if (a.is_zero()) throw ZeroScalarError("scale by zero");
    if (op.is_table()) {
        TermTable rows = op.rows(op.coverage());
        for (auto& [z, t] : rows) t.coeff *= a;
        return MonomialOperator::table(op.ctx(), std::move(rows), op.coverage());
    }
    return MonomialOperator::closed(
        op.ctx(),
        [op, a](const Monomial& z) {
            Term t = op.eval(z);
            t.coeff *= a;
            return t;
        },
        op.label());
}

static Monomial swapped(const Monomial& z) { return {z.m, z.n}; }

MonomialOperator conjugate_swap(const MonomialOperator& op) {
    if (op.is_table()) {
        TermTable rows;
        for (const auto& [z, t] : op.rows(op.coverage())) rows.emplace(swapped(z), Term{t.coeff, swapped(t.mono)});
        return MonomialOperator::table(op.ctx(), std::move(rows), op.coverage());
    }
    return MonomialOperator::closed(
        op.ctx(),
        [op](const Monomial& z) {
            Term t = op.eval(swapped(z));
            if (t.is_zero()) return Term::zero();
            return Term{t.coeff, swapped(t.mono)};
        },
        op.label());
}

void CheckReport::fail(Witness w) {
    passed = false;
    ++failures;
    if (witnesses.size() < kKeptWitnesses) witnesses.push_back(std::move(w));
}

void CheckReport::merge(const CheckReport& other) {
    pairs_checked += other.pairs_checked;
    failures += other.failures;
    if (!other.passed) passed = false;
    for (const auto& w : other.witnesses)
        if (witnesses.size() < kKeptWitnesses) witnesses.push_back(w);
}

namespace {

// Runs `body(i, j, report)` over all i <= j < count. Rows are dealt round-robin to
// workers; per-row reports are merged in row order so the result does not depend
// on the worker count.
template <class Body>
CheckReport sweep_pairs(std::size_t count, unsigned jobs, Body body) {
    std::vector<CheckReport> per_row(count);
    std::vector<std::exception_ptr> errors(count);
    auto work = [&](unsigned worker, unsigned stride) {
        for (std::size_t i = worker; i < count; i += stride) {
            try {
                for (std::size_t j = i; j < count; ++j) body(i, j, per_row[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (n == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < n; ++w) pool.emplace_back(work, w, n);
        for (auto& t : pool) t.join();
    }
    CheckReport total;
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        total.merge(per_row[i]);
    }
    return total;
}

SparsePolynomial image(const MonomialOperator& op, const Term& t) {
    if (t.is_zero()) return {};
    Term r = op.eval(t.mono);
    if (r.is_zero()) return {};
    return SparsePolynomial(r.mono, r.coeff * t.coeff);
}

Term times(const Term& t, const Monomial& z) {
    if (t.is_zero()) return Term::zero();
    return {t.coeff, t.mono * z};
}

std::vector<long> pair_at(const Monomial& a, const Monomial& b) { return {a.n, a.m, b.n, b.m}; }

} // namespace

CheckReport check_rb0(const MonomialOperator& op, const AlgebraContext& ctx, long max_degree, CheckOptions opts) {
    const auto monos = admissible_monomials(ctx, max_degree);
    std::vector<Term> images(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) images[i] = eval_term(op, monos[i], ctx);

    return sweep_pairs(monos.size(), opts.jobs, [&](std::size_t i, std::size_t j, CheckReport& rep) {
        const Monomial& a = monos[i];
        const Monomial& b = monos[j];
        const Term& ra = images[i];
        const Term& rb = images[j];
        ++rep.pairs_checked;
        SparsePolynomial lhs = poly_mul(ra.poly(), rb.poly());
        SparsePolynomial rhs = image(op, times(ra, b)) + image(op, times(rb, a));
        if (!(lhs == rhs)) rep.fail({pair_at(a, b), lhs.str(), rhs.str(), "R(a)R(b) != R(R(a)b + aR(b))"});
    });
}

CheckReport check_averaging(const MonomialOperator& op, const AlgebraContext& ctx, long max_degree,
                            CheckOptions opts) {
    const auto monos = admissible_monomials(ctx, max_degree);
    std::vector<Term> images(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) images[i] = eval_term(op, monos[i], ctx);

    return sweep_pairs(monos.size(), opts.jobs, [&](std::size_t i, std::size_t j, CheckReport& rep) {
        const Monomial& a = monos[i];
        const Monomial& b = monos[j];
        const Term& ta = images[i];
        const Term& tb = images[j];
        ++rep.pairs_checked;
        SparsePolynomial lhs = poly_mul(ta.poly(), tb.poly());
        SparsePolynomial r1 = image(op, times(ta, b));
        SparsePolynomial r2 = image(op, times(tb, a));
        if (!(lhs == r1)) rep.fail({pair_at(a, b), lhs.str(), r1.str(), "T(a)T(b) != T(T(a)b)"});
        else if (!(lhs == r2)) rep.fail({pair_at(a, b), lhs.str(), r2.str(), "T(a)T(b) != T(aT(b))"});
    });
}

Rational CoefficientTable::at(long n, long m) const {
    if (n < 0 || m < 0) return Rational(0);
    if (n + m > coverage)
        throw CoverageError("coefficient index (" + std::to_string(n) + "," + std::to_string(m) +
                            ") exceeds table coverage " + std::to_string(coverage));
    auto it = coeffs.find({n, m});
    return it == coeffs.end() ? Rational(0) : it->second;
}

CoefficientTable CoefficientTable::from_operator(const MonomialOperator& op, long coverage) {
    CoefficientTable t;
    t.coverage = coverage;
    for (const auto& [z, term] : op.rows(coverage)) t.coeffs.emplace(z, term.coeff);
    return t;
}

RelationKind relation_kind_from_string(const std::string& s) {
    if (s == "case-ii") return RelationKind::CaseII;
    if (s == "case-i") return RelationKind::CaseI;
    if (s == "case-iii") return RelationKind::CaseIII;
    if (s == "reciprocal") return RelationKind::Reciprocal;
    throw InvalidParams("unknown relation selector: " + s);
}

std::string to_string(RelationKind k) {
    switch (k) {
    case RelationKind::CaseII: return "case-ii";
    case RelationKind::CaseI: return "case-i";
    case RelationKind::CaseIII: return "case-iii";
    case RelationKind::Reciprocal: return "reciprocal";
    }
    return "?";
}

CheckReport check_coefficient_relation(const CoefficientTable& table, const RelationParams& rel,
                                       const AlgebraContext& ctx, long max_index) {
    const auto idx = admissible_monomials(ctx, max_index);
    CheckReport rep;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i; j < idx.size(); ++j) {
            const long n = idx[i].n, m = idx[i].m, s = idx[j].n, t = idx[j].m;
            const Rational a = table.at(n, m);
            const Rational b = table.at(s, t);
            ++rep.pairs_checked;
            Rational lhs, rhs;
            switch (rel.kind) {
            case RelationKind::CaseII:
                lhs = a * b;
                rhs = a * table.at(s, rel.r * n + m + t + rel.c) + b * table.at(n, rel.r * s + m + t + rel.c);
                break;
            case RelationKind::CaseI:
                lhs = a * b;
                rhs = a * table.at(rel.r * (m + rel.c) + s, m + t + rel.c) +
                      b * table.at(rel.r * (t + rel.c) + n, m + t + rel.c);
                break;
            case RelationKind::CaseIII:
                lhs = a * b;
                rhs = (a + b) * table.at(n + s + rel.p_x, m + t + rel.p_y);
                break;
            case RelationKind::Reciprocal: {
                if (a.is_zero() || b.is_zero()) continue;
                Rational g = table.at(n + s + rel.p_x, m + t + rel.p_y);
                lhs = g.is_zero() ? Rational(0) : g.reciprocal();
                rhs = a.reciprocal() + b.reciprocal();
                if (g.is_zero()) {
                    rep.fail({{n, m, s, t}, "1/0", rhs.str(), "target coefficient vanishes"});
                    continue;
                }
                break;
            }
            }
            if (!(lhs == rhs)) rep.fail({{n, m, s, t}, lhs.str(), rhs.str(), to_string(rel.kind) + " relation"});
        }
    }
    return rep;
}

} // namespace rbm
