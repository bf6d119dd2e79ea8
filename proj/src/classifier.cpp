#include "rbmono/classifier.hpp"

#include "rbmono/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rbm {

ProgressionFit fit_progression(std::vector<long> support) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    if (support.empty()) return {};
    if (support.size() == 1) return {ProgressionFit::Kind::Singleton, support[0], 0};
    const long gap = support[1] - support[0];
    for (std::size_t i = 2; i < support.size(); ++i)
        if (support[i] - support[i - 1] != gap)
            throw NotAProgression("not an arithmetic progression at " + std::to_string(support[i]), support[i]);
    return {ProgressionFit::Kind::Progression, support[0], gap};
}

namespace {

struct Hypothesis {
    FamilySpec spec;
    bool determined = true;
};

using Rows = TermTable;

bool all_coeffs_one(const Rows& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const auto& e) { return e.second.coeff == Rational(1); });
}

std::optional<Monomial> constant_shift(const Rows& rows) {
    std::optional<Monomial> p;
    for (const auto& [z, t] : rows) {
        Monomial s{t.mono.n - z.n, t.mono.m - z.m};
        if (p && !(*p == s)) return std::nullopt;
        p = s;
    }
    return p;
}

Rational coeff_at(const Rows& rows, long n, long m) {
    auto it = rows.find(Monomial{n, m});
    return it == rows.end() ? Rational(0) : it->second.coeff;
}

long gcd_of_gaps(const std::map<long, std::vector<long>>& lines) {
    long g = 0;
    for (const auto& [i, pts] : lines)
        for (std::size_t j = 1; j < pts.size(); ++j) g = std::gcd(g, pts[j] - pts[j - 1]);
    return g;
}

// ---- index-set fitting ----

struct RowFit {
    long i;
    long k;
    long floor;
    Rational seed;
};

void add_indices(IndexGroup& g, std::vector<long> idx) {
    std::vector<long> pos, neg;
    for (long i : idx) (i >= 0 ? pos : neg).push_back(i);
    auto place = [&](std::vector<long> part, long sign) {
        if (part.empty()) return;
        std::vector<long> mag;
        for (long i : part) mag.push_back(sign * i);
        try {
            ProgressionFit f = fit_progression(mag);
            if (f.kind == ProgressionFit::Kind::Singleton) g.elements.push_back(sign * f.offset);
            else g.progressions.push_back({sign * f.offset, sign * f.gap});
            return;
        } catch (const NotAProgression&) {
        }
        std::sort(mag.begin(), mag.end());
        // union of residue classes, each a progression with the modulus as gap
        for (long M = 2; M <= mag.back() - mag.front(); ++M) {
            std::map<long, std::vector<long>> classes;
            for (long v : mag) classes[((v % M) + M) % M].push_back(v);
            bool ok = true;
            for (const auto& [res, vs] : classes)
                for (std::size_t j = 1; j < vs.size() && ok; ++j) ok = vs[j] - vs[j - 1] == M;
            if (!ok) continue;
            for (const auto& [res, vs] : classes) {
                if (vs.size() == 1) g.elements.push_back(sign * vs[0]);
                else g.progressions.push_back({sign * vs[0], sign * M});
            }
            return;
        }
        for (long v : mag) g.elements.push_back(sign * v);
    };
    place(pos, 1);
    place(neg, -1);
    std::sort(g.elements.begin(), g.elements.end());
}

IndexSet group_rows(const std::vector<RowFit>& rows, bool prefer_relative) {
    std::vector<Rational> seeds;
    std::map<std::size_t, std::vector<RowFit>> by_seed;
    for (const auto& r : rows) {
        auto it = std::find(seeds.begin(), seeds.end(), r.seed);
        std::size_t idx = static_cast<std::size_t>(it - seeds.begin());
        if (it == seeds.end()) seeds.push_back(r.seed);
        by_seed[idx].push_back(r);
    }
    IndexSet I;
    for (const auto& [idx, cls] : by_seed) {
        const bool same_k = std::all_of(cls.begin(), cls.end(), [&](const RowFit& r) { return r.k == cls[0].k; });
        const bool same_off = std::all_of(cls.begin(), cls.end(),
                                          [&](const RowFit& r) { return r.k - r.floor == cls[0].k - cls[0].floor; });
        std::map<std::pair<bool, long>, std::vector<long>> parts;
        for (const auto& r : cls) {
            bool rel = prefer_relative ? (same_off || !same_k) : (!same_k && same_off);
            if (rel && !same_off) rel = false;
            parts[{rel, rel ? r.k - r.floor : r.k}].push_back(r.i);
        }
        for (const auto& [key, idxs] : parts) {
            IndexGroup g;
            g.k = {key.first, key.second};
            g.seed = seeds[idx];
            add_indices(g, idxs);
            if (g.k.relative && g.progressions.empty()) {
                // finitely many rows sharing one k: state it as a constant
                long k0 = -1;
                bool same = true;
                for (const auto& r : cls)
                    if (std::find(g.elements.begin(), g.elements.end(), r.i) != g.elements.end()) {
                        if (k0 >= 0 && r.k != k0) same = false;
                        k0 = r.k;
                    }
                if (same) g.k = {false, k0};
            }
            I.groups.push_back(std::move(g));
        }
    }
    return I;
}

// ---- family hypotheses ----

// (r, c) options with every row l mapping into y^{m + rl + c}.
std::vector<std::pair<long, long>> case_ii_rc(const Rows& rows) {
    std::vector<std::pair<long, long>> rc;
    std::map<long, long> d_of_row;
    for (const auto& [z, t] : rows) {
        if (t.mono.n != 0) return {};
        long d = t.mono.m - z.m;
        auto [it, fresh] = d_of_row.emplace(z.n, d);
        if (!fresh && it->second != d) return {};
    }
    if (d_of_row.size() >= 2) {
        auto a = *d_of_row.begin(), b = *std::next(d_of_row.begin());
        if ((b.second - a.second) % (b.first - a.first) != 0) return {};
        long r = (b.second - a.second) / (b.first - a.first);
        long c = a.second - r * a.first;
        for (const auto& [l, d] : d_of_row)
            if (d != r * l + c) return {};
        rc.emplace_back(r, c);
    } else {
        auto [l, d] = *d_of_row.begin();
        if (l == 0) rc.emplace_back(0, d);
        else
            for (long r = 0; r * l <= d; ++r) rc.emplace_back(r, d - r * l);
    }
    return rc;
}

void row_family(const Rows& rows, const AlgebraContext& ctx, bool case_i, std::vector<Hypothesis>& out) {
    std::vector<std::pair<long, long>> rc;   // (r, c) options
    if (!case_i) {
        rc = case_ii_rc(rows);
    } else {
        std::optional<long> c, r;
        for (const auto& [z, t] : rows) {
            long cc = t.mono.m - z.m;
            if (c && *c != cc) return;
            c = cc;
            if (t.mono.m > 0) {
                if (t.mono.n % t.mono.m != 0) return;
                long rr = t.mono.n / t.mono.m;
                if (r && *r != rr) return;
                r = rr;
            } else if (t.mono.n != 0) {
                return;
            }
        }
        rc.emplace_back(r.value_or(0), *c);
    }
    for (auto [r, c] : rc) {
        if (r < 0 || c < 0) continue;
        std::map<long, std::vector<long>> lines;   // row index -> positions
        for (const auto& [z, t] : rows) {
            if (case_i) lines[z.n - r * z.m].push_back(z.m);
            else lines[z.n].push_back(z.m);
        }
        std::vector<RowFit> fits;
        long max_kd = 1;
        for (auto& [i, pts] : lines) {
            std::sort(pts.begin(), pts.end());
            long floor_i;
            try {
                floor_i = case_i ? zeta(r, i, ctx) : nu(i, ctx);
            } catch (const InvalidParams&) {
                fits.clear();
                break;
            }
            long k = pts.front();
            Rational seed = case_i ? coeff_at(rows, r * k + i, k) : coeff_at(rows, i, k);
            fits.push_back({i, k, floor_i, seed});
            max_kd = std::max(max_kd, k + (case_i ? c : r * i + c));
        }
        if (fits.empty()) continue;
        long g = gcd_of_gaps(lines);
        std::vector<long> deltas;
        if (g > 0) deltas.push_back(g);
        else
            for (long dl = 1; dl <= max_kd; ++dl) deltas.push_back(dl);
        for (long delta : deltas)
            for (bool rel : {true, false}) {
                RowFamilyParams p;
                p.r = r;
                p.c = c;
                p.delta = delta;
                p.I = group_rows(fits, rel);
                FamilySpec s;
                s.family = case_i ? Family::RB_I : Family::RB_II;
                s.ctx = ctx;
                s.params = p;
                out.push_back({s, g > 0});
            }
    }
}

void averaging_forms(const Rows& rows, const AlgebraContext& ctx, std::vector<Hypothesis>& out) {
    if (!all_coeffs_one(rows)) return;
    const Term& first = rows.begin()->second;
    const Monomial& z0 = rows.begin()->first;
    auto push = [&](Family f, AvgFormParams p) {
        FamilySpec s;
        s.family = f;
        s.ctx = ctx;
        s.params = p;
        out.push_back({s, true});
    };
    {
        long c = first.mono.m - z0.m;
        long r = 0;
        for (const auto& [z, t] : rows)
            if (t.mono.m > 0) {
                r = t.mono.n / t.mono.m;
                break;
            }
        push(Family::AVG_I, {r, c, 0});
    }
    for (auto [r, c] : case_ii_rc(rows)) push(Family::AVG_II, {r, c, 0});
    if (auto p = constant_shift(rows)) push(Family::AVG_III, {0, p->m, p->n});
    push(Family::AVG_IV, {});
}

void idsupp(const Rows& rows, const AlgebraContext& ctx, long D, std::vector<Hypothesis>& out) {
    if (ctx.unital) return;
    auto p = constant_shift(rows);
    if (!p || p->n != 0 || p->m != 0) return;
    const Monomial P = rows.begin()->first;   // least in graded order
    {
        IdSuppParams s;
        s.two_generator = false;
        s.l = P.n;
        s.r = P.m;
        s.gamma = rows.begin()->second.coeff;
        FamilySpec f{Family::RB_IDSUPP, ctx, false, s};
        out.push_back({f, rows.size() >= 2});
    }
    std::vector<Hypothesis> two;
    for (long k1 = 1; k1 <= D; ++k1) {
        Rational a1 = coeff_at(rows, k1, 0);
        if (a1.is_zero()) continue;
        for (long k2 = 1; k2 <= D; ++k2) {
            Rational a2 = coeff_at(rows, 0, k2);
            if (a2.is_zero()) continue;
            const long d = std::gcd(k1, k2);
            for (long a = 0; a < d; ++a)
                for (long b = 1; b <= d; ++b) {
                    if (d % b != 0 || std::gcd(a, d) % (d / b) != 0) continue;
                    IdSuppParams s;
                    s.two_generator = true;
                    s.k1 = k1;
                    s.k2 = k2;
                    s.alpha1 = a1;
                    s.alpha2 = a2;
                    s.a = a;
                    s.b = b;
                    s.d = d;
                    two.push_back({FamilySpec{Family::RB_IDSUPP, ctx, false, s}, true});
                }
        }
    }
    out.insert(out.end(), two.begin(), two.end());
}

void case_iiia(const Rows& rows, const AlgebraContext& ctx, std::vector<Hypothesis>& out) {
    auto p = constant_shift(rows);
    if (!p || p->n <= 0 || p->m < 0) return;
    std::vector<Monomial> pts;
    for (const auto& [z, t] : rows) pts.push_back(z);
    std::sort(pts.begin(), pts.end(), [](const Monomial& a, const Monomial& b) { return a.m < b.m; });
    const Monomial base = pts.front();
    std::vector<long> deltas;
    bool determined = pts.size() >= 2;
    if (determined) deltas.push_back(pts[1].m - base.m);
    else
        for (long dl = std::max(base.m, 1L); dl <= base.m + p->m; ++dl) deltas.push_back(dl);
    const bool rb = !all_coeffs_one(rows);
    for (long dl : deltas) {
        if (dl <= 0) continue;
        CaseIIIAParams c;
        c.p_x = p->n;
        c.p_y = p->m;
        c.k = base.n;
        c.c = base.m;
        c.delta = dl;
        c.seed = coeff_at(rows, base.n, base.m);
        for (Family f : {Family::AVG_IIIA, Family::RB_IIIA}) {
            if ((f == Family::RB_IIIA) != rb) continue;
            out.push_back({FamilySpec{f, ctx, false, c}, determined});
        }
    }
}

// rows of the support keyed by y-exponent, each sorted by x-exponent
std::map<long, std::vector<long>> rows_by_m(const Rows& rows) {
    std::map<long, std::vector<long>> by_m;
    for (const auto& [z, t] : rows) by_m[z.m].push_back(z.n);
    for (auto& [m, v] : by_m) std::sort(v.begin(), v.end());
    return by_m;
}

void trim_tail(Seq& s) {
    if (!s.tail) return;
    while (!s.prefix.empty() && s.prefix.back() == *s.tail) s.prefix.pop_back();
}

// Row starts of case iii b follow from the first two rows: the recurrence forces k_n mod Delta
// to be affine in n, and 0 <= k_n - floor(n) < Delta fixes k_n itself.
void case_iiib0(const Rows& rows, const AlgebraContext& ctx, long D, std::vector<Hypothesis>& out) {
    auto p = constant_shift(rows);
    if (!p || p->n <= 0 || p->m != 0) return;
    auto by_m = rows_by_m(rows);
    if (!by_m.count(0) || by_m.size() < 2) return;
    const long c = std::next(by_m.begin())->first;
    for (const auto& [m, xs] : by_m)
        if (m % c != 0) return;
    if (!by_m.count(c)) return;
    const long g = gcd_of_gaps(by_m);
    const long k0 = by_m[0].front(), k1 = by_m[c].front();
    std::vector<long> deltas;
    if (g > 0) deltas.push_back(g);
    else
        for (long dl = 1; dl <= k0 + p->n; ++dl) deltas.push_back(dl);
    const bool rb = !all_coeffs_one(rows);
    const long count = 2 * D + 12;
    for (long dl : deltas) {
        // for n >= 1: k_n = (alpha*n - p_x) mod Delta with alpha = k1 + p_x
        std::vector<long> k{k0};
        for (long n = 1; n < count; ++n) k.push_back((((k1 + p->n) * n - p->n) % dl + dl) % dl);
        bool ok = k[1] == k1;
        for (const auto& [m, xs] : by_m)
            if (m / c < count && xs.front() != k[static_cast<std::size_t>(m / c)]) ok = false;
        if (!ok) continue;
        CaseIIIB0Params q;
        q.p_x = p->n;
        q.c = c;
        q.delta = dl;
        q.k0 = k0;
        q.k1 = k1;
        q.sigma.first = 1;
        for (long s = 1; s + 1 < count; ++s) {
            long num = q.k1 + q.p_x - (k[s + 1] - k[s]);
            if (num % dl != 0) ok = false;
            q.sigma.prefix.push_back(num / dl);
        }
        if (!ok) continue;
        if (std::all_of(q.sigma.prefix.begin(), q.sigma.prefix.end(), [&](long v) { return v == q.sigma.prefix[0]; })) {
            q.sigma.tail = q.sigma.prefix[0];
            q.sigma.prefix.clear();
        }
        q.seed0 = coeff_at(rows, q.k0, 0);
        q.seed1 = coeff_at(rows, q.k1, c);
        Family f = rb ? Family::RB_IIIB0 : Family::AVG_IIIB0;
        out.push_back({FamilySpec{f, ctx, false, q}, g > 0});
    }
}

void case_iiibplus(const Rows& rows, const AlgebraContext& ctx, long D, std::vector<Hypothesis>& out) {
    auto p = constant_shift(rows);
    if (!p || p->n <= 0 || p->m <= 0) return;
    auto by_m = rows_by_m(rows);
    const long c_y = by_m.begin()->first;
    long gy = 0;
    for (const auto& [m, xs] : by_m) gy = std::gcd(gy, m - c_y);
    std::vector<long> dys;
    if (gy > 0) dys.push_back(gy);
    else
        for (long dl = c_y + 1; dl <= c_y + p->m; ++dl) dys.push_back(dl);
    const long gx = gcd_of_gaps(by_m);
    const bool rb = !all_coeffs_one(rows);
    for (long dy : dys) {
        if ((c_y + p->m) % dy != 0 || !by_m.count(c_y + dy)) continue;
        const long r = (c_y + p->m) / dy;
        const long k0 = by_m[c_y].front(), k1 = by_m[c_y + dy].front();
        const long count = 2 * D + 4 * r + 12;
        std::vector<long> dxs;
        if (gx > 0) dxs.push_back(gx);
        else
            for (long dl = 1; dl <= k0 + p->n; ++dl) dxs.push_back(dl);
        for (long dx : dxs) {
            // k_n mod Delta_x is affine in n; the floor nu(row) fixes the representative
            std::vector<long> k;
            for (long n = 0; n < count; ++n) {
                long res = ((k0 + n * (k1 - k0)) % dx + dx) % dx;
                long f = nu(c_y + dy * n, ctx);
                k.push_back(f + ((res - f) % dx + dx) % dx);
            }
            bool ok = true;
            for (const auto& [m, xs] : by_m) {
                long v = (m - c_y) / dy;
                if ((m - c_y) % dy != 0 || (v < count && xs.front() != k[static_cast<std::size_t>(v)])) ok = false;
            }
            if (!ok) continue;
            CaseIIIBPlusParams q;
            q.p_x = p->n;
            q.p_y = p->m;
            q.c_y = c_y;
            q.delta_y = dy;
            q.r_y = r;
            q.delta_x = dx;
            q.c_x = ((-q.p_x) % dx + dx) % dx;
            q.r_x = (q.c_x + q.p_x) / dx;
            q.k0 = k0;
            q.sigma0.first = 0;
            q.sigma1.first = 1;
            for (long n = 0; n + r < count; ++n) {
                long num = q.k0 + q.p_x - (k[n + r] - k[n]);
                if (num % dx != 0) ok = false;
                q.sigma0.prefix.push_back(num / dx);
            }
            for (long s = 1; s <= r - 1; ++s) {
                long num = k[1] + k[s] + q.p_x - k[1 + s + r];
                if (num % dx != 0) ok = false;
                q.sigma1.prefix.push_back(num / dx);
            }
            if (!ok) continue;
            const auto& s0 = q.sigma0.prefix;
            if (s0.size() > 1 && std::all_of(s0.begin() + 1, s0.end(), [&](long v) { return v == s0[1]; })) {
                q.sigma0.tail = s0[1];
                trim_tail(q.sigma0);
            }
            q.seed_a = coeff_at(rows, q.k0, c_y);
            q.seed_b = coeff_at(rows, q.k0 + dx, c_y);
            if (rb && q.seed_b.is_zero()) continue;
            Family f = rb ? Family::RB_IIIBPlus : Family::AVG_IIIBPlus;
            out.push_back({FamilySpec{f, ctx, false, q}, gx > 0 && gy > 0});
        }
    }
}

bool reproduces(const FamilySpec& spec, const MonomialOperator& view, long D) {
    if (!validate_family_params(spec)) return false;
    try {
        MonomialOperator built = closed_form_operator(spec);
        for (const auto& z : admissible_monomials(view.ctx(), D))
            if (!(built.eval(z) == view.eval(z))) return false;
    } catch (const InvalidParams&) {
        return false;
    } catch (const DegenerateDenominator&) {
        return false;
    }
    return true;
}

} // namespace

ClassificationResult classify(const MonomialOperator& table, long coverage_degree) {
    if (coverage_degree < 0) throw InvalidParams("coverage degree must be natural");
    if (coverage_degree > table.coverage())
        throw CoverageError("table covers degree " + std::to_string(table.coverage()) + " but classification asked for " +
                            std::to_string(coverage_degree));
    const AlgebraContext ctx = table.ctx();
    ClassificationResult res;
    const Rows base_rows = table.rows(coverage_degree);
    if (base_rows.empty()) {
        res.status = ClassificationResult::Status::ZeroOperator;
        for (Family f : all_families())
            if (is_rb(f)) res.vacuous_families.push_back(f);
        return res;
    }
    const MonomialOperator truncated = table.truncated(coverage_degree);
    std::set<std::string> seen;
    for (bool swapped : {false, true}) {
        const MonomialOperator view = swapped ? conjugate_swap(truncated) : truncated;
        const Rows rows = view.rows(coverage_degree);
        std::vector<Hypothesis> hyps;
        averaging_forms(rows, ctx, hyps);
        row_family(rows, ctx, false, hyps);
        row_family(rows, ctx, true, hyps);
        idsupp(rows, ctx, coverage_degree, hyps);
        case_iiia(rows, ctx, hyps);
        case_iiib0(rows, ctx, coverage_degree, hyps);
        case_iiibplus(rows, ctx, coverage_degree, hyps);
        std::vector<Candidate> two_gen;
        for (auto& h : hyps) {
            if (!reproduces(h.spec, view, coverage_degree)) continue;
            h.spec.swapped = swapped;
            if (!seen.insert(spec_to_json(h.spec).dump()).second) continue;
            Candidate c{h.spec, h.determined, coverage_degree};
            const auto* id = std::get_if<IdSuppParams>(&h.spec.params);
            if (id && id->two_generator) two_gen.push_back(c);
            else res.candidates.push_back(c);
        }
        // several generator triples fitting the same truncation are reported, none preferred
        for (auto& c : two_gen) {
            c.exact = two_gen.size() == 1;
            res.candidates.push_back(c);
        }
    }
    if (res.candidates.empty())
        throw Unclassifiable("no classified family reproduces the table up to degree " + std::to_string(coverage_degree));
    std::stable_sort(res.candidates.begin(), res.candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.spec.family != b.spec.family) return a.spec.family < b.spec.family;
        return a.spec.swapped < b.spec.swapped;
    });
    return res;
}

ClassificationResult classify_report(const MonomialOperator& table, long coverage_degree) {
    try {
        return classify(table, coverage_degree);
    } catch (const Unclassifiable& e) {
        ClassificationResult res;
        res.status = ClassificationResult::Status::Unclassifiable;
        res.reason = e.what();
        return res;
    }
}

CheckReport round_trip(const FamilySpec& spec, long coverage_degree, bool* exact) {
    CheckReport rep;
    if (exact) *exact = false;
    MonomialOperator table = build(spec).truncated(coverage_degree);
    ClassificationResult res = classify_report(table, coverage_degree);
    switch (res.status) {
    case ClassificationResult::Status::ZeroOperator:
        rep.pairs_checked = 1;
        if (exact) *exact = true;
        break;
    case ClassificationResult::Status::Unclassifiable:
        rep.fail({{coverage_degree}, "", "", res.reason});
        break;
    case ClassificationResult::Status::Classified:
        rep.pairs_checked = res.candidates.size();
        for (const auto& c : res.candidates)
            if (c.exact && exact) *exact = true;
        break;
    }
    return rep;
}

MonomialOperator nonlinear_averaging_counterexample(long a, AlgebraContext ctx) {
    if (a <= 1) throw InvalidParams("counterexample needs a >= 2");
    return MonomialOperator::closed(
        ctx,
        [a](const Monomial& z) {
            const long b = z.n % a;
            return Term{Rational(1), {z.n - b, z.m + b}};
        },
        "nonlinear-averaging");
}

json classification_to_json(const ClassificationResult& r) {
    json cands = json::array();
    for (const auto& c : r.candidates)
        cands.push_back({{"spec", spec_to_json(c.spec)},
                         {"fit_quality", c.exact ? "exact" : "partial"},
                         {"coverage_degree_checked", c.coverage_degree_checked}});
    json j{{"candidates", cands}};
    switch (r.status) {
    case ClassificationResult::Status::Classified: j["status"] = "classified"; break;
    case ClassificationResult::Status::ZeroOperator: {
        j["status"] = "zero-operator";
        json fams = json::array();
        for (Family f : r.vacuous_families) fams.push_back(to_string(f));
        j["vacuous_families"] = fams;
        break;
    }
    case ClassificationResult::Status::Unclassifiable:
        j["status"] = "unclassifiable";
        j["reason"] = r.reason;
        break;
    }
    return j;
}

} // namespace rbm
