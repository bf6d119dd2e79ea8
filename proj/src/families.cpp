#include "rbmono/families.hpp"

#include "rbmono/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace rbm {

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
    static const std::vector<std::pair<Family, std::string>> names = {
        {Family::AVG_I, "AVG-I"},         {Family::AVG_II, "AVG-II"},       {Family::AVG_III, "AVG-III"},
        {Family::AVG_IV, "AVG-IV"},       {Family::AVG_IIIA, "AVG-IIIA"},   {Family::AVG_IIIB0, "AVG-IIIB0"},
        {Family::AVG_IIIBPlus, "AVG-IIIB+"}, {Family::RB_II, "RB-II"},      {Family::RB_I, "RB-I"},
        {Family::RB_IDSUPP, "RB-IDSUPP"}, {Family::RB_IIIA, "RB-IIIA"},     {Family::RB_IIIB0, "RB-IIIB0"},
        {Family::RB_IIIBPlus, "RB-IIIB+"},
    };
    return names;
}

long ceil_div(long a, long b) {
    // b > 0
    long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

template <class P>
const P& params_as(const FamilySpec& spec) {
    if (const P* p = std::get_if<P>(&spec.params)) return *p;
    throw InvalidParams("parameter record does not match family " + to_string(spec.family));
}

std::string row_tag(long i) { return " (index " + std::to_string(i) + ")"; }

// Indices that must be checked so that every periodic or monotone row condition
// over a progression is decided: all explicit elements plus a prefix of each
// progression longer than one full residue period.
std::vector<long> probe_indices(const IndexGroup& g, long r, long delta) {
    std::vector<long> out(g.elements.begin(), g.elements.end());
    for (const auto& p : g.progressions) {
        long terms = (r + 1) * (delta + std::labs(g.k.value) + std::labs(p.a) + 3) + 3;
        for (long j = 0; j < terms; ++j) out.push_back(p.nth(j));
    }
    return out;
}

// ---- validators -----------------------------------------------------------

Validation fail(std::string why) { return {false, std::move(why)}; }

Validation check_index_set(const IndexSet& I, bool allow_negative) {
    for (const auto& g : I.groups) {
        if (g.seed.is_zero()) return fail("seeds must be nonzero");
        for (long e : g.elements)
            if (e < 0 && !allow_negative) return fail("negative index " + std::to_string(e));
        for (const auto& p : g.progressions) {
            if (p.b == 0) return fail("progression step must be nonzero");
            if (!allow_negative && (p.a < 0 || p.b < 0)) return fail("index set must stay in the naturals");
        }
    }
    if (auto o = I.overlap()) return fail("index groups overlap: " + *o);
    return {};
}

Validation validate_row_family(const FamilySpec& spec, const RowFamilyParams& p) {
    const bool case_i = spec.family == Family::RB_I;
    const AlgebraContext& ctx = spec.ctx;
    if (p.r < 0 || p.c < 0) return fail("r and c must be natural");
    if (p.delta <= 0) return fail("Delta must be positive");
    const bool degenerate = p.r == 0 && p.c == 0;
    if (!degenerate && p.c < nu(0, ctx)) return fail("c < nu(0)");
    if (degenerate && ctx.unital && !p.I.empty())
        return fail("r = c = 0 on F[x,y] admits only R = 0, so no seed may be given");
    if (auto v = check_index_set(p.I, case_i && p.r > 0); !v) return v;
    for (const auto& g : p.I.groups) {
        for (long i : probe_indices(g, p.r, p.delta)) {
            long floor_i, d;
            if (case_i) {
                floor_i = zeta(p.r, i, ctx);
                d = p.c;
            } else {
                floor_i = nu(i, ctx);
                d = p.r * i + p.c;
            }
            long k = g.k.at(i, [&](long) { return floor_i; });
            if (k < floor_i) return fail("k below its row floor" + row_tag(i));
            if (k - floor_i >= p.delta) return fail("k - floor >= Delta" + row_tag(i));
            if (p.delta > k + d) return fail("Delta > k + d" + row_tag(i));
            if ((k + d) % p.delta != 0) return fail("Delta does not divide k + d" + row_tag(i));
        }
    }
    return {};
}

Validation validate_idsupp(const FamilySpec& spec, const IdSuppParams& p) {
    if (spec.ctx.unital) return fail("on F[x,y] the only operator of this shape is R = 0");
    if (!p.two_generator) {
        if (p.l < 0 || p.r < 0 || p.l + p.r == 0) return fail("ray direction must be a nonzero natural pair");
        if (p.gamma.is_zero()) return fail("gamma must be nonzero");
        return {};
    }
    if (p.k1 <= 0 || p.k2 <= 0) return fail("k1 and k2 must be positive");
    if (p.alpha1.is_zero() || p.alpha2.is_zero()) return fail("alpha1 and alpha2 must be nonzero");
    if (p.d != std::gcd(p.k1, p.k2)) return fail("d must equal gcd(k1, k2)");
    if (p.a < 0 || p.a >= p.d) return fail("need 0 <= a < d");
    if (p.b <= 0 || p.d % p.b != 0) return fail("b must divide d");
    if (std::gcd(p.a, p.d) % (p.d / p.b) != 0) return fail("d/b must divide gcd(a, d)");
    return {};
}

Validation validate_iiia(const FamilySpec& spec, const CaseIIIAParams& p, bool rb) {
    const long nu0 = nu(0, spec.ctx);
    if (p.p_x <= 0 || p.p_y < 0) return fail("need p_x > 0 and p_y >= 0");
    if (p.k < nu0 || p.c < nu0) return fail("need k, c >= nu(0)");
    if (p.delta <= 0) return fail("Delta must be positive");
    if (!(p.c <= p.delta && p.delta <= p.c + p.p_y)) return fail("need c <= Delta <= c + p_y");
    if ((p.c + p.p_y) % p.delta != 0) return fail("Delta does not divide c + p_y");
    const long r = (p.c + p.p_y) / p.delta;
    if ((p.k + p.p_x) % r != 0) return fail("support x-step (k + p_x)/r is not an integer");
    const long step = (p.k + p.p_x) / r;
    // With c = Delta the point one step below the seed sits on the x-axis; if it is
    // admissible it lies outside the support while its image lands on the support.
    if (p.c == p.delta && p.k - step >= nu0)
        return fail("c = Delta needs k - (k + p_x)/r < nu(0), otherwise the operator is not averaging");
    if (rb && p.seed.is_zero()) return fail("seed must be nonzero");
    return {};
}

Validation validate_iiib0(const FamilySpec& spec, const CaseIIIB0Params& p, bool rb) {
    const long nu0 = nu(0, spec.ctx);
    if (p.p_x <= 0 || p.c <= 0 || p.delta <= 0) return fail("need p_x, c, Delta > 0");
    if (p.k0 < nu0 || p.k1 < 0) return fail("need k0 >= nu(0), k1 >= 0");
    if (!(p.k0 - nu0 < p.delta && p.delta <= p.k0 + p.p_x)) return fail("need k0 - nu(0) < Delta <= k0 + p_x");
    if ((p.k0 + p.p_x) % p.delta != 0) return fail("Delta does not divide k0 + p_x");
    if (p.sigma.first != 1) return fail("sigma must start at index 1");
    for (long v : p.sigma.prefix)
        if (v < 0) return fail("sigma values must be natural");
    if (p.sigma.tail && *p.sigma.tail < 0) return fail("sigma tail must be natural");
    if (rb && (p.seed0.is_zero() || p.seed1.is_zero())) return fail("seeds must be nonzero");
    if (p.sigma.tail && p.k1 + p.p_x != p.delta * *p.sigma.tail)
        return fail("constant sigma tail makes k_n leave [0, Delta): need k1 + p_x = Delta * tail");
    const long horizon = static_cast<long>(p.sigma.prefix.size()) + (p.sigma.tail ? 3 : 1);
    KSeqAdditiveParams kp{p.p_x, p.delta, p.k0, p.k1, p.sigma};
    KSeqResult ks;
    try {
        ks = k_closed_additive(kp, horizon);
    } catch (const InvalidParams& e) {
        return fail(std::string("row starts: ") + e.what());
    }
    if (!verify_k_recurrence(ks.k, ks.xi, p.p_x, p.delta, 0, horizon).passed)
        return fail("row starts do not satisfy their recurrence");
    for (long n = 1; n <= horizon; ++n)
        if (ks.k[static_cast<std::size_t>(n)] >= p.delta)
            return fail("row start k_" + std::to_string(n) + " >= Delta leaves an admissible gap below the row");
    return {};
}

KSeqShiftedParams shifted_of(const CaseIIIBPlusParams& p) {
    return {p.r_y, p.p_x, p.delta_x, p.k0, p.sigma0, p.sigma1};
}

Validation validate_iiibplus(const FamilySpec& spec, const CaseIIIBPlusParams& p, bool rb) {
    if (p.p_x <= 0 || p.p_y <= 0) return fail("need p_x, p_y > 0");
    if (p.c_x < 0 || p.c_y < 0) return fail("need c_x, c_y >= 0");
    if (p.r_x <= 0 || p.r_y <= 0 || p.delta_x <= 0 || p.delta_y <= 0) return fail("need r_x, r_y, Delta_x, Delta_y > 0");
    if (p.r_x * p.delta_x != p.c_x + p.p_x) return fail("need r_x Delta_x = c_x + p_x");
    if (p.r_y * p.delta_y != p.c_y + p.p_y) return fail("need r_y Delta_y = c_y + p_y");
    if (p.c_y >= p.delta_y) return fail("need c_y < Delta_y, otherwise row c_y - Delta_y breaks the averaging identity");
    if (p.k0 < nu(p.c_y, spec.ctx)) return fail("need k0 >= nu(c_y)");
    if (p.sigma0.first != 0 || p.sigma1.first != 1) return fail("sigma_0 starts at 0, sigma_1 at 1");
    if (static_cast<long>(p.sigma1.prefix.size()) != p.r_y - 1 || p.sigma1.tail)
        return fail("sigma_1 must list exactly r_y - 1 values");
    for (long v : p.sigma0.prefix)
        if (v < 0) return fail("sigma values must be natural");
    for (long v : p.sigma1.prefix)
        if (v < 0) return fail("sigma values must be natural");
    if (p.sigma0.tail && *p.sigma0.tail < 0) return fail("sigma tail must be natural");
    if (rb && (p.seed_a.is_zero() || p.seed_b.is_zero())) return fail("seeds must be nonzero");
    if (p.sigma0.tail && p.k0 + p.p_x != p.delta_x * *p.sigma0.tail)
        return fail("constant sigma_0 tail makes k_l leave [0, Delta_x): need k0 + p_x = Delta_x * tail");
    const long n0 = static_cast<long>(p.sigma0.prefix.size());
    const long horizon = p.sigma0.tail ? n0 + 3 * p.r_y + 3 : n0 - 1 + p.r_y;
    if (horizon < p.r_y) return fail("sigma_0 prefix too short to define k_0..k_{r_y}");
    KSeqResult ks;
    try {
        ks = k_closed_shifted(shifted_of(p), horizon);
    } catch (const InvalidParams& e) {
        return fail(std::string("row starts: ") + e.what());
    }
    if (!verify_k_recurrence(ks.k, ks.xi, p.p_x, p.delta_x, p.r_y, horizon).passed)
        return fail("row starts do not satisfy their recurrence");
    for (long l = 0; l <= horizon; ++l) {
        long k = ks.k[static_cast<std::size_t>(l)];
        long floor_l = nu(p.c_y + p.delta_y * l, spec.ctx);
        if (k < floor_l || k - floor_l >= p.delta_x)
            return fail("need 0 <= k_l - nu(row) < Delta_x" + row_tag(l));
    }
    return {};
}

Validation validate_avg_form(const FamilySpec& spec, const AvgFormParams& p) {
    switch (spec.family) {
    case Family::AVG_I:
        if (p.r < 0 || p.c < nu(0, spec.ctx)) return fail("need r >= 0, c >= nu(0)");
        return {};
    case Family::AVG_II:
        if (p.r < 0 || p.c < 0) return fail("need r, c >= 0");
        if (!spec.ctx.unital && p.r + p.c == 0) return fail("on F0[x,y] need r + c > 0 (x maps to 1 otherwise)");
        return {};
    case Family::AVG_III:
        if (p.gamma < 0 || p.c < 0) return fail("need gamma, c >= 0");
        return {};
    default:
        return {};
    }
}

// ---- closed forms ----------------------------------------------------------

Term row_family_eval(const RowFamilyParams& p, bool case_i, const AlgebraContext& ctx, const Monomial& z) {
    long row, pos, d;
    if (case_i) {
        row = z.n - p.r * z.m;
        pos = z.m;
        d = p.c;
    } else {
        row = z.n;
        pos = z.m;
        d = p.r * z.n + p.c;
    }
    if (case_i && row < 0 && p.r == 0) return Term::zero();
    const IndexGroup* g = p.I.find(row);
    if (!g) return Term::zero();
    long floor_row = case_i ? zeta(p.r, row, ctx) : nu(row, ctx);
    long k = g->k.at(row, [&](long) { return floor_row; });
    if (pos < k || (pos - k) % p.delta != 0) return Term::zero();
    long s = (pos - k) / p.delta;
    Rational coeff = Rational(k + d) * g->seed / Rational(k + d + p.delta * s);
    Monomial out = case_i ? Monomial{p.r * (z.m + p.c), z.m + p.c} : Monomial{0, z.m + p.r * z.n + p.c};
    return {coeff, out};
}

Term idsupp_eval(const IdSuppParams& p, const Monomial& z) {
    if (!p.two_generator) {
        long a;
        if (p.l > 0) {
            if (z.n % p.l != 0) return Term::zero();
            a = z.n / p.l;
        } else {
            if (z.n != 0 || z.m % p.r != 0) return Term::zero();
            a = z.m / p.r;
        }
        if (a <= 0 || z.m != a * p.r || z.n != a * p.l) return Term::zero();
        return {p.gamma / Rational(a), z};
    }
    const long g1 = p.k1 / p.b, g2 = p.k2 * p.a / p.d;
    bool member = false;
    for (long j = 0; j < p.b && !member; ++j)
        member = ((z.n - g1 * j) % p.k1 == 0) && ((z.m - g2 * j) % p.k2 == 0);
    if (!member) return Term::zero();
    Rational den = Rational(z.m) * p.alpha1 / Rational(p.k2) + Rational(z.n) * p.alpha2 / Rational(p.k1);
    if (den.is_zero())
        throw DegenerateDenominator("vanishing denominator at (" + std::to_string(z.n) + "," + std::to_string(z.m) + ")");
    return {p.alpha1 * p.alpha2 / den, z};
}

Term iiia_eval(const CaseIIIAParams& p, bool rb, const Monomial& z) {
    if (z.m < p.c || (z.m - p.c) % p.delta != 0) return Term::zero();
    const long s = (z.m - p.c) / p.delta;
    const long r = (p.c + p.p_y) / p.delta;
    if (r == 0 || (p.k + p.p_x) % r != 0) return Term::zero();
    const long step = (p.k + p.p_x) / r;
    if (z.n != p.k + step * s) return Term::zero();
    Rational coeff = rb ? Rational(r) * p.seed / Rational(r + s) : Rational(1);
    return {coeff, {z.n + p.p_x, z.m + p.p_y}};
}

Term iiib0_eval(const CaseIIIB0Params& p, bool rb, const Monomial& z) {
    if (z.m % p.c != 0) return Term::zero();
    const long v = z.m / p.c;
    const long k = iiib0_k(p, v);
    if (z.n < k || (z.n - k) % p.delta != 0) return Term::zero();
    const long u = (z.n - k) / p.delta;
    Monomial out{z.n + p.p_x, z.m};
    if (!rb) return {Rational(1), out};
    const long r = (p.k0 + p.p_x) / p.delta;
    const long S = v >= 1 ? r + p.sigma.sum(1, v - 1) : 0;
    Rational den = Rational(r * v) * p.seed0 + Rational(u + r - S) * p.seed1;
    if (den.is_zero())
        throw DegenerateDenominator("vanishing denominator at (" + std::to_string(z.n) + "," + std::to_string(z.m) + ")");
    return {Rational(r) * p.seed0 * p.seed1 / den, out};
}

Term iiibplus_eval(const CaseIIIBPlusParams& p, bool rb, const Monomial& z) {
    if (z.m < p.c_y || (z.m - p.c_y) % p.delta_y != 0) return Term::zero();
    const long v = (z.m - p.c_y) / p.delta_y;
    const long k = iiibplus_k(p, v);
    if (z.n < k || (z.n - k) % p.delta_x != 0) return Term::zero();
    const long u = (z.n - k) / p.delta_x;
    Monomial out{z.n + p.p_x, z.m + p.p_y};
    if (!rb) return {Rational(1), out};
    const long H = iiibplus_H(p, v);
    const long ry = p.r_y;
    Rational den = Rational(ry * u - H) / p.seed_b + Rational(H + v - ry * (u - 1)) / p.seed_a;
    if (den.is_zero())
        throw DegenerateDenominator("vanishing denominator at (" + std::to_string(z.n) + "," + std::to_string(z.m) + ")");
    return {Rational(ry) / den, out};
}

MonomialOperator raw_operator(const FamilySpec& spec) {
    const AlgebraContext ctx = spec.ctx;
    const std::string label = to_string(spec.family);
    MonomialOperator::Rule rule;
    switch (spec.family) {
    case Family::AVG_I: {
        auto p = params_as<AvgFormParams>(spec);
        rule = [p](const Monomial& z) { return Term{Rational(1), {p.r * (z.m + p.c), z.m + p.c}}; };
        break;
    }
    case Family::AVG_II: {
        auto p = params_as<AvgFormParams>(spec);
        rule = [p](const Monomial& z) { return Term{Rational(1), {0, p.r * z.n + z.m + p.c}}; };
        break;
    }
    case Family::AVG_III: {
        auto p = params_as<AvgFormParams>(spec);
        rule = [p](const Monomial& z) { return Term{Rational(1), {z.n + p.gamma, z.m + p.c}}; };
        break;
    }
    case Family::AVG_IV:
        if (!ctx.unital) return MonomialOperator::zero(ctx);
        rule = [](const Monomial&) { return Term{Rational(1), {0, 0}}; };
        break;
    case Family::RB_II:
    case Family::RB_I: {
        auto p = params_as<RowFamilyParams>(spec);
        bool case_i = spec.family == Family::RB_I;
        rule = [p, case_i, ctx](const Monomial& z) { return row_family_eval(p, case_i, ctx, z); };
        break;
    }
    case Family::RB_IDSUPP: {
        auto p = params_as<IdSuppParams>(spec);
        rule = [p](const Monomial& z) { return idsupp_eval(p, z); };
        break;
    }
    case Family::AVG_IIIA:
    case Family::RB_IIIA: {
        auto p = params_as<CaseIIIAParams>(spec);
        bool rb = spec.family == Family::RB_IIIA;
        rule = [p, rb](const Monomial& z) { return iiia_eval(p, rb, z); };
        break;
    }
    case Family::AVG_IIIB0:
    case Family::RB_IIIB0: {
        auto p = params_as<CaseIIIB0Params>(spec);
        bool rb = spec.family == Family::RB_IIIB0;
        rule = [p, rb](const Monomial& z) { return iiib0_eval(p, rb, z); };
        break;
    }
    case Family::AVG_IIIBPlus:
    case Family::RB_IIIBPlus: {
        auto p = params_as<CaseIIIBPlusParams>(spec);
        bool rb = spec.family == Family::RB_IIIBPlus;
        rule = [p, rb](const Monomial& z) { return iiibplus_eval(p, rb, z); };
        break;
    }
    }
    return MonomialOperator::closed(ctx, std::move(rule), label);
}

} // namespace

std::string to_string(Family f) {
    for (const auto& [fam, name] : family_names())
        if (fam == f) return name;
    return "?";
}

Family family_from_string(const std::string& s) {
    for (const auto& [fam, name] : family_names())
        if (name == s) return fam;
    throw InvalidParams("unknown family tag: " + s);
}

bool is_rb(Family f) {
    switch (f) {
    case Family::RB_II:
    case Family::RB_I:
    case Family::RB_IDSUPP:
    case Family::RB_IIIA:
    case Family::RB_IIIB0:
    case Family::RB_IIIBPlus: return true;
    default: return false;
    }
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> fams = [] {
        std::vector<Family> v;
        for (const auto& [f, n] : family_names()) v.push_back(f);
        return v;
    }();
    return fams;
}

long zeta(long r, long i, const AlgebraContext& ctx) {
    if (i > 0) return 0;
    if (i == 0) return nu(0, ctx);
    if (r <= 0) throw InvalidParams("zeta_r(i) with i < 0 needs r > 0");
    // smallest l with r*l + i >= 0 and (r+1)*l + i >= nu(0)
    return std::max(ceil_div(-i, r), ceil_div(nu(0, ctx) - i, r + 1));
}

Validation validate_family_params(const FamilySpec& spec) {
    try {
        switch (spec.family) {
        case Family::AVG_I:
        case Family::AVG_II:
        case Family::AVG_III:
        case Family::AVG_IV: return validate_avg_form(spec, params_as<AvgFormParams>(spec));
        case Family::RB_II:
        case Family::RB_I: return validate_row_family(spec, params_as<RowFamilyParams>(spec));
        case Family::RB_IDSUPP: return validate_idsupp(spec, params_as<IdSuppParams>(spec));
        case Family::AVG_IIIA:
        case Family::RB_IIIA: return validate_iiia(spec, params_as<CaseIIIAParams>(spec), is_rb(spec.family));
        case Family::AVG_IIIB0:
        case Family::RB_IIIB0: return validate_iiib0(spec, params_as<CaseIIIB0Params>(spec), is_rb(spec.family));
        case Family::AVG_IIIBPlus:
        case Family::RB_IIIBPlus:
            return validate_iiibplus(spec, params_as<CaseIIIBPlusParams>(spec), is_rb(spec.family));
        }
    } catch (const InvalidParams& e) {
        return fail(e.what());
    }
    return {};
}

void require_valid(const FamilySpec& spec) {
    if (auto v = validate_family_params(spec); !v) throw InvalidParams(to_string(spec.family) + ": " + v.reason);
}

MonomialOperator closed_form_operator(const FamilySpec& spec) {
    MonomialOperator op = raw_operator(spec);
    return spec.swapped ? conjugate_swap(op) : op;
}

MonomialOperator build_averaging(const FamilySpec& spec) {
    if (is_rb(spec.family)) throw InvalidParams(to_string(spec.family) + " is not an averaging family");
    require_valid(spec);
    return closed_form_operator(spec);
}

MonomialOperator build_rb(const FamilySpec& spec, long denominator_check_degree) {
    if (!is_rb(spec.family)) throw InvalidParams(to_string(spec.family) + " is not a Rota-Baxter family");
    require_valid(spec);
    MonomialOperator op = closed_form_operator(spec);
    const bool has_denominators = spec.family == Family::RB_IDSUPP || spec.family == Family::RB_IIIB0 ||
                                  spec.family == Family::RB_IIIBPlus;
    if (has_denominators) {
        for (const auto& z : admissible_monomials(spec.ctx, denominator_check_degree)) {
            try {
                op.eval(z);
            } catch (const InvalidParams&) {
                break;   // finite sigma prefix exhausted; later evaluations report it themselves
            }
        }
    }
    return op;
}

MonomialOperator build(const FamilySpec& spec) {
    return is_rb(spec.family) ? build_rb(spec) : build_averaging(spec);
}

std::vector<std::pair<long, long>> support_lattice(const FamilySpec& spec, long x_max, long y_max) {
    MonomialOperator op = build(spec);
    std::vector<std::pair<long, long>> pts;
    for (long m = 0; m <= y_max; ++m)
        for (long n = 0; n <= x_max; ++n) {
            Monomial z{n, m};
            if (!spec.ctx.admissible(z)) continue;
            if (!op.eval(z).is_zero()) pts.emplace_back(n, m);
        }
    return pts;
}

long iiib0_k(const CaseIIIB0Params& p, long v) {
    if (v == 0) return p.k0;
    return v * p.k1 + (v - 1) * p.p_x - p.delta * p.sigma.sum(1, v - 1);
}

long iiibplus_H(const CaseIIIBPlusParams& p, long v) {
    KSeqShiftedParams kp = shifted_of(p);
    const long a = v / p.r_y, b = v % p.r_y;
    long total = shifted_tau(kp, b);
    for (long s = 0; s <= a - 1; ++s) total += p.r_y * p.sigma0.at(s * p.r_y + b);
    return total;
}

long iiibplus_k(const CaseIIIBPlusParams& p, long v) {
    const long r = p.r_y;
    const long num = (v + r) * p.k0 + v * p.p_x - p.delta_x * iiibplus_H(p, v);
    if (num % r != 0) throw InvalidParams("row start k_" + std::to_string(v) + " is not an integer");
    return num / r;
}

// ---- presets ---------------------------------------------------------------

std::vector<std::string> preset_names() {
    return {"full-ii", "full-i", "full-idsupp", "full-iiib0", "full-iiib+",
            "example-ii-delta8", "example-i-even", "example-i-even-valid", "example-iiib0-shift"};
}

FamilySpec discussion_presets(const std::string& name, const PresetOptions& o) {
    FamilySpec spec;
    spec.ctx = o.ctx.value_or(AlgebraContext::F());
    // the case-iii presets need seeds whose ratio keeps every denominator nonzero
    const bool case_iii = name == "full-iiib0" || name == "full-iiib+" || name == "example-iiib0-shift";
    const Rational sa = o.seed_a.value_or(Rational(case_iii ? 3 : 1));
    const Rational sb = o.seed_b.value_or(Rational(2));
    const long nu0 = nu(0, spec.ctx);

    if (name == "full-ii" || name == "full-i") {
        const bool case_i = name == "full-i";
        RowFamilyParams p;
        p.r = o.r.value_or(case_i ? 2 : 1);
        p.c = o.c.value_or(1);
        p.delta = 1;
        IndexGroup up;
        up.progressions.push_back({case_i ? 0 : 1, 1});
        up.k = {true, 0};
        up.seed = sb;
        IndexGroup other;
        if (case_i) other.progressions.push_back({-1, -1});
        else other.elements.push_back(0);
        other.k = {true, 0};
        other.seed = sa;
        p.I.groups = {other, up};
        spec.family = case_i ? Family::RB_I : Family::RB_II;
        spec.params = p;
        return spec;
    }
    if (name == "full-idsupp") {
        spec.ctx = AlgebraContext::F0();
        IdSuppParams p;
        p.two_generator = true;
        p.k1 = p.k2 = 1;
        p.d = 1;
        p.a = 0;
        p.b = 1;
        p.alpha1 = o.seed_a.value_or(Rational(2));
        p.alpha2 = o.seed_b.value_or(Rational(3));
        spec.family = Family::RB_IDSUPP;
        spec.params = p;
        return spec;
    }
    if (name == "full-iiib0") {
        CaseIIIB0Params p;
        p.p_x = o.p_x.value_or(2);
        p.c = 1;
        p.delta = 1;
        p.k0 = nu0;
        p.k1 = 0;
        p.sigma = Seq{1, {}, p.p_x};
        p.seed0 = sa;
        p.seed1 = sb;
        spec.family = Family::RB_IIIB0;
        spec.params = p;
        return spec;
    }
    if (name == "full-iiib+") {
        CaseIIIBPlusParams p;
        p.p_x = o.p_x.value_or(1);
        p.p_y = o.p_y.value_or(2);
        p.delta_x = p.delta_y = 1;
        p.c_x = p.c_y = 0;
        p.r_x = p.p_x;
        p.r_y = p.p_y;
        p.k0 = nu0;
        // sigma_{i,j} = p_x + nu(i) + nu(j)
        p.sigma0 = Seq{0, {p.p_x + 2 * nu0}, p.p_x + nu0};
        p.sigma1 = Seq{1, std::vector<long>(static_cast<std::size_t>(p.p_y - 1), p.p_x), std::nullopt};
        p.seed_a = sa;
        p.seed_b = sb;
        spec.family = Family::RB_IIIBPlus;
        spec.params = p;
        return spec;
    }
    if (name == "example-ii-delta8") {
        RowFamilyParams p;
        p.delta = 8;
        p.r = 1;
        p.c = 8 * o.d.value_or(1);
        for (long q = 1; q <= 4; ++q) {
            IndexGroup g;
            g.progressions.push_back({2 * q, 8});
            g.k = {false, 8 - 2 * q};
            g.seed = sa * Rational(q);
            p.I.groups.push_back(g);
        }
        spec.family = Family::RB_II;
        spec.params = p;
        return spec;
    }
    if (name == "example-i-even" || name == "example-i-even-valid") {
        RowFamilyParams p;
        p.delta = p.r = p.c = 2;
        IndexGroup up;
        up.progressions.push_back({0, 2});
        up.k = {true, 0};
        up.seed = sa;
        IndexGroup down;
        down.progressions.push_back(name == "example-i-even" ? Progression{-2, -2} : Progression{-4, -4});
        down.k = {true, 0};
        down.seed = sb;
        p.I.groups = {up, down};
        spec.family = Family::RB_I;
        spec.params = p;
        return spec;
    }
    if (name == "example-iiib0-shift") {
        CaseIIIB0Params p;
        p.p_x = o.p_x.value_or(2);
        p.delta = o.delta.value_or(1);
        p.c = p.delta;
        const long d = o.d.value_or(1);
        if (p.delta <= 0 || p.p_x % p.delta != 0) throw InvalidParams("example needs Delta | p_x");
        const long r = p.p_x / p.delta;
        p.k0 = 0;
        p.k1 = d * p.p_x;
        p.sigma = Seq{1, {}, d * r};
        p.seed0 = sa;
        p.seed1 = sb;
        spec.family = Family::RB_IIIB0;
        spec.params = p;
        return spec;
    }
    throw UnknownPreset("unknown preset: " + name);
}

} // namespace rbm
