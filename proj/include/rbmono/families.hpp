// SPDX-License-Identifier: MIT
#pragma once

#include "rbmono/index_set.hpp"
#include "rbmono/operator.hpp"
#include "rbmono/recurrences.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rbm {

enum class Family {
    AVG_I, AVG_II, AVG_III, AVG_IV,
    AVG_IIIA, AVG_IIIB0, AVG_IIIBPlus,
    RB_II, RB_I, RB_IDSUPP,
    RB_IIIA, RB_IIIB0, RB_IIIBPlus,
};

std::string to_string(Family f);
Family family_from_string(const std::string& s);
bool is_rb(Family f);
const std::vector<Family>& all_families();

/// AVG-I and AVG-II use (r, c); AVG-III uses (gamma, c); AVG-IV has no parameters.
struct AvgFormParams {
    long r = 0;
    long c = 0;
    long gamma = 0;
};

/// RB-II: R(x^l y^t) = alpha_{l,t} y^{t + rl + c}, rows l in I.
/// RB-I:  R(x^n y^m) = alpha_{n,m} x^{r(m+c)} y^{m+c}, lines t = n - rm in I (may be negative).
struct RowFamilyParams {
    long r = 0;
    long c = 0;
    long delta = 1;
    IndexSet I;
};

struct IdSuppParams {
    bool two_generator = false;
    // single ray a*(l, r), a > 0, coefficient gamma / a
    long l = 1;
    long r = 0;
    Rational gamma{1};
    // two generators
    long k1 = 1;
    long k2 = 1;
    Rational alpha1{1};
    Rational alpha2{1};
    long a = 0;
    long b = 1;
    long d = 1;
};

/// Support {(k + step*s, c + delta*s)} with r = (c + p_y)/delta and step = (k + p_x)/r.
struct CaseIIIAParams {
    long p_x = 1;
    long p_y = 0;
    long k = 0;
    long c = 1;
    long delta = 1;
    Rational seed{1};   // gamma_{k,c}; ignored by averaging builders
};

/// p_y = 0: rows m = v*c, row v supported on k_v + delta*u.
struct CaseIIIB0Params {
    long p_x = 1;
    long c = 1;
    long delta = 1;
    long k0 = 0;
    long k1 = 0;
    Seq sigma{1, {}, std::nullopt};   // sigma_s, s >= 1
    Rational seed0{1};                // gamma_{k0,0}
    Rational seed1{1};                // gamma_{k1,c}
};

/// p_y > 0: rows t = c_y + delta_y*v, row v supported on k_v + delta_x*u.
struct CaseIIIBPlusParams {
    long p_x = 1;
    long p_y = 1;
    long c_x = 0;
    long c_y = 0;
    long r_x = 1;
    long r_y = 1;
    long delta_x = 1;
    long delta_y = 1;
    long k0 = 0;
    Seq sigma0{0, {}, std::nullopt};   // sigma_{0,s}, s >= 0
    Seq sigma1{1, {}, std::nullopt};   // sigma_{1,s}, 1 <= s <= r_y - 1
    Rational seed_a{1};                // gamma_{k0, c_y}
    Rational seed_b{1};                // gamma_{k0 + delta_x, c_y}
};

using FamilyParams = std::variant<AvgFormParams, RowFamilyParams, IdSuppParams, CaseIIIAParams,
                                  CaseIIIB0Params, CaseIIIBPlusParams>;

struct FamilySpec {
    Family family = Family::RB_II;
    AlgebraContext ctx;
    bool swapped = false;   // conjugate the family operator by psi_{x,y}
    FamilyParams params;
};

/// Lower bound for the first support height on line i of the RB-I lattice.
long zeta(long r, long i, const AlgebraContext& ctx);

struct Validation {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

Validation validate_family_params(const FamilySpec& spec);
void require_valid(const FamilySpec& spec);
/// The family's coefficient formula without any validation, for parameter sets that
/// fail the family constraints.
MonomialOperator closed_form_operator(const FamilySpec& spec);

MonomialOperator build_averaging(const FamilySpec& spec);
/// `denominator_check_degree` bounds the scan for vanishing denominators (RB-IDSUPP, RB-IIIB*).
MonomialOperator build_rb(const FamilySpec& spec, long denominator_check_degree = 40);
/// Dispatches on is_rb(spec.family).
MonomialOperator build(const FamilySpec& spec);

/// Exponent pairs (n, m), n <= x_max, m <= y_max, carrying a nonzero coefficient.
std::vector<std::pair<long, long>> support_lattice(const FamilySpec& spec, long x_max, long y_max);

/// k_v for the row structure of RB-IIIB0 / RB-IIIB+ (and their averaging twins).
long iiib0_k(const CaseIIIB0Params& p, long v);
long iiibplus_k(const CaseIIIBPlusParams& p, long v);
/// H(v) from the sigma sums.
long iiibplus_H(const CaseIIIBPlusParams& p, long v);

struct PresetOptions {
    std::optional<AlgebraContext> ctx;
    std::optional<long> r, c, p_x, p_y, d, delta;
    std::optional<Rational> seed_a, seed_b;
};

std::vector<std::string> preset_names();
FamilySpec discussion_presets(const std::string& name, const PresetOptions& opts = {});

} // namespace rbm
