// SPDX-License-Identifier: MIT
#pragma once

#include "rbmono/families.hpp"
#include "rbmono/json_io.hpp"
#include "rbmono/operator.hpp"

#include <string>
#include <vector>

namespace rbm {

struct ProgressionFit {
    enum class Kind { Empty, Singleton, Progression };
    Kind kind = Kind::Empty;
    long offset = 0;
    long gap = 0;   // 0 unless kind == Progression
};

/// Fits a finite set of integers as {offset + gap*j}. Throws NotAProgression with the
/// first element (ascending) that breaks the common gap.
ProgressionFit fit_progression(std::vector<long> support);

struct Candidate {
    FamilySpec spec;
    bool exact = true;   // false when some parameter could not be pinned by the table
    long coverage_degree_checked = 0;
};

struct ClassificationResult {
    enum class Status { Classified, ZeroOperator, Unclassifiable };
    Status status = Status::Classified;
    std::vector<Candidate> candidates;
    std::vector<Family> vacuous_families;   // ZeroOperator only
    std::string reason;                     // Unclassifiable only
};

/// Every candidate rebuilds `table` exactly on monomials of degree <= coverage_degree.
/// Throws Unclassifiable when nothing fits and CoverageError when coverage_degree exceeds
/// the table's own coverage.
ClassificationResult classify(const MonomialOperator& table, long coverage_degree);
/// Same, but an unclassifiable table is returned as a result instead of thrown.
ClassificationResult classify_report(const MonomialOperator& table, long coverage_degree);

/// Classifies build(spec) truncated at coverage_degree. `exact`, when given, receives
/// whether an exact-quality candidate was found.
CheckReport round_trip(const FamilySpec& spec, long coverage_degree, bool* exact = nullptr);

/// T(x^{an+b} y^m) = x^{an} y^{m+b} for 0 <= b < a: averaging but not linear in degree.
MonomialOperator nonlinear_averaging_counterexample(long a, AlgebraContext ctx);

json classification_to_json(const ClassificationResult& r);

} // namespace rbm
