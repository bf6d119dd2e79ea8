#pragma once

#include "rbmono/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rbm {

/// {a + b*j : j >= 0}; b may be negative (descending progression), never zero.
struct Progression {
    long a = 0;
    long b = 1;

    bool contains(long i) const;
    long nth(long j) const { return a + b * j; }
};

/// Row-start rule: either a constant k, or k = floor(i) + offset where floor(i) is the
/// smallest admissible start of row i (nu(i) or zeta_r(i) depending on the family).
struct KRule {
    bool relative = false;
    long value = 0;

    long at(long i, const std::function<long(long)>& floor) const {
        return relative ? floor(i) + value : value;
    }
};

/// One block of rows sharing a row-start rule and a seed.
struct IndexGroup {
    std::vector<long> elements;
    std::vector<Progression> progressions;
    KRule k;
    Rational seed{1};

    bool contains(long i) const;
};

/// Finite union of explicit elements and arithmetic progressions.
struct IndexSet {
    std::vector<IndexGroup> groups;

    bool empty() const { return groups.empty(); }
    const IndexGroup* find(long i) const;
    /// Members within [lo, hi], ascending.
    std::vector<long> members(long lo, long hi) const;
    /// First pair of groups that share an index, described for an error message.
    std::optional<std::string> overlap() const;
};

} // namespace rbm
