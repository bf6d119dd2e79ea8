#include "rbmono/index_set.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace rbm {

bool Progression::contains(long i) const {
    long diff = i - a;
    if (b > 0) return diff >= 0 && diff % b == 0;
    return diff <= 0 && (-diff) % (-b) == 0;
}

bool IndexGroup::contains(long i) const {
    if (std::find(elements.begin(), elements.end(), i) != elements.end()) return true;
    return std::any_of(progressions.begin(), progressions.end(), [i](const Progression& p) { return p.contains(i); });
}

const IndexGroup* IndexSet::find(long i) const {
    for (const auto& g : groups)
        if (g.contains(i)) return &g;
    return nullptr;
}

std::vector<long> IndexSet::members(long lo, long hi) const {
    std::vector<long> out;
    for (long i = lo; i <= hi; ++i)
        if (find(i)) out.push_back(i);
    return out;
}

namespace {

// Candidate members of `g` that could be shared with another group: every explicit
// element plus enough terms of each progression to cover one joint residue period.
std::vector<long> probe(const IndexGroup& g, long span) {
    std::vector<long> out(g.elements.begin(), g.elements.end());
    for (const auto& p : g.progressions)
        for (long j = 0; j <= span; ++j) out.push_back(p.nth(j));
    return out;
}

long span_of(const IndexGroup& g) {
    long s = 0;
    for (long e : g.elements) s += std::labs(e);
    for (const auto& p : g.progressions) s += std::labs(p.a) + std::labs(p.b);
    return s;
}

} // namespace

std::optional<std::string> IndexSet::overlap() const {
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = 0; j < groups.size(); ++j) {
            if (i == j) continue;
            long span = span_of(groups[i]) + span_of(groups[j]) + 1;
            for (long e : probe(groups[i], span))
                if (groups[j].contains(e))
                    return "index " + std::to_string(e) + " lies in groups " + std::to_string(std::min(i, j)) +
                           " and " + std::to_string(std::max(i, j));
        }
    }
    return std::nullopt;
}

} // namespace rbm
