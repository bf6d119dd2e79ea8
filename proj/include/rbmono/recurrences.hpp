// SPDX-License-Identifier: MIT
#pragma once

#include "rbmono/index_set.hpp"
#include "rbmono/operator.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace rbm {

/// Natural-number sequence given by an explicit prefix starting at index `first`
/// and an optional constant tail. Reading past the prefix without a tail throws
/// InvalidParams.
struct Seq {
    long first = 0;
    std::vector<long> prefix;
    std::optional<long> tail;

    long at(long i) const;
    bool defined(long i) const;
    /// Sum of at(s) for s in [a, b]; zero when b < a.
    long sum(long a, long b) const;
};

// ---- beta_s beta_t = (beta_s + beta_t) beta_{s+t+d}, s, t >= tau ----

struct SingleRecParams {
    long d = 0;
    long tau = 0;
    long k = 0;
    long delta = 1;
    Rational beta_k{1};
};

void validate(const SingleRecParams& p);
/// Values at indices tau..upto (element i holds index tau + i).
std::vector<Rational> closed_single(const SingleRecParams& p, long upto);
/// `seq` holds indices tau..tau+size-1; every s, t >= tau with s+t+d in range is checked.
CheckReport verify_single(const std::vector<Rational>& seq, long d, long tau);

// ---- two-index system with row data d_s, tau_s and a shared Delta ----

struct TwoIndexRecParams {
    long N = 0;
    Seq d_seq;
    Seq tau_seq;
    IndexSet I;   // KRule::relative measures k from tau_s
    long delta = 1;
};

using TwoIndexValues = std::map<std::pair<long, long>, Rational>;   // (s, t) -> beta^s_t

/// Checks the row constraints for every index in I within [N, max_row].
void validate(const TwoIndexRecParams& p, long max_row);
/// Rows N..max_row, columns tau_s..upto. Zero entries are stored explicitly so the
/// verifier can tell "zero" from "not covered".
TwoIndexValues closed_two_index(const TwoIndexRecParams& p, long max_row, long upto);
/// Checks the two-index relation on every (n, m, s, t) whose touched indices lie in `values`
/// and whose column indices are <= N.
CheckReport verify_two_index(const TwoIndexValues& values, const Seq& d_seq, const Seq& tau_seq, long N);

// ---- k_{s+t+r} = k_s + k_t + p - Delta xi_{s,t} (r = 0 is the additive case) ----

using XiMap = std::map<std::pair<long, long>, long>;

struct KSeqAdditiveParams {
    long p = 1;
    long delta = 1;
    long k0 = 0;
    long k1 = 0;
    Seq xi_1;   // xi_{1,s}, s >= 1
};

struct KSeqShiftedParams {
    long r = 1;
    long p = 1;
    long delta = 1;
    long k0 = 0;
    Seq xi_0;   // xi_{0,s}, s >= 0
    Seq xi_1;   // xi_{1,s}, 1 <= s <= r - 1
};

struct KSeqResult {
    std::vector<long> k;     // k_0..k_upto
    std::vector<long> tau;   // shifted case only: tau_0..tau_{r-1}
    XiMap xi;                // every (u, v) with u + v + r <= upto
};

KSeqResult k_closed_additive(const KSeqAdditiveParams& p, long upto);
KSeqResult k_closed_shifted(const KSeqShiftedParams& p, long upto);
/// tau_j of the shifted closed form (independent of k0 and p).
long shifted_tau(const KSeqShiftedParams& p, long j);
CheckReport verify_k_recurrence(const std::vector<long>& k, const XiMap& xi, long p, long delta, long r, long N);

// ---- exhaustive support search for the single recurrence ----

struct SupportSearchResult {
    long d = 0;
    long tau = 0;
    long window_end = 0;      // patterns live on [tau, window_end]
    long horizon = 0;         // extensions are solved on [tau, horizon]
    long patterns_tried = 0;
    long solvable = 0;        // patterns with a nonzero extension
    long matched = 0;         // of those, explained by closed_single
    std::vector<std::vector<long>> unexplained;
};

/// Enumerates every nonempty support pattern on [tau, tau+length-1]. A pattern counts as a
/// solution when it extends to a support on [tau, 2*window_end + d] that satisfies the
/// recurrence with all supported values nonzero. Each solution is compared against the
/// closed form: same support on the window and values proportional to 1/(t + d).
SupportSearchResult search_single_supports(long d, long tau, long length);

} // namespace rbm
