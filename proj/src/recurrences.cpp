#include "rbmono/recurrences.hpp"

#include "rbmono/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rbm {

long Seq::at(long i) const {
    if (i < first) throw InvalidParams("sequence index " + std::to_string(i) + " below its first index");
    std::size_t off = static_cast<std::size_t>(i - first);
    if (off < prefix.size()) return prefix[off];
    if (tail) return *tail;
    throw InvalidParams("sequence index " + std::to_string(i) + " beyond its prefix and no tail given");
}

bool Seq::defined(long i) const {
    return i >= first && (static_cast<std::size_t>(i - first) < prefix.size() || tail.has_value());
}

long Seq::sum(long a, long b) const {
    long s = 0;
    for (long i = a; i <= b; ++i) s += at(i);
    return s;
}

// ---------------------------------------------------------------- single

void validate(const SingleRecParams& p) {
    if (p.d < 0 || p.tau < 0) throw InvalidParams("d and tau must be natural");
    if (p.d == 0 && p.tau == 0) throw InvalidParams("d = tau = 0 admits only the zero sequence");
    if (p.beta_k.is_zero()) throw InvalidParams("beta_k must be nonzero");
    if (p.delta <= 0) throw InvalidParams("Delta must be positive");
    if (p.k < p.tau) throw InvalidParams("k < tau");
    if (p.k - p.tau >= p.delta) throw InvalidParams("k - tau >= Delta");
    if (p.delta > p.k + p.d) throw InvalidParams("Delta > k + d");
    if ((p.k + p.d) % p.delta != 0) throw InvalidParams("Delta does not divide k + d");
}

std::vector<Rational> closed_single(const SingleRecParams& p, long upto) {
    validate(p);
    std::vector<Rational> out;
    for (long t = p.tau; t <= upto; ++t) {
        if (t < p.k || (t - p.k) % p.delta != 0) {
            out.emplace_back(0);
            continue;
        }
        long s = (t - p.k) / p.delta;
        out.push_back(Rational(p.k + p.d) * p.beta_k / Rational(p.k + p.d + p.delta * s));
    }
    return out;
}

CheckReport verify_single(const std::vector<Rational>& seq, long d, long tau) {
    CheckReport rep;
    const long n = static_cast<long>(seq.size());
    auto at = [&](long i) -> const Rational& { return seq[static_cast<std::size_t>(i - tau)]; };
    for (long s = tau; s < tau + n; ++s) {
        for (long t = s; s + t + d < tau + n; ++t) {
            ++rep.pairs_checked;
            Rational lhs = at(s) * at(t);
            Rational rhs = (at(s) + at(t)) * at(s + t + d);
            if (!(lhs == rhs)) rep.fail({{s, t}, lhs.str(), rhs.str(), "beta_s beta_t != (beta_s + beta_t) beta_{s+t+d}"});
        }
    }
    return rep;
}

// ---------------------------------------------------------------- two-index

void validate(const TwoIndexRecParams& p, long max_row) {
    if (p.delta <= 0) throw InvalidParams("Delta must be positive");
    if (auto o = p.I.overlap()) throw InvalidParams("index groups overlap: " + *o);
    for (const auto& g : p.I.groups)
        if (g.seed.is_zero()) throw InvalidParams("seeds must be nonzero");
    for (long i = p.N; i <= max_row; ++i) {
        const IndexGroup* g = p.I.find(i);
        if (!g) continue;
        const long d = p.d_seq.at(i), tau = p.tau_seq.at(i);
        const long k = g->k.at(i, [&](long) { return tau; });
        const std::string at = " at row " + std::to_string(i);
        if (k < tau) throw InvalidParams("k_i < tau_i" + at);
        if (k - tau >= p.delta) throw InvalidParams("k_i - tau_i >= Delta" + at);
        if (p.delta > k + d) throw InvalidParams("Delta > k_i + d_i" + at);
        if ((k + d) % p.delta != 0) throw InvalidParams("Delta does not divide k_i + d_i" + at);
    }
}

TwoIndexValues closed_two_index(const TwoIndexRecParams& p, long max_row, long upto) {
    validate(p, max_row);
    TwoIndexValues out;
    for (long s = p.N; s <= max_row; ++s) {
        const long tau = p.tau_seq.at(s);
        const IndexGroup* g = p.I.find(s);
        for (long t = tau; t <= upto; ++t) {
            Rational v(0);
            if (g) {
                const long d = p.d_seq.at(s);
                const long k = g->k.at(s, [&](long) { return tau; });
                if (t >= k && (t - k) % p.delta == 0) {
                    long l = (t - k) / p.delta;
                    v = Rational(k + d) * g->seed / Rational(k + d + p.delta * l);
                }
            }
            out.emplace(std::make_pair(s, t), v);
        }
    }
    return out;
}

CheckReport verify_two_index(const TwoIndexValues& values, const Seq& d_seq, const Seq& tau_seq, long N) {
    CheckReport rep;
    std::vector<std::pair<long, long>> keys;
    for (const auto& [k, v] : values)
        if (k.second <= N) keys.push_back(k);
    auto get = [&](long s, long t) -> Rational {
        auto it = values.find({s, t});
        if (it == values.end())
            throw CoverageError("two-index value (" + std::to_string(s) + "," + std::to_string(t) + ") not supplied");
        return it->second;
    };
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto [n, m] = keys[i];
        const Rational& a = values.at(keys[i]);
        const long dn = d_seq.at(n);
        if (m < tau_seq.at(n)) continue;
        for (std::size_t j = i; j < keys.size(); ++j) {
            const auto [s, t] = keys[j];
            if (t < tau_seq.at(s)) continue;
            const long ds = d_seq.at(s);
            if (m + t + dn > N || m + t + ds > N) continue;
            const Rational& b = values.at(keys[j]);
            ++rep.pairs_checked;
            if (a.is_zero() && b.is_zero()) continue;
            Rational lhs = a * b;
            Rational rhs = a * get(s, m + t + dn) + b * get(n, m + t + ds);
            if (!(lhs == rhs)) rep.fail({{n, m, s, t}, lhs.str(), rhs.str(), "two-index relation"});
        }
    }
    return rep;
}

// ---------------------------------------------------------------- k sequences

namespace {

void require_natural(long v, const std::string& what) {
    if (v < 0) throw InvalidParams(what + " = " + std::to_string(v) + " is not a natural number");
}

} // namespace

KSeqResult k_closed_additive(const KSeqAdditiveParams& p, long upto) {
    if (p.p <= 0 || p.delta <= 0) throw InvalidParams("p and Delta must be positive");
    require_natural(p.k0, "k_0");
    require_natural(p.k1, "k_1");
    if ((p.k0 + p.p) % p.delta != 0) throw InvalidParams("Delta does not divide k_0 + p");
    KSeqResult res;
    auto xi1 = [&](long s) { return p.xi_1.at(s); };
    for (long n = 0; n <= upto; ++n) {
        long k = n == 0 ? p.k0 : n * p.k1 + (n - 1) * p.p - p.delta * p.xi_1.sum(1, n - 1);
        require_natural(k, "k_" + std::to_string(n));
        res.k.push_back(k);
    }
    const long xi0 = (p.k0 + p.p) / p.delta;
    for (long u = 0; u <= upto; ++u) {
        for (long v = 0; u + v <= upto; ++v) {
            long x;
            if (u == 0 || v == 0) {
                x = xi0;
            } else {
                x = 0;
                for (long s = 1; s <= std::min(u, v) - 1; ++s) x -= xi1(s);
                for (long s = std::max(u, v); s <= u + v - 1; ++s) x += xi1(s);
            }
            require_natural(x, "xi_{" + std::to_string(u) + "," + std::to_string(v) + "}");
            res.xi.emplace(std::make_pair(u, v), x);
        }
    }
    return res;
}

namespace {

struct ShiftedSums {
    const KSeqShiftedParams& p;

    long D(long s) const { return p.xi_0.at(s + 1) - p.xi_1.at(s); }
    // Sum of D(s) for s in [1, j - 1].
    long SD(long j) const {
        long t = 0;
        for (long s = 1; s <= j - 1; ++s) t += D(s);
        return t;
    }
    // Sum of xi_{0, s r + off} for s in [0, hi].
    long X(long hi, long off) const {
        long t = 0;
        for (long s = 0; s <= hi; ++s) t += p.xi_0.at(s * p.r + off);
        return t;
    }
    long xi(long u, long v) const {
        const long r = p.r;
        const long a = u / r, b = u % r, c = v / r, d = v % r;
        if (b + d < r)
            return SD(b) + SD(d) - SD(b + d) + X(a + c, b + d) - X(a - 1, b) - X(c - 1, d);
        return SD(b) + SD(d) - SD(b + d - r) + X(a + c + 1, b + d - r) - X(a - 1, b) - X(c - 1, d) -
               p.xi_0.at(0) - SD(r);
    }
};

} // namespace

long shifted_tau(const KSeqShiftedParams& p, long j) {
    ShiftedSums S{p};
    return j * p.xi_0.at(0) + j * S.SD(p.r) - p.r * S.SD(j);
}

KSeqResult k_closed_shifted(const KSeqShiftedParams& p, long upto) {
    if (p.r <= 0 || p.p <= 0 || p.delta <= 0) throw InvalidParams("r, p and Delta must be positive");
    require_natural(p.k0, "k_0");
    ShiftedSums S{p};
    KSeqResult res;
    for (long j = 0; j < p.r; ++j) res.tau.push_back(shifted_tau(p, j));
    for (long n = 0; n <= upto; ++n) {
        const long i = n / p.r, j = n % p.r;
        long num = ((i + 1) * p.r + j) * p.k0 + (i * p.r + j) * p.p -
                   p.delta * (res.tau[static_cast<std::size_t>(j)] + p.r * S.X(i - 1, j));
        if (num % p.r != 0)
            throw InvalidParams("r does not divide r*k_" + std::to_string(n) + " = " + std::to_string(num));
        long k = num / p.r;
        require_natural(k, "k_" + std::to_string(n));
        res.k.push_back(k);
    }
    for (long u = 0; u + p.r <= upto; ++u) {
        for (long v = 0; u + v + p.r <= upto; ++v) {
            long x = S.xi(u, v);
            require_natural(x, "xi_{" + std::to_string(u) + "," + std::to_string(v) + "}");
            res.xi.emplace(std::make_pair(u, v), x);
        }
    }
    return res;
}

CheckReport verify_k_recurrence(const std::vector<long>& k, const XiMap& xi, long p, long delta, long r, long N) {
    CheckReport rep;
    if (N >= static_cast<long>(k.size()))
        throw CoverageError("k sequence shorter than the requested bound");
    for (long s = 0; s + r <= N; ++s) {
        for (long t = 0; s + t + r <= N; ++t) {
            auto it = xi.find({s, t});
            if (it == xi.end())
                throw CoverageError("xi_{" + std::to_string(s) + "," + std::to_string(t) + "} not supplied");
            ++rep.pairs_checked;
            long lhs = k[static_cast<std::size_t>(s + t + r)];
            long rhs = k[static_cast<std::size_t>(s)] + k[static_cast<std::size_t>(t)] + p - delta * it->second;
            if (lhs != rhs)
                rep.fail({{s, t}, std::to_string(lhs), std::to_string(rhs), "k_{s+t+r} != k_s + k_t + p - Delta xi_{s,t}"});
        }
    }
    return rep;
}

// ---------------------------------------------------------------- support search

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Basis of {x : A x = 0} for a dense rational matrix with `cols` columns.
Matrix nullspace(Matrix a, std::size_t cols) {
    std::vector<long> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[row]);
        Rational inv = a[row][c].reciprocal();
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (long c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[static_cast<std::size_t>(pivot_col[r])] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Searcher {
    long d, tau, end, horizon;

    // Support-level constraints for targets <= limit: two supported factors force a
    // supported target, exactly one supported factor forces an unsupported target.
    bool window_ok(const std::vector<char>& in, long limit) const {
        for (long s = tau; s <= limit; ++s)
            for (long t = s; s + t + d <= limit; ++t) {
                bool a = in[s - tau], b = in[t - tau], c = in[s + t + d - tau];
                if (a && b && !c) return false;
                if (a != b && c) return false;
            }
        return true;
    }

    // Solutions f = 1/beta on the support: f(s+t+d) = f(s) + f(t).
    Matrix solve(const std::vector<long>& supp) const {
        std::vector<long> pos(static_cast<std::size_t>(horizon - tau + 1), -1);
        for (std::size_t i = 0; i < supp.size(); ++i) pos[supp[i] - tau] = static_cast<long>(i);
        Matrix rows;
        for (std::size_t i = 0; i < supp.size(); ++i)
            for (std::size_t j = i; j < supp.size(); ++j) {
                long u = supp[i] + supp[j] + d;
                if (u > horizon) continue;
                std::vector<Rational> row(supp.size(), Rational(0));
                row[static_cast<std::size_t>(pos[u - tau])] += Rational(1);
                row[i] -= Rational(1);
                row[j] -= Rational(1);
                rows.push_back(std::move(row));
            }
        return nullspace(std::move(rows), supp.size());
    }

    template <class Visit>
    void extend(std::vector<char>& in, long i, Visit&& visit) const {
        if (i > horizon) {
            visit(in);
            return;
        }
        bool must_in = false, must_out = false;
        for (long s = tau; s + tau + d <= i; ++s) {
            long t = i - s - d;
            if (t < s) break;
            bool a = in[s - tau], b = in[t - tau];
            if (a && b) must_in = true;
            if (a != b) must_out = true;
        }
        if (must_in && must_out) return;
        if (!must_in) {
            in[i - tau] = 0;
            extend(in, i + 1, visit);
        }
        if (!must_out) {
            in[i - tau] = 1;
            extend(in, i + 1, visit);
            in[i - tau] = 0;
        }
    }

    bool explained(const std::vector<long>& window_supp, const Matrix& basis) const {
        const long k = window_supp.front();
        for (long delta = 1; delta <= k + d; ++delta) {
            if (!(k - tau < delta && (k + d) % delta == 0)) continue;
            std::vector<long> expect;
            for (long t = k; t <= end; t += delta) expect.push_back(t);
            if (expect != window_supp) continue;
            bool prop = true;
            for (const auto& v : basis) {
                const Rational& f0 = v[0];
                for (std::size_t i = 0; i < window_supp.size() && prop; ++i)
                    if (!(v[i] * Rational(k + d) == f0 * Rational(window_supp[i] + d))) prop = false;
            }
            if (prop) return true;
        }
        return false;
    }
};

} // namespace

SupportSearchResult search_single_supports(long d, long tau, long length) {
    if (length <= 0 || length > 20) throw InvalidParams("search length must be in 1..20");
    SupportSearchResult res;
    res.d = d;
    res.tau = tau;
    res.window_end = tau + length - 1;
    res.horizon = 2 * res.window_end + d;
    Searcher S{d, tau, res.window_end, res.horizon};
    const long span = res.horizon - tau + 1;

    for (unsigned long mask = 1; mask < (1ul << length); ++mask) {
        ++res.patterns_tried;
        std::vector<char> in(static_cast<std::size_t>(span), 0);
        std::vector<long> window_supp;
        for (long i = 0; i < length; ++i)
            if (mask >> i & 1ul) {
                in[static_cast<std::size_t>(i)] = 1;
                window_supp.push_back(tau + i);
            }
        if (!S.window_ok(in, res.window_end)) continue;

        bool solvable = false, all_explained = true;
        S.extend(in, res.window_end + 1, [&](const std::vector<char>& full) {
            std::vector<long> supp;
            for (long i = 0; i < span; ++i)
                if (full[static_cast<std::size_t>(i)]) supp.push_back(tau + i);
            Matrix basis = S.solve(supp);
            // Some solution is nonzero at every supported index iff no coordinate
            // vanishes across the whole basis (a generic combination then works).
            for (std::size_t c = 0; c < supp.size(); ++c) {
                bool any = false;
                for (const auto& v : basis) any = any || !v[c].is_zero();
                if (!any) return;
            }
            solvable = true;
            if (!S.explained(window_supp, basis)) all_explained = false;
        });
        if (!solvable) continue;
        ++res.solvable;
        if (all_explained) ++res.matched;
        else res.unexplained.push_back(window_supp);
    }
    return res;
}

} // namespace rbm
