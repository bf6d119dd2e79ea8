#include "rbmono/json_io.hpp"

#include "rbmono/errors.hpp"

namespace rbm {

namespace {

template <class F>
auto schema(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

long get_long(const json& j, const char* key, std::optional<long> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw ParseError(std::string("missing key \"") + key + "\"");
    }
    const json& v = j.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("key \"") + key + "\" must be an integer");
    return v.get<long>();
}

Rational get_rational(const json& j, const char* key, std::optional<Rational> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw ParseError(std::string("missing key \"") + key + "\"");
    }
    return rational_from_json(j.at(key));
}

} // namespace

json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return schema("rational", [&] { return Rational::parse(j.get<std::string>()); });
    throw ParseError("rational must be an integer or a \"p/q\" string");
}

json seq_to_json(const Seq& s) {
    json j;
    j["prefix"] = s.prefix;
    j["tail"] = s.tail ? json(*s.tail) : json(nullptr);
    return j;
}

Seq seq_from_json(const json& j, long first) {
    return schema("sequence", [&] {
        Seq s;
        s.first = first;
        if (j.is_array()) {
            s.prefix = j.get<std::vector<long>>();
            return s;
        }
        s.prefix = j.value("prefix", std::vector<long>{});
        if (j.contains("tail") && !j.at("tail").is_null()) s.tail = j.at("tail").get<long>();
        return s;
    });
}

json index_set_to_json(const IndexSet& I) {
    json arr = json::array();
    for (const auto& g : I.groups) {
        json jg;
        jg["elements"] = g.elements;
        json progs = json::array();
        for (const auto& p : g.progressions) progs.push_back({p.a, p.b});
        jg["progressions"] = progs;
        if (g.k.relative) jg["k"] = {{"relative", g.k.value}};
        else jg["k"] = g.k.value;
        jg["seed"] = rational_to_json(g.seed);
        arr.push_back(jg);
    }
    return arr;
}

IndexSet index_set_from_json(const json& j) {
    return schema("index set", [&] {
        if (!j.is_array()) throw ParseError("index set must be an array of groups");
        IndexSet I;
        for (const auto& jg : j) {
            IndexGroup g;
            g.elements = jg.value("elements", std::vector<long>{});
            if (jg.contains("progressions"))
                for (const auto& p : jg.at("progressions")) {
                    if (!p.is_array() || p.size() != 2) throw ParseError("progression must be [a, b]");
                    g.progressions.push_back({p.at(0).get<long>(), p.at(1).get<long>()});
                }
            const json& k = jg.at("k");
            if (k.is_object()) g.k = {true, k.at("relative").get<long>()};
            else g.k = {false, k.get<long>()};
            g.seed = jg.contains("seed") ? rational_from_json(jg.at("seed")) : Rational(1);
            I.groups.push_back(std::move(g));
        }
        return I;
    });
}

AlgebraContext ctx_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("ctx must be \"unital\" or \"nonunital\"");
    const auto s = j.get<std::string>();
    if (s == "unital") return AlgebraContext::F();
    if (s == "nonunital") return AlgebraContext::F0();
    throw ParseError("ctx must be \"unital\" or \"nonunital\", got \"" + s + "\"");
}

json spec_to_json(const FamilySpec& spec) {
    json p;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AvgFormParams>) {
                if (spec.family == Family::AVG_III) p["gamma"] = v.gamma;
                else if (spec.family != Family::AVG_IV) p["r"] = v.r;
                if (spec.family != Family::AVG_IV) p["c"] = v.c;
            } else if constexpr (std::is_same_v<T, RowFamilyParams>) {
                p["r"] = v.r;
                p["c"] = v.c;
                p["delta"] = v.delta;
                p["I"] = index_set_to_json(v.I);
            } else if constexpr (std::is_same_v<T, IdSuppParams>) {
                if (v.two_generator) {
                    p["variant"] = "two-generator";
                    p["k1"] = v.k1;
                    p["k2"] = v.k2;
                    p["alpha1"] = rational_to_json(v.alpha1);
                    p["alpha2"] = rational_to_json(v.alpha2);
                    p["a"] = v.a;
                    p["b"] = v.b;
                    p["d"] = v.d;
                } else {
                    p["variant"] = "single-ray";
                    p["l"] = v.l;
                    p["r"] = v.r;
                    p["gamma"] = rational_to_json(v.gamma);
                }
            } else if constexpr (std::is_same_v<T, CaseIIIAParams>) {
                p["p_x"] = v.p_x;
                p["p_y"] = v.p_y;
                p["k"] = v.k;
                p["c"] = v.c;
                p["delta"] = v.delta;
                if (is_rb(spec.family)) p["seed"] = rational_to_json(v.seed);
            } else if constexpr (std::is_same_v<T, CaseIIIB0Params>) {
                p["p_x"] = v.p_x;
                p["c"] = v.c;
                p["delta"] = v.delta;
                p["k0"] = v.k0;
                p["k1"] = v.k1;
                p["sigma"] = seq_to_json(v.sigma);
                if (is_rb(spec.family)) {
                    p["seed0"] = rational_to_json(v.seed0);
                    p["seed1"] = rational_to_json(v.seed1);
                }
            } else {
                p["p_x"] = v.p_x;
                p["p_y"] = v.p_y;
                p["c_x"] = v.c_x;
                p["c_y"] = v.c_y;
                p["r_x"] = v.r_x;
                p["r_y"] = v.r_y;
                p["delta_x"] = v.delta_x;
                p["delta_y"] = v.delta_y;
                p["k0"] = v.k0;
                p["sigma0"] = seq_to_json(v.sigma0);
                p["sigma1"] = seq_to_json(v.sigma1);
                if (is_rb(spec.family)) {
                    p["seed_a"] = rational_to_json(v.seed_a);
                    p["seed_b"] = rational_to_json(v.seed_b);
                }
            }
        },
        spec.params);
    if (p.is_null()) p = json::object();
    return {{"family", to_string(spec.family)}, {"ctx", spec.ctx.name()}, {"swapped", spec.swapped}, {"params", p}};
}

FamilySpec spec_from_json(const json& j) {
    return schema("family spec", [&] {
        if (!j.is_object()) throw ParseError("family spec must be an object");
        FamilySpec spec;
        try {
            spec.family = family_from_string(j.at("family").get<std::string>());
        } catch (const InvalidParams& e) {
            throw ParseError(e.what());
        }
        spec.ctx = j.contains("ctx") ? ctx_from_json(j.at("ctx")) : AlgebraContext::F();
        spec.swapped = j.value("swapped", false);
        const json p = j.contains("params") ? j.at("params") : json::object();
        switch (spec.family) {
        case Family::AVG_I:
        case Family::AVG_II:
        case Family::AVG_III:
        case Family::AVG_IV: {
            AvgFormParams v;
            v.r = get_long(p, "r", 0);
            v.c = get_long(p, "c", 0);
            v.gamma = get_long(p, "gamma", 0);
            spec.params = v;
            break;
        }
        case Family::RB_II:
        case Family::RB_I: {
            RowFamilyParams v;
            v.r = get_long(p, "r");
            v.c = get_long(p, "c");
            v.delta = get_long(p, "delta");
            v.I = index_set_from_json(p.at("I"));
            spec.params = v;
            break;
        }
        case Family::RB_IDSUPP: {
            IdSuppParams v;
            const std::string variant = p.at("variant").get<std::string>();
            if (variant == "single-ray") {
                v.two_generator = false;
                v.l = get_long(p, "l");
                v.r = get_long(p, "r");
                v.gamma = get_rational(p, "gamma");
            } else if (variant == "two-generator") {
                v.two_generator = true;
                v.k1 = get_long(p, "k1");
                v.k2 = get_long(p, "k2");
                v.alpha1 = get_rational(p, "alpha1");
                v.alpha2 = get_rational(p, "alpha2");
                v.a = get_long(p, "a");
                v.b = get_long(p, "b");
                v.d = get_long(p, "d");
            } else {
                throw ParseError("variant must be \"single-ray\" or \"two-generator\"");
            }
            spec.params = v;
            break;
        }
        case Family::AVG_IIIA:
        case Family::RB_IIIA: {
            CaseIIIAParams v;
            v.p_x = get_long(p, "p_x");
            v.p_y = get_long(p, "p_y");
            v.k = get_long(p, "k");
            v.c = get_long(p, "c");
            v.delta = get_long(p, "delta");
            v.seed = get_rational(p, "seed", Rational(1));
            spec.params = v;
            break;
        }
        case Family::AVG_IIIB0:
        case Family::RB_IIIB0: {
            CaseIIIB0Params v;
            v.p_x = get_long(p, "p_x");
            v.c = get_long(p, "c");
            v.delta = get_long(p, "delta");
            v.k0 = get_long(p, "k0");
            v.k1 = get_long(p, "k1");
            v.sigma = seq_from_json(p.at("sigma"), 1);
            v.seed0 = get_rational(p, "seed0", Rational(1));
            v.seed1 = get_rational(p, "seed1", Rational(1));
            spec.params = v;
            break;
        }
        case Family::AVG_IIIBPlus:
        case Family::RB_IIIBPlus: {
            CaseIIIBPlusParams v;
            v.p_x = get_long(p, "p_x");
            v.p_y = get_long(p, "p_y");
            v.c_x = get_long(p, "c_x");
            v.c_y = get_long(p, "c_y");
            v.r_x = get_long(p, "r_x");
            v.r_y = get_long(p, "r_y");
            v.delta_x = get_long(p, "delta_x");
            v.delta_y = get_long(p, "delta_y");
            v.k0 = get_long(p, "k0");
            v.sigma0 = seq_from_json(p.at("sigma0"), 0);
            v.sigma1 = p.contains("sigma1") ? seq_from_json(p.at("sigma1"), 1) : Seq{1, {}, std::nullopt};
            v.seed_a = get_rational(p, "seed_a", Rational(1));
            v.seed_b = get_rational(p, "seed_b", Rational(1));
            spec.params = v;
            break;
        }
        }
        return spec;
    });
}

json table_to_json(const MonomialOperator& op, long degree) {
    json rows = json::array();
    for (const auto& [z, t] : op.rows(degree))
        rows.push_back({z.n, z.m, t.coeff.str(), t.mono.n, t.mono.m});
    return {{"coverage_degree", degree}, {"ctx", op.ctx().name()}, {"rows", rows}};
}

MonomialOperator table_from_json(const json& j) {
    return schema("table", [&] {
        if (!j.is_object()) throw ParseError("table must be an object");
        const long coverage = get_long(j, "coverage_degree");
        if (coverage < 0) throw ParseError("coverage_degree must be natural");
        const AlgebraContext ctx = j.contains("ctx") ? ctx_from_json(j.at("ctx")) : AlgebraContext::F();
        TermTable rows;
        for (const auto& r : j.at("rows")) {
            if (!r.is_array() || r.size() != 5) throw ParseError("table row must be [n, m, coeff, n', m']");
            Monomial z{r.at(0).get<long>(), r.at(1).get<long>()};
            Term t{rational_from_json(r.at(2)), {r.at(3).get<long>(), r.at(4).get<long>()}};
            if (t.mono.n < 0 || t.mono.m < 0) throw ParseError("negative output exponent");
            if (!rows.emplace(z, t).second) throw ParseError("duplicate table row (not a monomial operator)");
        }
        try {
            return MonomialOperator::table(ctx, std::move(rows), coverage);
        } catch (const InvalidParams& e) {
            throw ParseError(e.what());
        }
    });
}

json report_to_json(const CheckReport& r) {
    json ws = json::array();
    for (const auto& w : r.witnesses) ws.push_back({{"at", w.at}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"note", w.note}});
    return {{"passed", r.passed}, {"pairs_checked", r.pairs_checked}, {"failures", r.failures}, {"witnesses", ws}};
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

} // namespace rbm
