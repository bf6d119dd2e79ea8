#include "rbmono/rbmono.h"

#include "rbmono/classifier.hpp"
#include "rbmono/errors.hpp"
#include "rbmono/families.hpp"
#include "rbmono/json_io.hpp"
#include "rbmono/recurrences.hpp"

#include <cstring>
#include <string>

struct rbm_spec {
    rbm::FamilySpec spec;
};
struct rbm_operator {
    rbm::MonomialOperator op;
};
struct rbm_report {
    rbm::CheckReport report;
};

namespace {

thread_local std::string g_last_error;

rbm_status set_error(rbm_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class F>
rbm_status guarded(F&& f) {
    try {
        g_last_error.clear();
        return f();
    } catch (const rbm::InvalidParams& e) {
        return set_error(RBM_INVALID_PARAMS, e.what());
    } catch (const rbm::UnknownPreset& e) {
        return set_error(RBM_INVALID_PARAMS, e.what());
    } catch (const rbm::ZeroScalarError& e) {
        return set_error(RBM_INVALID_PARAMS, e.what());
    } catch (const rbm::DegenerateDenominator& e) {
        return set_error(RBM_INVALID_PARAMS, e.what());
    } catch (const rbm::NotAProgression& e) {
        return set_error(RBM_INVALID_PARAMS, e.what());
    } catch (const rbm::CoverageError& e) {
        return set_error(RBM_COVERAGE, e.what());
    } catch (const rbm::ParseError& e) {
        return set_error(RBM_IO, e.what());
    } catch (const std::exception& e) {
        return set_error(RBM_INTERNAL, e.what());
    }
}

#define RBM_REQUIRE(cond)                                                          \
    do {                                                                           \
        if (!(cond)) return set_error(RBM_INVALID_PARAMS, "null argument: " #cond); \
    } while (0)

rbm::json recurrence(const rbm::json& req, bool& passed) {
    using namespace rbm;
    const std::string kind = req.at("kind").get<std::string>();
    const json p = req.value("params", json::object());
    const long upto = req.value("upto", 60L);
    const long verify_to = req.value("verify_to", upto);
    json out{{"kind", kind}};
    CheckReport rep;
    if (kind == "single") {
        SingleRecParams s{p.at("d").get<long>(), p.at("tau").get<long>(), p.at("k").get<long>(),
                          p.at("delta").get<long>(), rational_from_json(p.value("beta_k", json(1)))};
        auto vals = closed_single(s, upto);
        json arr = json::array();
        for (const auto& v : vals) arr.push_back(v.str());
        out["values"] = arr;
        out["first_index"] = s.tau;
        const long keep = std::max(0L, std::min<long>(static_cast<long>(vals.size()), verify_to - s.tau + 1));
        rep = verify_single(std::vector<Rational>(vals.begin(), vals.begin() + keep), s.d, s.tau);
    } else if (kind == "two-index") {
        TwoIndexRecParams t;
        t.N = p.at("N").get<long>();
        t.d_seq = seq_from_json(p.at("d_seq"), t.N);
        t.tau_seq = seq_from_json(p.at("tau_seq"), t.N);
        t.I = index_set_from_json(p.at("I"));
        t.delta = p.at("delta").get<long>();
        const long max_row = p.value("max_row", t.N + 5);
        auto vals = closed_two_index(t, max_row, upto);
        json arr = json::array();
        for (const auto& [st, v] : vals) arr.push_back({st.first, st.second, v.str()});
        out["values"] = arr;
        rep = verify_two_index(vals, t.d_seq, t.tau_seq, verify_to);
    } else if (kind == "k-additive" || kind == "k-shifted") {
        KSeqResult r;
        long rr = 0, pp = p.at("p").get<long>(), delta = p.at("delta").get<long>();
        if (kind == "k-additive") {
            KSeqAdditiveParams a{pp, delta, p.at("k0").get<long>(), p.at("k1").get<long>(), seq_from_json(p.at("xi_1"), 1)};
            r = k_closed_additive(a, upto);
        } else {
            rr = p.at("r").get<long>();
            KSeqShiftedParams sh{rr, pp, delta, p.at("k0").get<long>(), seq_from_json(p.at("xi_0"), 0),
                                 seq_from_json(p.value("xi_1", json::array()), 1)};
            r = k_closed_shifted(sh, upto);
            out["tau"] = r.tau;
        }
        out["k"] = r.k;
        rep = verify_k_recurrence(r.k, r.xi, pp, delta, rr, verify_to);
    } else if (kind == "support-search") {
        auto s = search_single_supports(p.at("d").get<long>(), p.at("tau").get<long>(), p.at("length").get<long>());
        out["window_end"] = s.window_end;
        out["horizon"] = s.horizon;
        out["patterns_tried"] = s.patterns_tried;
        out["solvable"] = s.solvable;
        out["matched"] = s.matched;
        out["unexplained"] = s.unexplained;
        rep.pairs_checked = static_cast<std::size_t>(s.solvable);
        for (const auto& u : s.unexplained) rep.fail({u, "", "", "solution outside the closed form"});
    } else {
        throw ParseError("unknown recurrence kind: " + kind);
    }
    out["report"] = report_to_json(rep);
    passed = rep.passed;
    return out;
}

} // namespace

extern "C" {

const char* rbm_last_error(void) { return g_last_error.c_str(); }

void rbm_string_free(char* s) { delete[] s; }

rbm_status rbm_spec_from_json(const char* text, rbm_spec** out) {
    RBM_REQUIRE(text && out);
    return guarded([&] {
        *out = new rbm_spec{rbm::spec_from_json(rbm::parse_json_text(text))};
        return RBM_OK;
    });
}

rbm_status rbm_spec_to_json(const rbm_spec* spec, char** out) {
    RBM_REQUIRE(spec && out);
    return guarded([&] {
        *out = dup_string(rbm::dump_json(rbm::spec_to_json(spec->spec)));
        return RBM_OK;
    });
}

rbm_status rbm_spec_validate(const rbm_spec* spec) {
    RBM_REQUIRE(spec);
    return guarded([&] {
        auto v = rbm::validate_family_params(spec->spec);
        return v ? RBM_OK : set_error(RBM_INVALID_PARAMS, v.reason);
    });
}

rbm_status rbm_preset(const char* name, const char* options_json, rbm_spec** out) {
    RBM_REQUIRE(name && out);
    return guarded([&] {
        rbm::PresetOptions o;
        if (options_json) {
            rbm::json j = rbm::parse_json_text(options_json);
            try {
                if (j.contains("ctx")) o.ctx = rbm::ctx_from_json(j.at("ctx"));
                for (auto [key, slot] : {std::pair{"r", &o.r}, {"c", &o.c}, {"p_x", &o.p_x}, {"p_y", &o.p_y},
                                         {"d", &o.d}, {"delta", &o.delta}})
                    if (j.contains(key)) *slot = j.at(key).get<long>();
                if (j.contains("seed_a")) o.seed_a = rbm::rational_from_json(j.at("seed_a"));
                if (j.contains("seed_b")) o.seed_b = rbm::rational_from_json(j.at("seed_b"));
            } catch (const rbm::json::exception& e) {
                throw rbm::ParseError(std::string("preset options: ") + e.what());
            }
        }
        *out = new rbm_spec{rbm::discussion_presets(name, o)};
        return RBM_OK;
    });
}

rbm_status rbm_preset_names(char** out) {
    RBM_REQUIRE(out);
    return guarded([&] {
        *out = dup_string(rbm::dump_json(rbm::json(rbm::preset_names())));
        return RBM_OK;
    });
}

void rbm_spec_free(rbm_spec* spec) { delete spec; }

rbm_status rbm_operator_build(const rbm_spec* spec, rbm_operator** out) {
    RBM_REQUIRE(spec && out);
    return guarded([&] {
        *out = new rbm_operator{rbm::build(spec->spec)};
        return RBM_OK;
    });
}

rbm_status rbm_operator_from_table_json(const char* text, rbm_operator** out) {
    RBM_REQUIRE(text && out);
    return guarded([&] {
        *out = new rbm_operator{rbm::table_from_json(rbm::parse_json_text(text))};
        return RBM_OK;
    });
}

rbm_status rbm_operator_table_json(const rbm_operator* op, long degree, char** out) {
    RBM_REQUIRE(op && out);
    return guarded([&] {
        if (degree < 0) throw rbm::InvalidParams("degree must be natural");
        if (degree > op->op.coverage())
            throw rbm::CoverageError("degree " + std::to_string(degree) + " exceeds table coverage " +
                                     std::to_string(op->op.coverage()));
        *out = dup_string(rbm::dump_json(rbm::table_to_json(op->op, degree)));
        return RBM_OK;
    });
}

rbm_status rbm_operator_scale(const rbm_operator* op, const char* scalar, rbm_operator** out) {
    RBM_REQUIRE(op && scalar && out);
    return guarded([&] {
        rbm::Rational a = rbm::rational_from_json(rbm::json(std::string(scalar)));
        *out = new rbm_operator{rbm::scale(op->op, a)};
        return RBM_OK;
    });
}

rbm_status rbm_operator_swap(const rbm_operator* op, rbm_operator** out) {
    RBM_REQUIRE(op && out);
    return guarded([&] {
        *out = new rbm_operator{rbm::conjugate_swap(op->op)};
        return RBM_OK;
    });
}

void rbm_operator_free(rbm_operator* op) { delete op; }

rbm_status rbm_check(const rbm_operator* op, const char* kind, long max_degree, unsigned jobs, rbm_report** out) {
    RBM_REQUIRE(op && kind && out);
    return guarded([&] {
        if (max_degree < 0) throw rbm::InvalidParams("max_degree must be natural");
        rbm::CheckOptions opts{jobs == 0 ? 1u : jobs};
        const std::string k = kind;
        rbm::CheckReport rep;
        if (k == "rb0") rep = rbm::check_rb0(op->op, op->op.ctx(), max_degree, opts);
        else if (k == "averaging") rep = rbm::check_averaging(op->op, op->op.ctx(), max_degree, opts);
        else throw rbm::InvalidParams("check kind must be rb0 or averaging");
        *out = new rbm_report{std::move(rep)};
        return (*out)->report.passed ? RBM_OK : RBM_VERIFICATION_FAILED;
    });
}

rbm_status rbm_check_relation(const rbm_operator* op, const char* relation_json, long max_index, rbm_report** out) {
    RBM_REQUIRE(op && relation_json && out);
    return guarded([&] {
        rbm::json j = rbm::parse_json_text(relation_json);
        rbm::RelationParams rel;
        try {
            rel.kind = rbm::relation_kind_from_string(j.at("kind").get<std::string>());
            rel.r = j.value("r", 0L);
            rel.c = j.value("c", 0L);
            rel.p_x = j.value("p_x", 0L);
            rel.p_y = j.value("p_y", 0L);
        } catch (const rbm::json::exception& e) {
            throw rbm::ParseError(std::string("relation: ") + e.what());
        }
        const long reach = (rel.r + 2) * (2 * max_index + rel.c) + rel.p_x + rel.p_y + 2;
        const long cov = op->op.is_table() ? op->op.coverage() : reach;
        auto table = rbm::CoefficientTable::from_operator(op->op, cov);
        *out = new rbm_report{rbm::check_coefficient_relation(table, rel, op->op.ctx(), max_index)};
        return (*out)->report.passed ? RBM_OK : RBM_VERIFICATION_FAILED;
    });
}

int rbm_report_passed(const rbm_report* report) { return report && report->report.passed ? 1 : 0; }

rbm_status rbm_report_json(const rbm_report* report, char** out) {
    RBM_REQUIRE(report && out);
    return guarded([&] {
        *out = dup_string(rbm::dump_json(rbm::report_to_json(report->report)));
        return RBM_OK;
    });
}

void rbm_report_free(rbm_report* report) { delete report; }

rbm_status rbm_classify_json(const rbm_operator* table, long coverage_degree, char** out) {
    RBM_REQUIRE(table && out);
    return guarded([&] {
        auto res = rbm::classify_report(table->op, coverage_degree);
        *out = dup_string(rbm::dump_json(rbm::classification_to_json(res)));
        return RBM_OK;
    });
}

rbm_status rbm_recurrence_json(const char* request_json, char** out) {
    RBM_REQUIRE(request_json && out);
    return guarded([&] {
        rbm::json req = rbm::parse_json_text(request_json);
        bool passed = true;
        rbm::json res;
        try {
            res = recurrence(req, passed);
        } catch (const rbm::json::exception& e) {
            throw rbm::ParseError(std::string("recurrence request: ") + e.what());
        }
        *out = dup_string(rbm::dump_json(res));
        return passed ? RBM_OK : RBM_VERIFICATION_FAILED;
    });
}

rbm_status rbm_lattice_json(const rbm_spec* spec, long x_max, long y_max, char** out) {
    RBM_REQUIRE(spec && out);
    return guarded([&] {
        if (x_max < 0 || y_max < 0) throw rbm::InvalidParams("lattice bounds must be natural");
        rbm::json pts = rbm::json::array();
        for (auto [x, y] : rbm::support_lattice(spec->spec, x_max, y_max)) pts.push_back({x, y});
        *out = dup_string(rbm::dump_json(rbm::json{{"points", pts}}));
        return RBM_OK;
    });
}

} // extern "C"
