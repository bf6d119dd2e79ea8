// Config-driven front end over the rbmono C API.
#include "rbmono/rbmono.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Failure {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw Failure{code, msg}; }

void check(rbm_status s, const std::string& what) {
    if (s != RBM_OK && s != RBM_VERIFICATION_FAILED) fail(static_cast<int>(s), what + ": " + rbm_last_error());
}

struct Str {
    char* p = nullptr;
    ~Str() { rbm_string_free(p); }
    std::string get() const { return p ? std::string(p) : std::string(); }
};

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    ~Handle() { Free(p); }
};
using Spec = Handle<rbm_spec, rbm_spec_free>;
using Op = Handle<rbm_operator, rbm_operator_free>;
using Report = Handle<rbm_report, rbm_report_free>;

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) fail(RBM_IO, "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(RBM_IO, where + ": malformed JSON: " + e.what());
    }
}

// Write to a sibling temporary and rename, so readers never see a partial artifact.
void write_atomic(const std::optional<fs::path>& out, const std::string& text) {
    if (!out) {
        std::cout << text;
        return;
    }
    fs::path tmp = *out;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) fail(RBM_IO, "cannot write " + tmp.string());
        f << text;
        if (!f.flush()) fail(RBM_IO, "cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, *out, ec);
    if (ec) fail(RBM_IO, "cannot move " + tmp.string() + " to " + out->string() + ": " + ec.message());
}

struct Run {
    std::string command;
    json cfg;
    fs::path base;   // directory of the config file; relative paths resolve against it
    long max_degree = 10;
    bool max_degree_given = false;
    unsigned jobs = 1;
    std::optional<fs::path> out;

    fs::path resolve(const std::string& p) const { return fs::path(p).is_absolute() ? fs::path(p) : base / p; }

    long get_long(const char* key, long fallback) const {
        if (!cfg.contains(key)) return fallback;
        if (!cfg.at(key).is_number_integer()) fail(RBM_IO, std::string("config key \"") + key + "\" must be an integer");
        return cfg.at(key).get<long>();
    }

    void load_spec(Spec& spec) const {
        if (cfg.contains("spec")) {
            check(rbm_spec_from_json(cfg.at("spec").dump().c_str(), &spec.p), "spec");
        } else if (cfg.contains("spec_path")) {
            std::string text = read_file(resolve(cfg.at("spec_path").get<std::string>()));
            check(rbm_spec_from_json(text.c_str(), &spec.p), "spec");
        } else if (cfg.contains("preset")) {
            std::string opts = cfg.value("preset_options", json::object()).dump();
            check(rbm_preset(cfg.at("preset").get<std::string>().c_str(), opts.c_str(), &spec.p), "preset");
        } else {
            fail(RBM_IO, "config needs one of \"spec\", \"spec_path\" or \"preset\"");
        }
    }

    // A table file when given, otherwise the operator built from spec or preset.
    void load_operator(Op& op) const {
        if (cfg.contains("table_path")) {
            std::string text = read_file(resolve(cfg.at("table_path").get<std::string>()));
            check(rbm_operator_from_table_json(text.c_str(), &op.p), "table");
            return;
        }
        Spec spec;
        load_spec(spec);
        check(rbm_operator_build(spec.p, &op.p), "build");
    }
};

int cmd_build(const Run& run) {
    Op op;
    run.load_operator(op);
    Str s;
    check(rbm_operator_table_json(op.p, run.max_degree, &s.p), "table");
    write_atomic(run.out, s.get());
    return 0;
}

int cmd_verify(const Run& run) {
    Op op;
    run.load_operator(op);
    const std::string kind = run.cfg.value("check", std::string("rb0"));
    Report rep;
    rbm_status st;
    if (kind == "relation") {
        if (!run.cfg.contains("relation")) fail(RBM_IO, "check \"relation\" needs a \"relation\" object");
        st = rbm_check_relation(op.p, run.cfg.at("relation").dump().c_str(), run.max_degree, &rep.p);
    } else {
        st = rbm_check(op.p, kind.c_str(), run.max_degree, run.jobs, &rep.p);
    }
    check(st, "verify");
    Str s;
    check(rbm_report_json(rep.p, &s.p), "report");
    write_atomic(run.out, s.get());
    if (!rbm_report_passed(rep.p)) {
        std::cerr << "verification failed; witnesses written to the report\n";
        return 1;
    }
    return 0;
}

int cmd_classify(const Run& run) {
    Op op;
    run.load_operator(op);
    long degree = run.max_degree;
    if (!run.max_degree_given && run.cfg.contains("table_path")) {
        json t = parse(read_file(run.resolve(run.cfg.at("table_path").get<std::string>())), "table");
        degree = t.value("coverage_degree", degree);
    }
    if (!run.cfg.contains("table_path")) {
        // classify the truncation of a built operator
        Str table;
        check(rbm_operator_table_json(op.p, degree, &table.p), "table");
        Op truncated;
        check(rbm_operator_from_table_json(table.p, &truncated.p), "table");
        std::swap(op.p, truncated.p);
    }
    Str s;
    check(rbm_classify_json(op.p, degree, &s.p), "classify");
    write_atomic(run.out, s.get());
    return 0;
}

int cmd_recurrence(const Run& run) {
    if (!run.cfg.contains("recurrence")) fail(RBM_IO, "config needs a \"recurrence\" request");
    Str s;
    rbm_status st = rbm_recurrence_json(run.cfg.at("recurrence").dump().c_str(), &s.p);
    check(st, "recurrence");
    write_atomic(run.out, s.get());
    if (st == RBM_VERIFICATION_FAILED) {
        std::cerr << "recurrence verifier failed; witnesses written\n";
        return 1;
    }
    return 0;
}

int cmd_lattice(const Run& run) {
    Spec spec;
    run.load_spec(spec);
    const long x_max = run.get_long("x_max", run.max_degree);
    const long y_max = run.get_long("y_max", run.max_degree);
    Str s;
    check(rbm_lattice_json(spec.p, x_max, y_max, &s.p), "lattice");
    write_atomic(run.out, s.get());
    return 0;
}

int cmd_presets(const Run& run) {
    Str s;
    if (run.cfg.contains("preset")) {
        Spec spec;
        run.load_spec(spec);
        check(rbm_spec_to_json(spec.p, &s.p), "preset");
    } else {
        check(rbm_preset_names(&s.p), "presets");
    }
    write_atomic(run.out, s.get());
    return 0;
}

int dispatch(const Run& run) {
    if (run.command == "build") return cmd_build(run);
    if (run.command == "verify") return cmd_verify(run);
    if (run.command == "classify") return cmd_classify(run);
    if (run.command == "recurrence") return cmd_recurrence(run);
    if (run.command == "lattice") return cmd_lattice(run);
    if (run.command == "presets") return cmd_presets(run);
    fail(RBM_IO, "unknown command \"" + run.command + "\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monomial Rota-Baxter and averaging operators on F[x,y] and F0[x,y]"};
    app.require_subcommand(1, 1);
    std::string config_path;
    long max_degree = -1;
    std::string out_path;
    unsigned jobs = 0;
    for (const char* name : {"build", "verify", "classify", "recurrence", "lattice", "presets", "run"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config,-c", config_path, "JSON run configuration")
            ->required(std::string(name) != "presets")
            ->check(CLI::ExistingFile);
        sub->add_option("--max-degree", max_degree, "degree bound (default 10)")->check(CLI::NonNegativeNumber);
        sub->add_option("--out,-o", out_path, "artifact path (default: stdout)");
        sub->add_option("--jobs,-j", jobs, "worker threads for verification")->check(CLI::PositiveNumber);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : RBM_IO;
    }
    try {
        Run run;
        run.command = app.get_subcommands().front()->get_name();
        if (!config_path.empty()) {
            run.cfg = parse(read_file(config_path), config_path);
            if (!run.cfg.is_object()) fail(RBM_IO, "config must be a JSON object");
            run.base = fs::path(config_path).parent_path();
        } else {
            run.cfg = json::object();
        }
        if (run.command == "run") {
            if (!run.cfg.contains("command")) fail(RBM_IO, "config for \"run\" needs a \"command\"");
            run.command = run.cfg.at("command").get<std::string>();
        }
        run.max_degree = run.get_long("max_degree", 10);
        run.max_degree_given = run.cfg.contains("max_degree");
        if (max_degree >= 0) {
            run.max_degree = max_degree;
            run.max_degree_given = true;
        }
        if (run.max_degree < 0) fail(RBM_INVALID_PARAMS, "max_degree must be natural");
        run.jobs = jobs ? jobs : static_cast<unsigned>(run.get_long("jobs", 1));
        if (!out_path.empty()) run.out = fs::path(out_path);
        else if (run.cfg.contains("out")) run.out = run.resolve(run.cfg.at("out").get<std::string>());
        return dispatch(run);
    } catch (const Failure& f) {
        std::cerr << "rbmono: " << f.message << "\n";
        return f.code;
    } catch (const json::exception& e) {
        std::cerr << "rbmono: config: " << e.what() << "\n";
        return RBM_IO;
    }
}
