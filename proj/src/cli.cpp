#include "chowq/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chowq/corpus.hpp"
#include "chowq/io.hpp"

namespace chowq {

namespace {

using io::json;

struct Options {
    std::string input;
    std::string output;
    std::string json_path;
    std::string format = "json";
    bool parallel = false;

    std::string q, p, weights, method = "auto", new_vars;
    std::uint64_t seed = kDefaultCorpusSeed;
    std::size_t count = 20;
    std::string out_dir;
};

struct Outcome {
    int code = kExitOk;
    std::string status = "ok";
    json report = json::object();
    std::string text;
};

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

bool is_hypothesis_kind(ErrorKind k) {
    return k == ErrorKind::HypothesisViolated || k == ErrorKind::CertificateFailed || k == ErrorKind::InvalidWeights ||
           k == ErrorKind::NotHomogeneous;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    f << text;
}

json load_input(const Options& o, const std::string& command) {
    if (o.input.empty()) return json::object();
    json j = io::parse_text(read_file(o.input), o.input);
    if (!j.is_object()) parse_fail(o.input + ": expected a JSON object");
    if (j.contains("schema_version") && !(j["schema_version"].is_number_integer() && j["schema_version"].get<int>() == io::kSchemaVersion))
        parse_fail("input.schema_version: unsupported version (expected 1)");
    if (j.contains("command") && !(j["command"].is_string() && j["command"].get<std::string>() == command))
        parse_fail("input.command: this file is for another subcommand");
    return j;
}

Exec exec_of(const Options& o) { return o.parallel ? Exec::Parallel : Exec::Serial; }

IntVec weights_of(const Options& o, const json& in) {
    if (!o.weights.empty()) return io::parse_int_list(o.weights, "--weights");
    if (in.contains("weights")) return io::intvec_from_json(in["weights"], "input.weights");
    parse_fail("weights missing: pass --weights or an input file with a 'weights' field");
}

IntMat matrix_of(const std::string& flag_value, const char* flag, const json& in, const char* key) {
    if (!flag_value.empty()) return io::parse_int_rows(flag_value, flag);
    if (in.contains(key)) return io::intmat_from_json(in[key], std::string("input.") + key);
    return {};
}

Outcome cmd_gale(const Options& o) {
    const json in = load_input(o, "gale");
    IntMat q = matrix_of(o.q, "--q", in, "q");
    if (q.rows() == 0 && in.contains("data")) q = io::intmat_from_json(in, "input");
    if (q.rows() == 0) parse_fail("matrix missing: pass --q or an input file with a 'q' field");
    const IntMat p = gale_dual(q);
    Outcome out;
    out.report = json{{"q", io::to_json(q)}, {"p", io::to_json(p)}};
    out.text = "Q =\n" + io::matrix_text(q) + "P =\n" + io::matrix_text(p);
    return out;
}

Outcome cmd_gkz_rays(const Options& o) {
    const json in = load_input(o, "gkz-rays");
    const IntMat q = matrix_of(o.q, "--q", in, "q");
    const IntMat p = matrix_of(o.p, "--p", in, "p");
    if ((q.rows() == 0) == (p.rows() == 0)) parse_fail("pass exactly one of q or p");
    const VectorConfig cfg = q.rows() ? VectorConfig::from_q(q) : VectorConfig::from_p(p);
    std::string method = o.method;
    if (in.contains("method") && o.method == "auto") method = in["method"].get<std::string>();
    if (method == "auto") method = (cfg.q.rows() == 2 && check_ray_formula_hypotheses(cfg).ok()) ? "corank2" : "bruteforce";
    std::vector<GkzRay> rays;
    if (method == "corank2") {
        rays = gkz_rays_corank2(cfg);
        std::sort(rays.begin(), rays.end(), [](const GkzRay& a, const GkzRay& b) { return a.generator < b.generator; });
    } else if (method == "bruteforce") {
        rays = label_fan_rays(cfg, gkz_fan_bruteforce(cfg, {false, exec_of(o)}));
    } else if (method == "quotient") {
        rays = label_fan_rays(cfg, gkz_fan_via_quotient(cfg, exec_of(o)));
    } else {
        parse_fail("--method: expected auto, corank2, bruteforce or quotient");
    }
    Outcome out;
    json list = json::array();
    for (const auto& r : rays) list.push_back(io::to_json(r));
    out.report = json{{"method", method}, {"p", io::to_json(cfg.p)}, {"q", io::to_json(cfg.q)}, {"rays", list}};
    out.text = "method: " + method + "\n" + io::rays_text(rays);
    return out;
}

Outcome cmd_quotient_fan(const Options& o) {
    const json in = load_input(o, "quotient-fan");
    if (!in.contains("fan")) parse_fail("input.fan: missing field");
    const Fan f = io::fan_from_json(in["fan"], "input.fan");
    const IntMat p = matrix_of(o.p, "--p", in, "p");
    if (p.rows() == 0) parse_fail("input.p: missing field");
    const Fan qf = quotient_fan(f, p, exec_of(o));
    Outcome out;
    out.report = json{{"fan", io::to_json(qf)}};
    out.text = io::fan_text(qf);
    return out;
}

Outcome cmd_transfer(const Options& o) {
    const json in = load_input(o, "transfer");
    if (!in.contains("g")) parse_fail("input.g: missing field");
    const io::NamedPoly g = io::poly_from_json(in["g"], "input.g");
    const IntMat p = matrix_of(o.p, "--p", in, "p");
    if (p.rows() == 0) parse_fail("input.p: missing field");
    if (!in.contains("b")) parse_fail("input.b: missing field");
    const IntMat b = io::intmat_from_json(in["b"], "input.b");
    if (p.cols() != g.vars.size()) parse_fail("input.p: expected " + std::to_string(g.vars.size()) + " columns");
    if (b.rows() != p.rows()) parse_fail("input.b: expected " + std::to_string(p.rows()) + " rows");

    std::vector<std::string> fresh;
    if (!o.new_vars.empty()) {
        std::stringstream ss(o.new_vars);
        std::string item;
        while (std::getline(ss, item, ',')) fresh.push_back(item);
    } else if (in.contains("new_vars")) {
        const json& nv = in["new_vars"];
        if (!nv.is_array()) parse_fail("input.new_vars: expected an array of names");
        for (std::size_t i = 0; i < nv.size(); ++i) {
            if (!nv[i].is_string()) parse_fail("input.new_vars[" + std::to_string(i) + "]: expected a string");
            fresh.push_back(nv[i].get<std::string>());
        }
    } else {
        for (std::size_t j = 0; j < b.cols(); ++j) fresh.push_back("S" + std::to_string(j + 1));
    }
    if (fresh.size() != b.cols()) parse_fail("new_vars: expected " + std::to_string(b.cols()) + " names");

    const WeakLifting lift = in.contains("a") ? lifting_from_columns(p, b, io::intmat_from_json(in["a"], "input.a"))
                                              : weak_b_lifting(p, b);
    lift.verify();
    const LaurentPoly g2 = transfer_with_lifting(g.poly, lift);
    std::vector<std::string> vars = g.vars;
    vars.insert(vars.end(), fresh.begin(), fresh.end());
    Outcome out;
    out.report = json{{"relation", io::to_json(g2, vars)}, {"lifting", io::to_json(lift)}};
    out.text = "relation: " + g2.to_pretty_string(vars) + "\nlifting A =\n" + io::matrix_text(lift.a);
    return out;
}

Outcome hypothesis_failure(const IntVec& zeta, const HypothesisReport& h) {
    Outcome out;
    out.code = kExitHypothesis;
    out.status = "hypotheses_failed";
    out.report = json{{"zeta", io::to_json(zeta)}, {"hypotheses", io::to_json(h)}};
    out.text = "weights: " + to_string(zeta) + "\nhypotheses failed:\n";
    for (const auto& f : h.failures) out.text += "  - " + f + "\n";
    return out;
}

Outcome cmd_coxring(const Options& o) {
    const json in = load_input(o, "coxring");
    const WeightSystem w = WeightSystem::from(weights_of(o, in));
    const HypothesisReport h = validate_hypotheses(w);
    if (!h.ok()) return hypothesis_failure(w.zeta, h);
    const CoxPresentation c = cox_ring_of_chow_quotient(w, CoxOptions{exec_of(o)});
    Outcome out;
    out.report = io::to_json(c);
    out.text = io::cox_text(c);
    return out;
}

Outcome cmd_tropres(const Options& o) {
    const json in = load_input(o, "tropres");
    const WeightSystem w = WeightSystem::from(weights_of(o, in));
    const MdsReport m = mds_certificate(w, MdsOptions{exec_of(o)});
    Outcome out;
    out.report = io::to_json(m);
    out.text = io::mds_text(m);
    if (m.verdict != Verdict::Certified) {
        out.code = kExitHypothesis;
        out.status = "uncertified";
    }
    return out;
}

Outcome cmd_corpus(const Options& o) {
    const auto entries = regression_corpus(o.seed, o.count);
    Outcome out;
    json list = json::array();
    for (const auto& e : entries) {
        if (!o.out_dir.empty()) {
            std::filesystem::create_directories(o.out_dir);
            write_file((std::filesystem::path(o.out_dir) / (e.name + ".json")).string(), io::dump(e.input));
        }
        list.push_back(json{{"name", e.name}, {"command", e.command}, {"input", e.input}});
        out.text += e.name + " " + e.command + "\n";
    }
    out.report = json{{"seed", o.seed}, {"entries", list}};
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Cox rings of Chow quotients of K*-actions on smooth quadrics", "chowq"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool with_input) {
        if (with_input) sub->add_option("--input,-i", o.input, "JSON input file");
        sub->add_option("--output,-o", o.output, "write the main output here instead of stdout");
        sub->add_option("--json", o.json_path, "also write the JSON report to this file");
        sub->add_option("--format,-f", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--parallel", o.parallel, "use the OpenMP kernels");
    };

    std::map<std::string, std::function<Outcome(const Options&)>> handlers{
        {"gale", cmd_gale},       {"gkz-rays", cmd_gkz_rays}, {"quotient-fan", cmd_quotient_fan},
        {"transfer", cmd_transfer}, {"coxring", cmd_coxring},   {"tropres", cmd_tropres},
        {"corpus", cmd_corpus}};

    auto* gale = app.add_subcommand("gale", "Gale dual of a full-rank integer matrix");
    common(gale, true);
    gale->add_option("--q", o.q, "matrix rows separated by ';', entries by ','");

    auto* rays = app.add_subcommand("gkz-rays", "rays of the GKZ decomposition of a two-row configuration");
    common(rays, true);
    rays->add_option("--q", o.q, "Q as rows separated by ';'");
    rays->add_option("--p", o.p, "P as rows separated by ';'");
    rays->add_option("--method", o.method, "auto, corank2, bruteforce or quotient");

    auto* qf = app.add_subcommand("quotient-fan", "quotient fan of a fan under a surjection");
    common(qf, true);

    auto* tr = app.add_subcommand("transfer", "transfer a principal ideal along new rays");
    common(tr, true);
    tr->add_option("--new-vars", o.new_vars, "names of the new variables, comma separated");

    auto* cox = app.add_subcommand("coxring", "Cox ring of the normalized Chow quotient");
    common(cox, true);
    cox->add_option("--weights,-w", o.weights, "weights zeta_0,...,zeta_r");

    auto* tp = app.add_subcommand("tropres", "weak tropical resolution and Mori dream space certificate");
    common(tp, true);
    tp->add_option("--weights,-w", o.weights, "weights zeta_0,...,zeta_r");

    auto* cp = app.add_subcommand("corpus", "regression corpus inputs");
    common(cp, false);
    cp->add_option("--seed", o.seed, "seed of the random instances");
    cp->add_option("--count", o.count, "number of random instances");
    cp->add_option("--out", o.out_dir, "write one input file per entry into this directory");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    Outcome res;
    try {
        res = handlers.at(command)(o);
    } catch (const Error& e) {
        if (!is_hypothesis_kind(e.kind())) {
            err << "error: " << e.what() << "\n";
            return kExitMalformed;
        }
        res.code = kExitHypothesis;
        res.status = e.kind() == ErrorKind::CertificateFailed ? "certificate_failed" : "hypotheses_failed";
        res.report = json{{"error", e.what()}};
        res.text = std::string("failed: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    }

    json report{{"schema_version", io::kSchemaVersion}, {"command", command}, {"status", res.status}};
    for (auto& [k, v] : res.report.items()) report[k] = v;
    const std::string json_text = io::dump(report);
    const std::string main_text = o.format == "text" ? res.text : json_text;
    try {
        if (!o.json_path.empty()) write_file(o.json_path, json_text);
        if (!o.output.empty())
            write_file(o.output, main_text);
        else
            out << main_text;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitMalformed;
    }
    if (res.code != kExitOk) err << "chowq: " << res.status << "\n";
    return res.code;
}

}  // namespace chowq
