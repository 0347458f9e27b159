// Command line front end: instance inspection, algebra building and
// caching, Weyl/lattice diagram exports, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include "gpa/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace gpa;

namespace {

struct CliOptions {
    std::string config_path;
    std::string cache_path;
    std::string report_path;
    std::string dot_path;
    std::string field_override;
    std::string sample; // SEED:K
    int max_degree = 0;
    int jobs = 1;
    std::string suite = "all";
    bool as_json = false;
};

FieldSpec parse_field_flag(const std::string& s) {
    FieldSpec f;
    if (s == "rational")
        return f;
    if (s.rfind("p:", 0) == 0) {
        f.rational = false;
        f.prime = std::stoull(s.substr(2));
        return f;
    }
    throw ConfigError("bad --field value, expected rational or p:PRIME");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write " + path);
    out << text;
}

struct Session {
    InstanceConfig cfg;
    CartanData cd;
    FieldSpec field;
    int max_degree = 0;

    explicit Session(const CliOptions& opt) {
        if (opt.config_path.empty())
            throw ConfigError("--config is required");
        cfg = load_config(opt.config_path);
        cd = resolve_cartan(cfg);
        field = cfg.field;
        if (!opt.field_override.empty())
            field = parse_field_flag(opt.field_override);
        max_degree = opt.max_degree > 0 ? opt.max_degree
                     : cfg.max_degree > 0 ? cfg.max_degree
                                          : default_degree_bound(cd);
        if (!field.rational)
            Fp::set_modulus(field.prime);
        if (!opt.cache_path.empty())
            cfg.cache_path = opt.cache_path;
    }
};

template <class F>
std::shared_ptr<const FinDimAlgebra<F>> build_algebra(const Session& s,
                                                      bool allow_cache) {
    if (classify(s.cd).tag != CartanTag::Dynkin)
        throw NotDynkin("the algebra is finite dimensional only for "
                        "Dynkin-type input; refusing to build");
    if (allow_cache && !s.cfg.cache_path.empty()) {
        std::ifstream probe(s.cfg.cache_path);
        if (probe.good())
            return load_cache<F>(s.cfg.cache_path, s.cd, s.field);
    }
    auto pres = quiver_presentation(s.cd, AlgebraKind::Preprojective);
    auto rs = RewriteSystem<F>::complete(pres, s.max_degree);
    return FinDimAlgebra<F>::assemble(rs);
}

int cmd_inspect(const CliOptions& opt) {
    Session s(opt);
    auto cls = classify(s.cd);
    auto pres = quiver_presentation(s.cd, AlgebraKind::Preprojective);
    if (opt.as_json) {
        nlohmann::json j;
        j["instance"] = instance_json(s.cd, s.field);
        j["class"] = to_string(cls.tag);
        j["connected"] = cls.connected;
        nlohmann::json rels = nlohmann::json::array();
        for (const auto& r : pres.relations)
            rels.push_back({{"name", r.name},
                            {"relation", pres.render_relation(r)}});
        j["relations"] = rels;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "class:     " << to_string(cls.tag)
              << (cls.connected ? " (connected)" : " (disconnected)") << "\n";
    std::cout << "vertices:  " << s.cd.n << "\n";
    std::cout << "symmetrizer:";
    for (int d : s.cd.D)
        std::cout << " " << d;
    std::cout << "\n";
    std::cout << "edge data (g, f) per oriented pair:\n";
    for (const auto& [i, j] : s.cd.omega)
        std::cout << "  (" << i + 1 << "," << j + 1 << "): g="
                  << s.cd.g(i, j) << " f(" << i + 1 << "," << j + 1
                  << ")=" << s.cd.f(i, j) << " f(" << j + 1 << "," << i + 1
                  << ")=" << s.cd.f(j, i) << "\n";
    std::cout << "relations:\n";
    for (const auto& r : pres.relations)
        std::cout << "  " << r.name << ": " << pres.render_relation(r)
                  << "\n";
    if (cls.tag != CartanTag::Dynkin)
        std::cout << "note: not Dynkin type, the algebra is infinite "
                     "dimensional and will not be constructed\n";
    if (!opt.dot_path.empty()) {
        write_text(opt.dot_path, valued_graph_dot(s.cd) + quiver_dot(pres));
        std::cout << "wrote " << opt.dot_path << "\n";
    }
    return 0;
}

template <class F>
int cmd_build_t(const Session& s) {
    auto A = build_algebra<F>(s, false);
    std::cout << "dim = " << A->dim() << "\n";
    if (!s.cfg.cache_path.empty()) {
        save_cache(s.cfg.cache_path, *A, s.cd, s.field);
        std::cout << "cache written to " << s.cfg.cache_path << "\n";
    }
    return 0;
}

int cmd_build(const CliOptions& opt) {
    Session s(opt);
    if (s.field.rational)
        return cmd_build_t<Rat>(s);
    return cmd_build_t<Fp>(s);
}

int cmd_weyl(const CliOptions& opt) {
    Session s(opt);
    auto W = WeylGroup::generate(s.cd);
    std::cout << "|W| = " << W.size() << ", longest length "
              << W.length(W.longest()) << "\n";
    if (!opt.dot_path.empty()) {
        write_text(opt.dot_path, weak_order_dot(W));
        std::cout << "wrote " << opt.dot_path << "\n";
    }
    return 0;
}

template <class F>
int cmd_sttilt_t(const Session& s, const CliOptions& opt) {
    auto A = build_algebra<F>(s, true);
    auto W = WeylGroup::generate(s.cd);
    SttiltOptions lopt;
    lopt.jobs = opt.jobs;
    auto lat = sttilt_lattice(A, W, lopt);
    std::cout << "nodes: " << W.size() << "\n";
    for (int w = 0; w < W.size(); ++w)
        std::cout << "  " << W.word_name(w) << ": " << lat.node(w).label()
                  << "\n";
    if (!opt.dot_path.empty()) {
        write_text(opt.dot_path, sttilt_dot(lat));
        std::cout << "wrote " << opt.dot_path << "\n";
    }
    if (!opt.report_path.empty()) {
        nlohmann::json j;
        j["instance"] = instance_json(s.cd, s.field);
        nlohmann::json nodes = nlohmann::json::array();
        for (int w = 0; w < W.size(); ++w) {
            nlohmann::json nj;
            nj["w"] = W.word_name(w);
            nj["length"] = W.length(w);
            nj["label"] = lat.node(w).label();
            nj["ideal_dim"] = lat.node(w).ideal.dim();
            nj["support"] = lat.node(w).support;
            nodes.push_back(std::move(nj));
        }
        j["nodes"] = std::move(nodes);
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& [u, v, i] : lat.edges)
            edges.push_back({W.word_name(u), W.word_name(v), i + 1});
        j["edges"] = std::move(edges);
        write_text(opt.report_path, j.dump(2) + "\n");
        std::cout << "wrote " << opt.report_path << "\n";
    }
    return 0;
}

int cmd_sttilt(const CliOptions& opt) {
    Session s(opt);
    if (s.field.rational)
        return cmd_sttilt_t<Rat>(s, opt);
    return cmd_sttilt_t<Fp>(s, opt);
}

template <class F>
int cmd_verify_t(const Session& s, const CliOptions& opt) {
    auto A = build_algebra<F>(s, true);
    VerifyOptions vopt;
    vopt.jobs = opt.jobs;
    if (!opt.sample.empty()) {
        auto colon = opt.sample.find(':');
        if (colon == std::string::npos)
            throw ConfigError("--sample expects SEED:K");
        vopt.sample = true;
        vopt.sample_seed = std::stoull(opt.sample.substr(0, colon));
        vopt.sample_size = std::stoi(opt.sample.substr(colon + 1));
    }
    auto inst = prepare_instance<F>(s.cd, s.field, A, vopt);
    std::vector<VerificationReport> reports;
    if (opt.suite == "all") {
        reports = verify_all(inst);
    } else if (opt.suite == "theorem-a") {
        reports = {verify_theorem_a(inst)};
    } else if (opt.suite == "theorem-b") {
        reports = {verify_theorem_b(inst)};
    } else if (opt.suite == "homological") {
        reports = {verify_homological(inst)};
    } else if (opt.suite == "annihilators") {
        reports = {verify_annihilators(inst)};
    } else {
        throw ConfigError("unknown suite: " + opt.suite);
    }
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << r.summary_table();
        ok = ok && r.ok();
    }
    if (!opt.report_path.empty()) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports)
            j.push_back(r.to_json());
        write_text(opt.report_path, j.dump(2) + "\n");
        std::cout << "wrote " << opt.report_path << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_verify(const CliOptions& opt) {
    Session s(opt);
    if (s.field.rational)
        return cmd_verify_t<Rat>(s, opt);
    return cmd_verify_t<Fp>(s, opt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized preprojective algebra toolkit"};
    app.require_subcommand(1);
    CliOptions opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "instance file (JSON)");
        cmd->add_option("--cache", opt.cache_path, "algebra cache file");
        cmd->add_option("--report", opt.report_path, "JSON output path");
        cmd->add_option("--dot", opt.dot_path, "DOT output path");
        cmd->add_option("--field", opt.field_override,
                        "rational or p:PRIME (overrides the config)");
        cmd->add_option("--max-degree", opt.max_degree,
                        "completion degree bound override");
        cmd->add_option("--sample", opt.sample,
                        "SEED:K deterministic sample of Weyl elements");
        cmd->add_option("--jobs", opt.jobs, "parallel worker count");
    };

    auto* inspect = app.add_subcommand(
        "inspect", "classify the instance and print its presentation");
    add_common(inspect);
    inspect->add_flag("--json", opt.as_json, "machine readable output");

    auto* build = app.add_subcommand(
        "build", "assemble the algebra and optionally write the cache");
    add_common(build);

    auto* weyl = app.add_subcommand(
        "weyl", "generate the Weyl group and export the weak order");
    add_common(weyl);
    weyl->add_option("--hasse", opt.dot_path,
                     "weak order Hasse diagram output (alias of --dot)");

    auto* sttilt = app.add_subcommand(
        "sttilt", "build the support tau-tilting lattice");
    add_common(sttilt);

    auto* verify = app.add_subcommand(
        "verify", "run a verification suite against the instance");
    add_common(verify);
    verify->add_option("--suite", opt.suite,
                       "theorem-a, theorem-b, homological, annihilators, all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inspect->parsed())
            return cmd_inspect(opt);
        if (build->parsed())
            return cmd_build(opt);
        if (weyl->parsed())
            return cmd_weyl(opt);
        if (sttilt->parsed())
            return cmd_sttilt(opt);
        if (verify->parsed())
            return cmd_verify(opt);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CacheError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotDynkin& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotFinite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegreeBoundExceeded& e) {
        std::cerr << "error: " << e.what()
                  << " (raise --max-degree for a larger bound)\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "verification/engine failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
