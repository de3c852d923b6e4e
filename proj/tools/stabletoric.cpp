// Command line front end: analyze graphs, write family graphs, run suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stabletoric/families.hpp"
#include "stabletoric/graph_io.hpp"
#include "stabletoric/stable_toric.hpp"
#include "stabletoric/verify.hpp"

using namespace stabletoric;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string input;
    std::string family;
    int dmax = 0;
    int walk_bound = 0;
    std::string order = "grevlex";
    int budget = 8;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    std::string witness_out;
    std::string suite;
    std::vector<std::string> suite_params;
    std::vector<std::string> family_args;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

SimpleGraph load_graph(const RunConfig &cfg) {
    if (cfg.input.empty() == cfg.family.empty())
        throw UsageError("exactly one of --input and --family is required");
    if (!cfg.family.empty())
        return family_from_spec(cfg.family);
    std::ifstream in(cfg.input);
    if (!in)
        throw UsageError("cannot open " + cfg.input);
    return read_simple_graph(in);
}

MonomialOrder build_order(const std::string &spec, std::size_t variables) {
    if (spec.rfind("o ", 0) == 0)
        return MonomialOrder::parse(spec);
    return {parse_order_kind(spec), variables};
}

// Flat "key: value" lines for the text format.
void write_text(std::ostream &out, const nlohmann::ordered_json &report) {
    for (const auto &[key, value] : report.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

std::ostream &open_output(const std::string &path, std::ofstream &file) {
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw UsageError("cannot write " + path);
    return file;
}

int cmd_analyze(const RunConfig &cfg) {
    if (cfg.dmax != 0 && cfg.dmax < 2)
        throw UsageError("--dmax must be at least 2");
    if (cfg.budget < 0)
        throw UsageError("--budget must be nonnegative");
    if (cfg.format != "json" && cfg.format != "text")
        throw UsageError("--format must be json or text");
    const SimpleGraph g = load_graph(cfg);
    AnalysisOptions options;
    options.dmax = cfg.dmax;
    options.walk_bound = cfg.walk_bound;
    options.budget = cfg.budget;
    options.seed = cfg.seed;
    options.order = build_order(cfg.order, stable_sets(g).size());
    const auto report = analyze(g, options);

    std::ofstream file;
    std::ostream &out = open_output(cfg.out, file);
    if (cfg.format == "json")
        out << report.dump(2) << '\n';
    else
        write_text(out, report);

    if (!cfg.witness_out.empty() && report["normal"]["witness"].is_array()) {
        const Point w = report["normal"]["witness"].get<Point>();
        const auto p = stable_set_polytope(g);
        std::ofstream wf(cfg.witness_out);
        if (!wf)
            throw UsageError("cannot write " + cfg.witness_out);
        write_witness(wf, w, cone_membership(w, p).certificate);
    }
    return kExitPass;
}

int cmd_family(const RunConfig &cfg) {
    SimpleGraph g;
    if (!cfg.family.empty()) {
        g = family_from_spec(cfg.family);
    } else {
        if (cfg.family_args.empty())
            throw UsageError("family needs a name or --family");
        std::vector<long long> params;
        for (std::size_t i = 1; i < cfg.family_args.size(); ++i)
            params.push_back(std::stoll(cfg.family_args[i]));
        g = family(cfg.family_args[0], params);
    }
    std::ofstream file;
    write_graph(open_output(cfg.out, file), g);
    return kExitPass;
}

int cmd_verify(const RunConfig &cfg) {
    const SuiteParams params(cfg.suite_params);
    std::ofstream file;
    std::ostream &out = open_output(cfg.out, file);
    const auto r = run_suite(cfg.suite, params, &out);
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.summary << " (" << r.instances << " checks, "
        << r.failures << " failures, " << r.seconds << " s)\n";
    return r.passed() ? kExitPass : kExitFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Toric rings and ideals of stable set polytopes"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    RunConfig cfg;

    auto *analyze_cmd = app.add_subcommand("analyze", "Report every verdict about one graph");
    analyze_cmd->add_option("--input", cfg.input, "Graph file");
    analyze_cmd->add_option("--family", cfg.family, "Family spec name:p1,p2,...");
    analyze_cmd->add_option("--dmax", cfg.dmax, "Dilation budget for the normality oracle (default n+1)");
    analyze_cmd->add_option("--walk-bound", cfg.walk_bound, "Walk length bound (0: twice the complement edges)");
    analyze_cmd->add_option("--order", cfg.order, "lex, grlex, grevlex or an `o ...` descriptor");
    analyze_cmd->add_option("--budget", cfg.budget, "Random orders tried by the quadratic search");
    analyze_cmd->add_option("--seed", cfg.seed, "Seed of the quadratic search");
    analyze_cmd->add_option("--format", cfg.format, "json or text");
    analyze_cmd->add_option("--out", cfg.out, "Output file (default stdout)");
    analyze_cmd->add_option("--witness", cfg.witness_out, "Write a nonnormality witness here");

    auto *family_cmd = app.add_subcommand("family", "Write a family graph in the text format");
    family_cmd->add_option("args", cfg.family_args, "Name followed by integer parameters");
    family_cmd->add_option("--family", cfg.family, "Family spec name:p1,p2,...");
    family_cmd->add_option("--out", cfg.out, "Output file (default stdout)");

    auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", cfg.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("params", cfg.suite_params, "Scale parameters key=value");
    verify_cmd->add_option("--out", cfg.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (analyze_cmd->parsed())
            return cmd_analyze(cfg);
        if (family_cmd->parsed())
            return cmd_family(cfg);
        return cmd_verify(cfg);
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError &e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitFailure;
    }
}
