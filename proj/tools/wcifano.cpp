#include "jsonio.hpp"

#include "wcifano/blowup.hpp"
#include "wcifano/chern.hpp"
#include "wcifano/conditions.hpp"
#include "wcifano/reduction.hpp"
#include "wcifano/search.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

using wcifano::Int;
using Json = wcifano::jsonio::Json;

// Flat key=value defaults ('#' comments); flags always win over the file.
std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::map<std::string, std::string> values;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) values[key] = value;
    }
    return values;
}

std::string find_config_path(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return argv[i + 1];
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    if (const char* env = std::getenv("WCIFANO_CONFIG")) return env;
    return {};
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

struct CheckArgs {
    std::string weights, degrees;
    int l = 0; // 0: not given
};

struct EnumerateArgs {
    Int dim = 0;
    Int max_weight = 0, max_degree = 0;
    Int max_codim = 0; // 0: default
    std::string l = "auto";
    std::string out;
    std::string format = "jsonl";
    int jobs = 1;
};

struct VerifyArgs {
    std::string theorem;
    Int dim_min = 0, dim_max = 0;
    Int max_weight = 0, max_degree = 0;
    Int max_codim = 0;
    int m_max = 0; // 0: default
    std::string out;
    int jobs = 1;
    bool selftest_violation = false;
};

struct ReduceArgs {
    std::string mode;
    std::string weights, degrees;
    std::string trace_path;
};

int run_check(const CheckArgs& args, const std::string& config_path) {
    wcifano::WciCandidate cand{
        wcifano::WeightSystem(wcifano::parse_positive_csv(args.weights, "--weights")),
        wcifano::Multidegree(wcifano::parse_positive_csv(args.degrees, "--degrees"))};
    Json config{{"weights", args.weights}, {"degrees", args.degrees}};
    if (args.l > 0) config["l"] = args.l;
    if (!config_path.empty()) config["config"] = config_path;
    std::optional<int> requested;
    if (args.l > 0) requested = args.l;
    std::cout << wcifano::jsonio::check_report(cand, requested, config).dump(2)
              << "\n";
    return 0;
}

int run_enumerate(const EnumerateArgs& args, const std::string& config_path) {
    wcifano::SearchCaps caps;
    caps.dim = args.dim;
    caps.max_weight = args.max_weight;
    caps.max_degree = args.max_degree;
    if (args.max_codim > 0) caps.max_codim = args.max_codim;
    for (const auto& warning : wcifano::caps_warnings(caps))
        std::cerr << "warning: " << warning << "\n";

    int l = 0;
    if (args.l == "auto") {
        l = wcifano::l_window(caps.dim).hi;
    } else {
        const auto parsed = wcifano::parse_int(args.l);
        if (!parsed || *parsed < 1)
            throw std::invalid_argument("--l must be a positive integer or 'auto'");
        l = static_cast<int>(*parsed);
    }

    std::ofstream file;
    std::ostream& out = open_output(args.out, file);
    if (args.format == "csv") out << wcifano::jsonio::csv_header(l) << "\n";

    wcifano::EnumerationStats stats;
    wcifano::enumerate_candidates(
        caps, l,
        [&](const wcifano::SurvivorRecord& record) {
            if (args.format == "csv")
                out << wcifano::jsonio::record_to_csv(record) << "\n";
            else
                out << wcifano::jsonio::record_to_json(record).dump() << "\n";
        },
        args.jobs, &stats);
    out.flush();
    std::cerr << "scanned=" << stats.scanned << " survivors=" << stats.survivors
              << " elapsed_ms=" << stats.elapsed_ms << "\n";
    (void)config_path;
    return 0;
}

int run_verify(const VerifyArgs& args, const std::string& config_path) {
    wcifano::SearchCaps caps;
    caps.dim = 1; // per-dimension boxes are set inside the verifiers
    caps.max_weight = args.max_weight;
    caps.max_degree = args.max_degree;
    if (args.max_codim > 0) caps.max_codim = args.max_codim;
    for (const auto& warning : wcifano::caps_warnings(caps))
        std::cerr << "warning: " << warning << "\n";

    wcifano::VerificationReport report;
    int m_max = args.m_max;
    if (args.theorem == "log2") {
        report = wcifano::verify_log2(args.dim_min, args.dim_max, caps, args.jobs);
    } else if (args.theorem == "log3") {
        report = wcifano::verify_log3(args.dim_min, args.dim_max, caps, args.jobs);
    } else if (args.theorem == "monotonic") {
        if (m_max == 0) m_max = wcifano::default_m_max(args.dim_max);
        report = wcifano::verify_monotonic(args.dim_min, args.dim_max, caps, m_max,
                                           args.jobs);
    } else {
        throw std::invalid_argument("--theorem must be log2, log3 or monotonic");
    }

    if (args.selftest_violation) {
        // Exercises the exit-1 contract; the record is clearly marked.
        wcifano::SurvivorRecord marker{
            wcifano::WciCandidate{wcifano::WeightSystem({1, 1, 1}),
                                  wcifano::Multidegree({2})},
            wcifano::ChernProfile{{1}}, 1};
        report.violations.push_back({std::move(marker), "selftest-injected"});
    }

    Json config{{"theorem", args.theorem},
                {"dim_min", args.dim_min},
                {"dim_max", args.dim_max},
                {"max_weight", args.max_weight},
                {"max_degree", args.max_degree},
                {"jobs", args.jobs}};
    if (args.max_codim > 0) config["max_codim"] = args.max_codim;
    if (m_max > 0) config["m_max"] = m_max;
    if (!config_path.empty()) config["config"] = config_path;

    std::ofstream file;
    std::ostream& out = open_output(args.out, file);
    out << wcifano::jsonio::report_to_json(report, config).dump(2) << "\n";
    out.flush();
    return report.confirmed() ? 0 : 1;
}

int run_reduce(const ReduceArgs& args, const std::string& config_path) {
    Json config{{"mode", args.mode},
                {"weights", args.weights},
                {"degrees", args.degrees}};
    if (!config_path.empty()) config["config"] = config_path;

    Json trace_json;
    if (args.mode == "additive") {
        wcifano::AdditiveState state;
        state.weights = wcifano::parse_positive_csv(args.weights, "--weights");
        state.degrees = wcifano::parse_positive_csv(args.degrees, "--degrees");
        std::sort(state.weights.begin(), state.weights.end());
        std::sort(state.degrees.begin(), state.degrees.end());
        trace_json =
            wcifano::jsonio::trace_to_json(wcifano::reduce_additive(state), config);
    } else if (args.mode == "multiplicative") {
        wcifano::MultiplicativeState state;
        state.weights = wcifano::parse_rational_csv(args.weights, "--weights");
        state.degrees = wcifano::parse_positive_csv(args.degrees, "--degrees");
        std::sort(state.degrees.begin(), state.degrees.end());
        // Weight order is part of the hypotheses (a_N may trail out of
        // order), so the input is taken as given, not resorted.
        trace_json = wcifano::jsonio::trace_to_json(
            wcifano::reduce_multiplicative(state), config);
    } else {
        throw std::invalid_argument("--mode must be additive or multiplicative");
    }

    std::cout << trace_json.dump(2) << "\n";
    if (!args.trace_path.empty()) {
        std::ofstream file(args.trace_path);
        if (!file)
            throw std::invalid_argument("cannot open trace file: " + args.trace_path);
        file << trace_json.dump(2) << "\n";
    }
    return 0;
}

int run_blowup(Int n, const std::string& config_path) {
    Json config{{"n", n}};
    if (!config_path.empty()) config["config"] = config_path;
    std::cout << wcifano::jsonio::blowup_table(n, config).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"l-Fano weighted complete intersection toolkit"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path,
                   "key=value defaults file (or env WCIFANO_CONFIG)");

    CheckArgs check_args;
    auto* check = app.add_subcommand(
        "check", "Evaluate one candidate: conditions, Chern data, l-Fano verdicts");
    check->add_option("--weights", check_args.weights, "comma-separated weights")
        ->required();
    check->add_option("--degrees", check_args.degrees, "comma-separated degrees")
        ->required();
    check->add_option("--l", check_args.l, "extra l to report")
        ->check(CLI::PositiveNumber);

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand(
        "enumerate", "Exhaustive pruned search of one dimension box (JSONL)");
    enumerate->add_option("--dim", enum_args.dim, "dimension n")->required();
    enumerate->add_option("--max-weight", enum_args.max_weight, "weight cap")
        ->required();
    enumerate->add_option("--max-degree", enum_args.max_degree, "degree cap")
        ->required();
    enumerate->add_option("--max-codim", enum_args.max_codim, "codimension cap");
    enumerate->add_option("--l", enum_args.l, "positivity depth l, or 'auto'");
    enumerate->add_option("--out", enum_args.out, "output path (default stdout)");
    enumerate->add_option("--format", enum_args.format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    enumerate->add_option("--jobs", enum_args.jobs, "worker count");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "Caps-bounded theorem verification over a dimension range");
    verify->add_option("--theorem", verify_args.theorem, "log2, log3 or monotonic")
        ->required();
    verify->add_option("--dim-min", verify_args.dim_min, "first dimension")
        ->required();
    verify->add_option("--dim-max", verify_args.dim_max, "last dimension")
        ->required();
    verify->add_option("--max-weight", verify_args.max_weight, "weight cap")
        ->required();
    verify->add_option("--max-degree", verify_args.max_degree, "degree cap")
        ->required();
    verify->add_option("--max-codim", verify_args.max_codim, "codimension cap");
    verify->add_option("--m-max", verify_args.m_max,
                       "chain depth for monotonic runs");
    verify->add_option("--out", verify_args.out, "report path (default stdout)");
    verify->add_option("--jobs", verify_args.jobs, "worker count");
    verify->add_flag("--selftest-inject-violation", verify_args.selftest_violation,
                     "testing: add a marked synthetic violation (exit 1 path)");

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand(
        "reduce", "Run a normalization walk and print its certified trace");
    reduce->add_option("--mode", reduce_args.mode, "additive or multiplicative")
        ->required();
    reduce->add_option("--weights", reduce_args.weights, "comma-separated weights")
        ->required();
    reduce->add_option("--degrees", reduce_args.degrees, "comma-separated degrees")
        ->required();
    reduce->add_option("--trace", reduce_args.trace_path,
                       "also write the trace JSON here");

    Int blowup_n = 0;
    auto* blowup = app.add_subcommand(
        "blowup", "Chern pairings on the blow-up of a point on P^n");
    blowup->add_option("--n", blowup_n, "ambient dimension")->required();

    try {
        const std::string path = find_config_path(argc, argv);
        if (!path.empty()) {
            for (const auto& [key, value] : load_config_file(path)) {
                bool used = false;
                for (CLI::App* sub : {check, enumerate, verify, reduce, blowup}) {
                    if (CLI::Option* opt = sub->get_option_no_throw("--" + key)) {
                        if (opt->empty()) {
                            opt->default_val(value);
                            opt->required(false); // satisfied by the file
                        }
                        used = true;
                    }
                }
                if (!used)
                    std::cerr << "warning: config key '" << key
                              << "' matches no option\n";
            }
        }

        app.parse(argc, argv);

        if (check->parsed()) return run_check(check_args, path);
        if (enumerate->parsed()) return run_enumerate(enum_args, path);
        if (verify->parsed()) return run_verify(verify_args, path);
        if (reduce->parsed()) return run_reduce(reduce_args, path);
        if (blowup->parsed()) return run_blowup(blowup_n, path);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const wcifano::hypothesis_error& e) {
        std::cerr << "hypothesis violation [" << e.id << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
