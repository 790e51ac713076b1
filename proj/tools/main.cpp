// entbounds: concurrence bounds, fidelity chains, and verification campaigns
// over random ensembles of quantum states.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entbounds/bounds.hpp"
#include "entbounds/campaign.hpp"
#include "entbounds/io.hpp"
#include "entbounds/measures.hpp"

namespace {

using namespace entbounds;

constexpr int kExitPass = 0;
constexpr int kExitInequalityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void print_value(const char* name, double v) {
    std::printf("%s = %.17g\n", name, v);
}

MarginalChoice parse_marginal(const std::string& s) {
    if (s == "a") return MarginalChoice::A;
    if (s == "b") return MarginalChoice::B;
    if (s == "both") return MarginalChoice::Both;
    throw ConfigError("--marginal must be a, b or both");
}

int cmd_verify(const CampaignConfig& cfg, const std::string& out_path,
               const std::string& format_name) {
    const ReportFormat format =
        format_name == "json" ? ReportFormat::Json : ReportFormat::Csv;
    const CampaignReport report = run_campaign(cfg);
    if (out_path.empty() || out_path == "-")
        std::cout << format_report(report, format);
    else
        emit_report(report, format, out_path);

    std::fprintf(stderr, "%llu/%llu pass, %llu fail, %llu error (%.1f ms)\n",
                 (unsigned long long)report.summary.pass_count,
                 (unsigned long long)report.summary.samples,
                 (unsigned long long)report.summary.fail_count,
                 (unsigned long long)report.summary.error_count,
                 report.summary.wall_time_ms);
    return report.summary.fail_count == 0 ? kExitPass : kExitInequalityFailure;
}

int cmd_bounds(const std::string& path, MarginalChoice marginal) {
    const StateFile file = load_state(path);
    for (const Subsystem sub :
         marginal == MarginalChoice::Both
             ? std::vector<Subsystem>{Subsystem::A, Subsystem::B}
             : std::vector<Subsystem>{marginal == MarginalChoice::A
                                          ? Subsystem::A
                                          : Subsystem::B}) {
        const char* tag = sub == Subsystem::A ? "A" : "B";
        const double lo = lower_bound(file.state, file.split, sub);
        const double up = upper_bound(file.state, file.split, sub);
        std::printf("marginal %s:\n", tag);
        print_value("  lower_sq", lo);
        print_value("  lower_sq_clamped", lo > 0 ? lo : 0.0);
        print_value("  upper_sq", up);
    }
    return kExitPass;
}

int cmd_concurrence(const std::string& path, const SearchConfig& sc) {
    const StateFile file = load_state(path);
    if (file.split.dimA() == 2 && file.split.dimB() == 2) {
        print_value("concurrence", concurrence_two_qubit(file.state));
        std::printf("method = closed-form\n");
    } else {
        const SearchResult res =
            minimize_average_concurrence(file.state, file.split, sc);
        print_value("concurrence_upper_estimate", res.average_concurrence);
        std::printf("method = decomposition-search (ensemble of %zu)\n",
                    res.decomposition.size());
    }
    return kExitPass;
}

int cmd_fidelity(const std::string& p1, const std::string& p2) {
    const StateFile a = load_state(p1);
    const StateFile b = load_state(p2);
    print_value("fidelity", fidelity(a.state, b.state));
    print_value("super_fidelity", super_fidelity(a.state, b.state));
    return kExitPass;
}

int cmd_chain(const std::string& p1, const std::string& p2, double tolerance) {
    const StateFile a = load_state(p1);
    const StateFile b = load_state(p2);
    if (!a.vector || !b.vector)
        throw ConfigError("chain needs pure-state files (\"vector\" key)");
    if (a.split.dimA() != b.split.dimA() || a.split.dimB() != b.split.dimB())
        throw DimensionMismatch("chain: the two files carry different splits");
    const ChainReport report = chain_check(*a.vector, *b.vector, a.split);
    print_value("g_marginal", report.g_marginal);
    print_value("f_marginal", report.f_marginal);
    print_value("f_joint", report.f_joint);
    print_value("slack_1_minus_g", report.link_slacks[0]);
    print_value("slack_g_minus_f", report.link_slacks[1]);
    print_value("slack_f_minus_joint", report.link_slacks[2]);
    const bool ok = report.holds(tolerance);
    std::printf("chain %s\n", ok ? "holds" : "VIOLATED");
    return ok ? kExitPass : kExitInequalityFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Observable concurrence bounds and fidelity-chain verification"};
    app.require_subcommand(1);

    // verify
    CampaignConfig cfg;
    std::string rank_str = "all";
    std::string tasks_str = "bounds,chain,proof-chain,sandwich";
    std::string marginal_str = "a";
    std::string out_path;
    std::string format_name = "csv";

    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->add_option("--samples", cfg.samples, "Number of trials");
    verify->add_option("--dim-a", cfg.dim_a, "Subsystem A dimension");
    verify->add_option("--dim-b", cfg.dim_b, "Subsystem B dimension");
    verify->add_option("--rank", rank_str, "State rank, or \"all\" to cycle");
    verify->add_option("--seed", cfg.master_seed, "Master seed");
    verify->add_option("--tol", cfg.tolerance, "Inequality slack tolerance");
    verify->add_option("--tasks", tasks_str,
                       "Comma list of bounds,chain,proof-chain,search,sandwich");
    verify->add_option("--out", out_path, "Report path (default stdout)");
    verify->add_option("--format", format_name, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--marginal", marginal_str, "a, b or both")
        ->check(CLI::IsMember({"a", "b", "both"}));
    verify->add_option("--restarts", cfg.search.restarts, "Search restarts");
    verify->add_option("--ensemble-size", cfg.search.ensemble_size,
                       "Search ensemble size (0 = rank^2)");
    verify->add_option("--threads", cfg.threads,
                       "Worker threads (0 = ENTBOUNDS_THREADS or hardware)");

    // bounds
    std::string state_path;
    auto* bounds = app.add_subcommand("bounds", "Bounds on C^2 for a state file");
    bounds->add_option("file", state_path, "State file")->required();
    bounds->add_option("--marginal", marginal_str, "a, b or both")
        ->check(CLI::IsMember({"a", "b", "both"}));

    // concurrence
    auto* conc = app.add_subcommand(
        "concurrence", "Concurrence (closed form if 2x2, else search)");
    conc->add_option("file", state_path, "State file")->required();
    conc->add_option("--restarts", cfg.search.restarts, "Search restarts");
    conc->add_option("--ensemble-size", cfg.search.ensemble_size,
                     "Search ensemble size (0 = rank^2)");
    conc->add_option("--seed", cfg.master_seed, "Search seed");

    // fidelity
    std::string path1, path2;
    auto* fid = app.add_subcommand("fidelity", "Fidelity between two states");
    fid->add_option("file1", path1, "First state file")->required();
    fid->add_option("file2", path2, "Second state file")->required();

    // chain
    auto* chain = app.add_subcommand(
        "chain", "Fidelity chain on two bipartite pure states");
    chain->add_option("file1", path1, "First pure-state file")->required();
    chain->add_option("file2", path2, "Second pure-state file")->required();
    chain->add_option("--tol", cfg.tolerance, "Inequality slack tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        cfg.marginal = parse_marginal(marginal_str);
        if (verify->parsed()) {
            if (rank_str == "all")
                cfg.rank = 0;
            else
                cfg.rank = std::stoi(rank_str);
            cfg.tasks.clear();
            std::stringstream ss(tasks_str);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) cfg.tasks.insert(task_from_name(item));
            return cmd_verify(cfg, out_path, format_name);
        }
        if (bounds->parsed()) return cmd_bounds(state_path, cfg.marginal);
        if (conc->parsed()) {
            cfg.search.seed = SeedSpec{cfg.master_seed, 0};
            return cmd_concurrence(state_path, cfg.search);
        }
        if (fid->parsed()) return cmd_fidelity(path1, path2);
        if (chain->parsed()) return cmd_chain(path1, path2, cfg.tolerance);
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
