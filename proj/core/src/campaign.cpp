#include "entbounds/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "entbounds/bounds.hpp"
#include "entbounds/measures.hpp"

namespace entbounds {

namespace {

using nlohmann::json;

// Per-purpose master-seed derivation, so draws inside one trial never share a
// stream with the trial's state draw.
std::uint64_t derive_master(std::uint64_t master, std::uint64_t purpose) {
    std::uint64_t z = master ^ (0xD1B54A32D192ED03ULL * (purpose + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kPurposeState = 0;
constexpr std::uint64_t kPurposePair = 1;
constexpr std::uint64_t kPurposeIsometry = 2;
constexpr std::uint64_t kPurposeSearch = 3;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ENTBOUNDS_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::vector<std::pair<std::string, Subsystem>> marginal_list(MarginalChoice m) {
    switch (m) {
        case MarginalChoice::A: return {{"", Subsystem::A}};
        case MarginalChoice::B: return {{"", Subsystem::B}};
        case MarginalChoice::Both:
            return {{"_a", Subsystem::A}, {"_b", Subsystem::B}};
    }
    return {};
}

int rank_for_trial(const CampaignConfig& cfg, std::uint64_t trial) {
    const int d = cfg.dim_a * cfg.dim_b;
    if (cfg.rank > 0) return cfg.rank;
    return static_cast<int>(trial % d) + 1;
}

void run_bounds_task(const CampaignConfig& cfg, const QuantumState& rho,
                     const BipartiteSplit& split, int rank, TrialRecord& rec) {
    bool ok = true;
    for (const auto& [suffix, sub] : marginal_list(cfg.marginal)) {
        const double lo = lower_bound(rho, split, sub);
        const double up = upper_bound(rho, split, sub);
        rec.values.emplace_back("lower_sq" + suffix, lo);
        rec.values.emplace_back("upper_sq" + suffix, up);
        rec.values.emplace_back("slack_bounds_order" + suffix, up - lo);
        double pure_dev = 0.0;
        if (rank == 1) {
            // rank-1 draws are pure, both bounds must match the pure formula
            const Decomposition eigen = eigen_ensemble(rho);
            const double c = concurrence_pure(eigen.states.front(), split);
            pure_dev = std::max(std::abs(lo - c * c), std::abs(up - c * c));
        }
        rec.values.emplace_back("dev_pure_tightness" + suffix, pure_dev);
        ok = ok && (up - lo >= -cfg.tolerance) && up >= -cfg.tolerance &&
             up <= 2.0 + cfg.tolerance && pure_dev <= cfg.tolerance;
    }
    rec.pass = rec.pass && ok;
}

void run_chain_task(const CampaignConfig& cfg, const BipartiteSplit& split,
                    std::uint64_t trial, TrialRecord& rec) {
    const std::uint64_t pair_master =
        derive_master(cfg.master_seed, kPurposePair);
    const PureState psi_i = haar_pure(split.total(), {pair_master, 2 * trial});
    const PureState psi_j =
        haar_pure(split.total(), {pair_master, 2 * trial + 1});
    const ChainReport chain = chain_check(psi_i, psi_j, split);
    rec.values.emplace_back("g_marginal", chain.g_marginal);
    rec.values.emplace_back("f_marginal", chain.f_marginal);
    rec.values.emplace_back("f_joint", chain.f_joint);
    rec.values.emplace_back("slack_chain_g", chain.link_slacks[0]);
    rec.values.emplace_back("slack_chain_gf", chain.link_slacks[1]);
    rec.values.emplace_back("slack_chain_ff", chain.link_slacks[2]);
    rec.pass = rec.pass && chain.holds(cfg.tolerance);
}

void run_proof_chain_task(const CampaignConfig& cfg, const QuantumState& rho,
                          const BipartiteSplit& split, std::uint64_t trial,
                          TrialRecord& rec) {
    const Decomposition eigen = eigen_ensemble(rho);
    const int r = static_cast<int>(eigen.size());
    const int m = cfg.search.ensemble_size > 0 ? cfg.search.ensemble_size : r * r;
    const Isometry v = random_isometry(
        std::max(m, r), r, {derive_master(cfg.master_seed, kPurposeIsometry), trial});
    const BoundsReport report = proof_chain_check(from_isometry(rho, v), split);
    rec.values.emplace_back("dev_id_avg_sq", report.slacks.at("id_avg_sq"));
    rec.values.emplace_back("dev_id_marginal_purity",
                            report.slacks.at("id_marginal_purity"));
    rec.values.emplace_back("dev_id_joint_purity",
                            report.slacks.at("id_joint_purity"));
    rec.values.emplace_back("slack_chain_upper", report.slacks.at("chain_upper"));
    rec.values.emplace_back("slack_chain_lower", report.slacks.at("chain_lower"));
    const bool chain_ok = report.slacks.at("chain_upper") >= -cfg.tolerance &&
                          report.slacks.at("chain_lower") >= -cfg.tolerance;
    rec.pass = rec.pass && report.pass.at("id_avg_sq") &&
               report.pass.at("id_marginal_purity") &&
               report.pass.at("id_joint_purity") && chain_ok;
}

double searched_concurrence(const CampaignConfig& cfg, const QuantumState& rho,
                            const BipartiteSplit& split, std::uint64_t trial) {
    SearchConfig sc = cfg.search;
    sc.seed = SeedSpec{derive_master(cfg.master_seed, kPurposeSearch),
                       trial * 4096};
    return minimize_average_concurrence(rho, split, sc).average_concurrence;
}

void run_search_task(const CampaignConfig& cfg, const QuantumState& rho,
                     const BipartiteSplit& split, std::uint64_t trial,
                     TrialRecord& rec) {
    const double c_star = searched_concurrence(cfg, rho, split, trial);
    rec.values.emplace_back("c_star", c_star);
    if (rho.dim() == 4 && split.dimA() == 2) {
        const double oracle = concurrence_two_qubit(rho);
        rec.values.emplace_back("c_oracle", oracle);
        rec.values.emplace_back("gap", c_star - oracle);
        rec.pass = rec.pass && (c_star >= oracle - 1e-7);
    }
}

void run_sandwich_task(const CampaignConfig& cfg, const QuantumState& rho,
                       const BipartiteSplit& split, std::uint64_t trial,
                       TrialRecord& rec) {
    const bool exact = rho.dim() == 4 && split.dimA() == 2;
    const double c_ref = exact ? concurrence_two_qubit(rho)
                               : searched_concurrence(cfg, rho, split, trial);
    bool ok = true;
    for (const auto& [suffix, sub] : marginal_list(cfg.marginal)) {
        const BoundsReport report =
            sandwich_check(rho, split, c_ref, exact, sub);
        rec.values.emplace_back("c_reference" + suffix, c_ref);
        rec.values.emplace_back("sandwich_lower_sq" + suffix, report.lower_sq);
        rec.values.emplace_back("sandwich_upper_sq" + suffix, report.upper_sq);
        rec.values.emplace_back("slack_sandwich_lower" + suffix,
                                report.slacks.at("lower"));
        ok = ok && report.slacks.at("lower") >= -cfg.tolerance;
        if (exact) {
            rec.values.emplace_back("slack_sandwich_upper" + suffix,
                                    report.slacks.at("upper"));
            ok = ok && report.slacks.at("upper") >= -cfg.tolerance;
        }
    }
    rec.pass = rec.pass && ok;
}

TrialRecord run_trial(const CampaignConfig& cfg, std::uint64_t trial) {
    TrialRecord rec;
    rec.trial = trial;
    rec.stream = trial;
    rec.pass = true;

    const BipartiteSplit split(cfg.dim_a, cfg.dim_b);
    const int rank = rank_for_trial(cfg, trial);
    rec.rank = rank;

    try {
        const QuantumState rho =
            random_density(split.total(), rank,
                           {derive_master(cfg.master_seed, kPurposeState), trial});
        rec.state_hash = state_hash(rho);

        // fixed task order keeps the column layout stable
        if (cfg.tasks.contains(Task::Bounds))
            run_bounds_task(cfg, rho, split, rank, rec);
        if (cfg.tasks.contains(Task::Chain))
            run_chain_task(cfg, split, trial, rec);
        if (cfg.tasks.contains(Task::ProofChain))
            run_proof_chain_task(cfg, rho, split, trial, rec);
        if (cfg.tasks.contains(Task::Search))
            run_search_task(cfg, rho, split, trial, rec);
        if (cfg.tasks.contains(Task::Sandwich))
            run_sandwich_task(cfg, rho, split, trial, rec);
    } catch (const Error& e) {
        rec.error = e.what();
        rec.pass = false;
    }
    return rec;
}

void validate_config(const CampaignConfig& cfg) {
    if (cfg.samples < 1) throw ConfigError("samples must be >= 1");
    if (cfg.dim_a < 1 || cfg.dim_b < 1)
        throw ConfigError("dimensions must be >= 1");
    if (cfg.rank < 0 || cfg.rank > cfg.dim_a * cfg.dim_b)
        throw ConfigError("rank must be in [1, dimA*dimB], or 0 for \"all\"");
    if (cfg.tolerance <= 0.0) throw ConfigError("tol must be > 0");
    if (cfg.tasks.empty()) throw ConfigError("no tasks selected");
}

}  // namespace

Task task_from_name(const std::string& name) {
    if (name == "bounds") return Task::Bounds;
    if (name == "chain") return Task::Chain;
    if (name == "proof-chain") return Task::ProofChain;
    if (name == "search") return Task::Search;
    if (name == "sandwich") return Task::Sandwich;
    throw ConfigError("unknown task: " + name);
}

std::string task_name(Task t) {
    switch (t) {
        case Task::Bounds: return "bounds";
        case Task::Chain: return "chain";
        case Task::ProofChain: return "proof-chain";
        case Task::Search: return "search";
        case Task::Sandwich: return "sandwich";
    }
    return "?";
}

std::uint64_t state_hash(const QuantumState& state) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    auto feed = [&h](double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        for (int i = 0; i < 8; ++i) {
            h ^= (bits >> (8 * i)) & 0xFF;
            h *= 0x100000001B3ULL;
        }
    };
    const Matrix& m = state.matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            feed(m(i, j).real());
            feed(m(i, j).imag());
        }
    return h;
}

CampaignSummary summarize(const std::vector<TrialRecord>& records,
                          double wall_time_ms) {
    CampaignSummary s;
    s.samples = records.size();
    s.wall_time_ms = wall_time_ms;
    for (const TrialRecord& rec : records) {
        if (!rec.error.empty()) {
            ++s.error_count;
            continue;
        }
        if (rec.pass)
            ++s.pass_count;
        else
            ++s.fail_count;
        for (const auto& [name, value] : rec.values) {
            if (name.starts_with("slack_")) {
                auto it = s.min_slack.find(name);
                if (it == s.min_slack.end())
                    s.min_slack.emplace(name, value);
                else if (value < it->second)
                    it->second = value;
            }
            if (name == "gap" && value > s.max_oracle_gap)
                s.max_oracle_gap = value;
        }
    }
    return s;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
    validate_config(cfg);
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<TrialRecord> records(cfg.samples);
    const int threads =
        std::min<std::uint64_t>(resolve_threads(cfg.threads), cfg.samples);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= cfg.samples) return;
            records[i] = run_trial(cfg, i);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    CampaignReport report;
    report.config = cfg;
    report.records = std::move(records);
    report.summary = summarize(report.records, ms);
    return report;
}

std::string format_report(const CampaignReport& report, ReportFormat format) {
    const std::vector<TrialRecord>& recs = report.records;

    // column layout: from the first non-error record (all share it)
    std::vector<std::string> value_names;
    for (const TrialRecord& r : recs)
        if (r.error.empty()) {
            for (const auto& [name, v] : r.values) value_names.push_back(name);
            break;
        }

    if (format == ReportFormat::Json) {
        json out;
        out["records"] = json::array();
        for (const TrialRecord& r : recs) {
            json jr;
            jr["trial"] = r.trial;
            jr["stream"] = r.stream;
            jr["state_hash"] = r.state_hash;
            jr["rank"] = r.rank;
            json vals = json::object();
            for (const auto& [name, v] : r.values) vals[name] = v;
            jr["values"] = std::move(vals);
            jr["pass"] = r.pass;
            if (!r.error.empty()) jr["error"] = r.error;
            out["records"].push_back(std::move(jr));
        }
        const CampaignSummary& s = report.summary;
        json js;
        js["samples"] = s.samples;
        js["pass_count"] = s.pass_count;
        js["fail_count"] = s.fail_count;
        js["error_count"] = s.error_count;
        js["min_slack"] = s.min_slack;
        js["max_oracle_gap"] = s.max_oracle_gap;
        js["wall_time_ms"] = s.wall_time_ms;
        out["summary"] = std::move(js);
        return out.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "trial,stream,state_hash,rank";
    for (const std::string& name : value_names) out << "," << name;
    out << ",pass,error\n";
    for (const TrialRecord& r : recs) {
        out << r.trial << "," << r.stream << "," << r.state_hash << ","
            << r.rank;
        if (r.error.empty()) {
            for (const auto& [name, v] : r.values) out << "," << fmt_double(v);
        } else {
            for (std::size_t i = 0; i < value_names.size(); ++i) out << ",";
        }
        out << "," << (r.pass ? 1 : 0) << ",";
        for (char c : r.error) out << (c == ',' ? ';' : c);
        out << "\n";
    }
    const CampaignSummary& s = report.summary;
    out << "# samples=" << s.samples << "\n";
    out << "# pass_count=" << s.pass_count << "\n";
    out << "# fail_count=" << s.fail_count << "\n";
    out << "# error_count=" << s.error_count << "\n";
    for (const auto& [name, v] : s.min_slack)
        out << "# min_slack[" << name << "]=" << fmt_double(v) << "\n";
    out << "# max_oracle_gap=" << fmt_double(s.max_oracle_gap) << "\n";
    out << "# wall_time_ms=" << fmt_double(s.wall_time_ms) << "\n";
    return out.str();
}

void emit_report(const CampaignReport& report, ReportFormat format,
                 const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << format_report(report, format);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace entbounds
