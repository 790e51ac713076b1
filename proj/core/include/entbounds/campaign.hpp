#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "entbounds/decomposition.hpp"
#include "entbounds/state.hpp"

namespace entbounds {

enum class Task { Bounds, Chain, ProofChain, Search, Sandwich };

Task task_from_name(const std::string& name);
std::string task_name(Task t);

enum class MarginalChoice { A, B, Both };

struct CampaignConfig {
    std::uint64_t samples = 1;
    int dim_a = 2;
    int dim_b = 2;
    int rank = 0;  // 0 -> "all": cycle ranks 1..dim_a*dim_b per trial
    std::uint64_t master_seed = 0;
    double tolerance = 1e-8;
    std::set<Task> tasks;
    SearchConfig search;
    MarginalChoice marginal = MarginalChoice::A;
    int threads = 0;  // 0 -> ENTBOUNDS_THREADS env or hardware concurrency
};

// One trial's results. Values are (name, value) pairs in a fixed order
// determined by the task set, so every record has the same columns.
struct TrialRecord {
    std::uint64_t trial = 0;
    std::uint64_t stream = 0;
    std::uint64_t state_hash = 0;
    int rank = 0;
    std::vector<std::pair<std::string, double>> values;
    bool pass = false;
    std::string error;  // non-empty when the trial aborted
};

struct CampaignSummary {
    std::uint64_t samples = 0;
    std::uint64_t pass_count = 0;
    std::uint64_t fail_count = 0;
    std::uint64_t error_count = 0;
    std::map<std::string, double> min_slack;  // per recorded slack column
    double max_oracle_gap = 0.0;              // search task only
    double wall_time_ms = 0.0;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<TrialRecord> records;
    CampaignSummary summary;
};

CampaignReport run_campaign(const CampaignConfig& cfg);

// Recomputes the summary counters and minima from the records; timing is
// carried over from the input.
CampaignSummary summarize(const std::vector<TrialRecord>& records,
                          double wall_time_ms);

enum class ReportFormat { Csv, Json };

// CSV: one row per trial, then a summary block prefixed with '#'.
// JSON: {"records": [...], "summary": {...}}. Doubles keep 17 significant
// digits in both formats.
void emit_report(const CampaignReport& report, ReportFormat format,
                 const std::string& path);

std::string format_report(const CampaignReport& report, ReportFormat format);

// FNV-1a over the raw little-endian bytes of the matrix entries, row-major.
std::uint64_t state_hash(const QuantumState& state);

}  // namespace entbounds
