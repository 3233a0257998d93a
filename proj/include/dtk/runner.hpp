#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dtk/dataset.hpp"
#include "dtk/http_engine.hpp"
#include "dtk/metrics.hpp"
#include "dtk/mock_engine.hpp"

namespace dtk {

struct BackendConfig {
    std::string name = "mock";  // "mock" or "http"
    MockConfig mock;
    HttpEngineConfig http;
};

struct RunConfig {
    Thresholds thresholds;
    SelectionConfig selection;
    double tau_dup = 0.99;
    std::uint64_t seed = 0;
    int parallel = 1;
    RetryPolicy retry;
    BackendConfig backend;
    bool abstain_adjudicator = false;
    bool require_cached_pairwise = false;
};

struct RunProvenance {
    std::string bank_manifest_sha256;
    std::string bank_embeddings_sha256;
    std::string dataset_sha256;
    std::string template_pairwise_sha256;
    std::string template_aggregate_sha256;
    std::string template_pair_sha256;
};

struct RunOutput {
    std::vector<PairResult> results;  // dataset order
    MetricsReport report;
};

// Mock engine truth table straight from the dataset's ground-truth answers.
std::map<std::string, Label> truth_from_dataset(const std::vector<ConfusionPair>& dataset);

std::unique_ptr<ComparisonEngine> make_engine(const RunConfig& config,
                                              const std::vector<ConfusionPair>& dataset);

RunOutput run_inference(const RunConfig& config, const ReferenceBank& deduplicated_bank,
                        const std::vector<ConfusionPair>& dataset, ComparisonEngine& engine,
                        ResponseCache* cache, const PromptSet& prompts);

nlohmann::json report_json(const RunOutput& output, const RunConfig& config,
                           const RunProvenance& provenance);
nlohmann::json result_row_json(const PairResult& result, const ConfusionPair& pair);
PairOutcomeRow result_row_from_json(const nlohmann::json& j);

// report.json, results.jsonl, trace.jsonl (+ report.csv when csv is set).
void write_run_outputs(const std::string& out_dir, const RunOutput& output,
                       const std::vector<ConfusionPair>& dataset, const RunConfig& config,
                       const RunProvenance& provenance, bool also_csv);

struct SweepSpec {
    std::string parameter;        // p | m | t | delta
    std::vector<double> values;   // strictly increasing, non-empty
    Thresholds fixed;

    void validate() const;
};

struct SweepRow {
    double value = 0.0;
    MetricsReport report;
};

// Re-runs the filter/aggregate/decide/pair stages over the cached outcomes
// for each value of the swept parameter.
std::vector<SweepRow> sweep_thresholds(const SweepSpec& spec, const RunConfig& base_config,
                                       const ReferenceBank& deduplicated_bank,
                                       const std::vector<ConfusionPair>& dataset,
                                       ComparisonEngine& engine, ResponseCache* cache,
                                       const PromptSet& prompts);

nlohmann::json sweep_to_json(const std::vector<SweepRow>& rows, const SweepSpec& spec);
std::string sweep_to_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec);

}  // namespace dtk
