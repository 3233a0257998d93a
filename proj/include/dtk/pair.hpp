#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dtk/cci.hpp"

namespace dtk {

struct PairImage {
    std::string id;
    std::string path;
    Embedding embedding;
};

struct ConfusionPair {
    std::string pair_id;
    std::string category;
    std::string question;
    std::string option_a;
    std::string option_b;
    PairImage image_1;
    PairImage image_2;
    Label answer_1 = Label::A;
    Label answer_2 = Label::B;
    std::size_t line = 0;
};

struct PairResult {
    std::string pair_id;
    Decision decision_1;
    Decision decision_2;
    std::optional<double> posterior_1;
    std::optional<double> posterior_2;
    bool adjudicated = false;           // pair adjudication was triggered
    Label final_1 = Label::Abstain;
    Label final_2 = Label::Abstain;
    Triad triad_1;
    Triad triad_2;
    std::vector<ComparisonOutcome> outcomes_1;
    std::vector<ComparisonOutcome> outcomes_2;
    std::vector<nlohmann::json> trace;  // ordered event log
};

// w_a / (w_a + w_b); nullopt when total mass is zero (maximally ambiguous
// downstream).
std::optional<double> soft_posterior(const AggregateState& agg);

// Same committed prediction, or either posterior within delta of 1/2
// (undefined posterior counts as distance zero).
bool needs_pair_adjudication(Label final_1, Label final_2,
                             std::optional<double> posterior_1,
                             std::optional<double> posterior_2, double delta);

// Renders the pair adjudicator prompt from the two evidence sets and calls
// the engine with both images. Engine failure or an unparseable reply leaves
// differing finals unchanged and collapses identical finals to abstention.
std::pair<Label, Label> pair_adjudicate(ComparisonEngine& engine,
                                        const PromptTemplate& pair_template,
                                        const ConfusionPair& pair,
                                        const std::vector<ComparisonOutcome>& evidence_1,
                                        const std::vector<ComparisonOutcome>& evidence_2,
                                        std::pair<Label, Label> preds,
                                        ResponseCache* cache, const RetryPolicy& retry);

struct PairRunConfig {
    Thresholds thresholds;
    SelectionConfig selection;
    RetryPolicy retry;
    // Sweep mode: adjudication stages abstain instead of consulting the
    // engine or cache; a pairwise cache miss is then an error.
    bool abstain_adjudicator = false;
    bool require_cached_pairwise = false;
};

PairResult run_pair(const PairRunConfig& config, const ReferenceBank& bank,
                    const ConfusionPair& pair, ComparisonEngine& engine, ResponseCache* cache,
                    const PromptSet& prompts);

// Per-image pairwise comparison step shared by run_pair; exposed for tests.
ComparisonOutcome compare(ComparisonEngine& engine, const QueryContext& ctx,
                          const TriadMember& reference, const std::string& reference_path,
                          const PromptTemplate& pairwise_template, ResponseCache* cache,
                          const RetryPolicy& retry, const std::string& query_image_path = "");

}  // namespace dtk
