#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtk/cache.hpp"
#include "dtk/comparison.hpp"
#include "dtk/engine.hpp"
#include "dtk/prompts.hpp"

namespace dtk {

struct Thresholds {
    int p = 50;          // per-comparison confidence floor
    int t = 50;          // total evidence mass floor
    int m = 30;          // decisiveness margin floor
    double delta = 0.10; // pair-ambiguity half-width

    void validate() const;  // throws ValidationError outside stated ranges
};

struct KeptVote {
    Label vote = Label::A;
    int confidence = 0;
    std::string reference_id;
};

enum class DiscardReason { abstained, below_p, parse_failed };

const char* discard_reason_str(DiscardReason reason);

struct DiscardedVote {
    Label vote = Label::Abstain;
    int confidence = 0;
    std::string reference_id;
    DiscardReason reason = DiscardReason::abstained;
};

// Weights are exact integer sums of confidences; no floating point touches
// the decision rule.
struct AggregateState {
    long long w_a = 0;
    long long w_b = 0;
    long long total_w = 0;
    long long margin = 0;        // |w_a - w_b|
    long long signed_score = 0;  // w_a - w_b (A -> +1, B -> -1)
    std::vector<KeptVote> kept_votes;
    std::vector<DiscardedVote> discarded;
};

std::pair<std::vector<KeptVote>, std::vector<DiscardedVote>>
filter_votes(const std::vector<ComparisonOutcome>& outcomes, int p);

AggregateState aggregate_weights(std::vector<KeptVote> kept);

// filter_votes + aggregate_weights, keeping the discard log.
AggregateState aggregate_outcomes(const std::vector<ComparisonOutcome>& outcomes, int p);

long long signed_score(const std::vector<KeptVote>& kept);

enum class DecisionBranch { insufficient_mass, margin_win, text_adjudicated, adjudicator_abstain };

const char* branch_str(DecisionBranch branch);

struct Decision {
    Label label = Label::Abstain;
    DecisionBranch branch = DecisionBranch::insufficient_mass;
    AggregateState aggregate;
};

// nullopt means the margin rule could not commit (total mass is sufficient
// but the margin is below m, or the weights tie) and text adjudication is
// pending.
std::optional<Decision> decide(const AggregateState& agg, const Thresholds& thresholds);

// decide with the adjudicator stubbed to abstain.
Decision decide_with_stub(const AggregateState& agg, const Thresholds& thresholds);

// One line per comparison in role order: vote, confidence, key evidence.
std::string serialize_votes_binding(const std::vector<ComparisonOutcome>& outcomes);

Decision text_adjudicate(ComparisonEngine& engine, const PromptTemplate& aggregate_template,
                         const QueryContext& ctx, const std::vector<ComparisonOutcome>& outcomes,
                         const AggregateState& agg, ResponseCache* cache,
                         const RetryPolicy& retry);

}  // namespace dtk
