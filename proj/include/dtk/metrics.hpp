#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dtk/pair.hpp"

namespace dtk {

struct CategoryMetrics {
    double set_accuracy = 0.0;
    double individual_accuracy = 0.0;
    long long pairs = 0;
    long long both_correct_pairs = 0;
    long long correct_images = 0;
};

struct MetricsCounts {
    long long pairs = 0;
    long long images = 0;
    long long abstained_images = 0;
    long long adjudicated_pairs = 0;
    long long correct_images = 0;
    long long both_correct_pairs = 0;
    long long confused_pairs = 0;            // same committed label on both images
    long long nonabstained_images = 0;
    long long correct_nonabstained_images = 0;
};

struct MetricsReport {
    double set_accuracy = 0.0;
    double individual_accuracy = 0.0;
    double confusion_rate = 0.0;
    double abstention_rate = 0.0;
    double coverage = 0.0;
    double conditional_accuracy = 0.0;
    std::map<std::string, CategoryMetrics> per_category;
    MetricsCounts counts;
};

// Minimal row needed to score one pair; results files and traces both
// deserialize into this.
struct PairOutcomeRow {
    std::string pair_id;
    std::string category;
    Label final_1 = Label::Abstain;
    Label final_2 = Label::Abstain;
    Label truth_1 = Label::A;
    Label truth_2 = Label::B;
    bool adjudicated = false;
};

MetricsReport compute_metrics(const std::vector<PairOutcomeRow>& rows);

// Validates that results cover every dataset pair exactly once.
MetricsReport compute_metrics(const std::vector<PairResult>& results,
                              const std::vector<ConfusionPair>& dataset);

nlohmann::json metrics_to_json(const MetricsReport& report);
MetricsReport metrics_from_json(const nlohmann::json& j);

// One row per category plus an "overall" row; fractions rendered as
// two-decimal percentages.
std::string metrics_to_csv(const MetricsReport& report);

std::string format_percent(double fraction);  // "43.75" for 0.4375

}  // namespace dtk
