#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dtk/bank.hpp"
#include "dtk/text.hpp"

namespace dtk {

struct QueryContext {
    std::string query_id;
    Embedding query_embedding;
    std::string question_text;
    std::string option_a;
    std::string option_b;
};

enum class TriadRole { anchor, hard_negative, boundary_probe };

const char* role_name(TriadRole role);

// Fallback tags recorded on members / triads. Kept as stable strings so
// traces and the selection oracle compare them verbatim.
inline constexpr const char* kFallbackBandExpanded = "band_expanded";
inline constexpr const char* kFallbackDocRelaxed = "doc_constraint_relaxed";
inline constexpr const char* kFallbackModalityGateEmpty = "modality_gate_empty";

struct ScoreBreakdown {
    int kappa = 0;
    double s_xr = 0.0;
    double s_rr1 = 0.0;
    double score = 0.0;
};

struct TriadMember {
    std::string entry_id;
    std::string doc_id;
    std::size_t bank_index = 0;
    TriadRole role = TriadRole::anchor;
    double similarity_to_query = 0.0;
    int rank = 0;
    std::optional<ScoreBreakdown> score_breakdown;  // boundary probe only
    std::vector<std::string> fallbacks;
};

struct Triad {
    std::string query_id;
    std::vector<TriadMember> members;            // 1-3, role order
    std::vector<std::string> fallbacks;          // triad-level tags
    std::optional<std::string> modality;         // detected modality, if any
    std::size_t pool_size = 0;                   // gated pool size

    const TriadMember* member(TriadRole role) const;
};

struct SelectionConfig {
    std::pair<int, int> band_hard_negative{20, 200};
    std::pair<int, int> band_boundary_probe{200, 1000};
    std::vector<ModalityKeywords> modality_table = default_modality_table();
    std::unordered_set<std::string> stopwords = default_stopwords();
};

// Gated candidate pool as indices into the bank, in bank order. Empty-gate
// fallback (full bank) is reported through gate_fell_back.
std::vector<std::size_t> gate_candidates(const ReferenceBank& bank,
                                         const std::optional<std::string>& modality,
                                         const std::vector<ModalityKeywords>& table,
                                         bool* gate_fell_back = nullptr);

TriadMember select_anchor(const std::vector<RankedEntry>& ranked_pool);

TriadMember select_hard_negative(const ReferenceBank& bank,
                                 const std::vector<RankedEntry>& ranked_pool,
                                 const TriadMember& anchor,
                                 std::pair<int, int> band);

TriadMember select_boundary_probe(const ReferenceBank& bank,
                                  const std::vector<RankedEntry>& ranked_pool,
                                  const TriadMember& anchor,
                                  const std::vector<TriadMember>& already_selected,
                                  const QueryContext& ctx,
                                  std::pair<int, int> band,
                                  const std::unordered_set<std::string>& stopwords);

// Full policy: detect modality -> gate -> rank -> anchor -> hard negative ->
// boundary probe. Pools smaller than three entries yield degraded triads.
Triad select_triad(const ReferenceBank& bank, const QueryContext& ctx,
                   const SelectionConfig& config);

}  // namespace dtk
