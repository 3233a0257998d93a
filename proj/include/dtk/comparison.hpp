#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtk/triad.hpp"

namespace dtk {

enum class Label { A, B, Abstain };

const char* label_str(Label label);           // "A" / "B" / "abstain"
const char* label_token(Label label);         // "A" / "B" / "-"
std::optional<Label> label_from_str(std::string_view s);

enum class ParseStatus { ok, degraded, failed };

const char* parse_status_str(ParseStatus status);

struct EvidenceRecord {
    std::string modality_anatomy;
    std::vector<std::string> findings;      // exactly 3 when parse is ok
    std::vector<std::string> differences;   // 2-4 when parse is ok
    std::string key_evidence;
    std::string raw_response;
};

struct ComparisonOutcome {
    Label vote = Label::Abstain;
    int confidence = 0;                     // [0, 100]
    EvidenceRecord evidence;
    std::string reference_id;
    TriadRole role = TriadRole::anchor;
    ParseStatus parse_status = ParseStatus::failed;
    bool from_cache = false;
    std::string failure;                    // transport failure note, if any
};

// Never throws. Scans for the last valid "Answer:" line; no valid line means
// parse_status=failed with an abstain vote and zero confidence.
ComparisonOutcome parse_comparison_response(std::string_view text);

// "Final Answer:" line of an aggregate_decision reply; nullopt when missing.
std::optional<Label> parse_final_answer(std::string_view text);

// "Final Answer Image1/Image2:" lines of a pair_adjudicator reply; both must
// be present and valid.
std::optional<std::pair<Label, Label>> parse_pair_answers(std::string_view text);

}  // namespace dtk
