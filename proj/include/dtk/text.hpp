#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace dtk {

struct ModalityKeywords {
    std::string modality;
    std::vector<std::string> keywords;
};

// Shipped defaults; both are also loadable from editable data files.
const std::vector<ModalityKeywords>& default_modality_table();
const std::unordered_set<std::string>& default_stopwords();

std::vector<ModalityKeywords> load_modality_table(const std::string& path);
std::unordered_set<std::string> load_stopwords(const std::string& path);

std::string to_lower_ascii(std::string_view text);

// Case-insensitive match with word boundaries on both ends, so "ct" hits
// "axial ct of chest" but not "infarction".
bool contains_keyword(std::string_view text, std::string_view keyword);

// Lowercased tokens split on non-alphanumeric runs, stopwords removed,
// deduplicated.
std::vector<std::string> token_set(std::string_view text,
                                   const std::unordered_set<std::string>& stopwords);

int lexical_overlap(std::string_view caption, std::string_view question,
                    const std::unordered_set<std::string>& stopwords);

// First modality (in table order) with any keyword hit over question +
// options; nullopt when nothing matches.
std::optional<std::string> detect_modality(std::string_view question_text,
                                           std::string_view option_a,
                                           std::string_view option_b,
                                           const std::vector<ModalityKeywords>& table);

}  // namespace dtk
