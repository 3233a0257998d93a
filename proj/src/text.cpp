#include "dtk/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "dtk/errors.hpp"

namespace dtk {

namespace {

bool is_word_char(unsigned char c) {
    return std::isalnum(c) != 0;
}

}  // namespace

const std::vector<ModalityKeywords>& default_modality_table() {
    static const std::vector<ModalityKeywords> table = {
        {"CT", {"ct", "computed tomography"}},
        {"MRI", {"mri", "magnetic resonance", "t1", "t2", "flair"}},
        {"XRAY", {"x-ray", "xray", "radiograph", "plain film"}},
        {"ULTRASOUND", {"ultrasound", "sonograph", "doppler"}},
        {"PET", {"pet", "positron emission"}},
        {"ANGIO", {"angiogram", "angiography"}},
    };
    return table;
}

const std::unordered_set<std::string>& default_stopwords() {
    static const std::unordered_set<std::string> words = {
        "a",     "an",    "and",   "are",    "as",    "at",    "be",    "been",  "but",
        "by",    "can",   "did",   "do",     "does",  "for",   "from",  "had",   "has",
        "have",  "he",    "her",   "his",    "how",   "if",    "in",    "into",  "is",
        "it",    "its",   "may",   "not",    "of",    "on",    "or",    "our",   "she",
        "should", "that", "the",   "their",  "there", "these", "they",  "this",  "to",
        "was",   "we",    "were",  "what",   "which", "who",   "will",  "with",  "you",
    };
    return words;
}

std::vector<ModalityKeywords> load_modality_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open modality table: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("modality table " + path + ": " + e.what());
    }
    if (!j.is_array()) {
        throw ValidationError("modality table " + path + ": expected a JSON array");
    }
    std::vector<ModalityKeywords> table;
    for (const auto& row : j) {
        ModalityKeywords mk;
        mk.modality = row.at("modality").get<std::string>();
        for (const auto& kw : row.at("keywords")) {
            mk.keywords.push_back(to_lower_ascii(kw.get<std::string>()));
        }
        if (mk.modality.empty() || mk.keywords.empty()) {
            throw ValidationError("modality table " + path + ": empty modality or keyword list");
        }
        table.push_back(std::move(mk));
    }
    return table;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open stopword list: " + path);
    }
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string w = to_lower_ascii(line);
        while (!w.empty() && (w.back() == '\r' || w.back() == ' ')) {
            w.pop_back();
        }
        if (!w.empty()) {
            words.insert(w);
        }
    }
    return words;
}

std::string to_lower_ascii(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool contains_keyword(std::string_view text, std::string_view keyword) {
    if (keyword.empty() || text.size() < keyword.size()) {
        return false;
    }
    std::string lowered_text = to_lower_ascii(text);
    std::string lowered_kw = to_lower_ascii(keyword);
    std::size_t pos = 0;
    while ((pos = lowered_text.find(lowered_kw, pos)) != std::string::npos) {
        bool left_ok = pos == 0 || !is_word_char(lowered_text[pos - 1]);
        std::size_t end = pos + lowered_kw.size();
        bool right_ok = end == lowered_text.size() || !is_word_char(lowered_text[end]);
        if (left_ok && right_ok) {
            return true;
        }
        ++pos;
    }
    return false;
}

std::vector<std::string> token_set(std::string_view text,
                                   const std::unordered_set<std::string>& stopwords) {
    std::vector<std::string> tokens;
    std::unordered_set<std::string> seen;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            if (!stopwords.count(current) && seen.insert(current).second) {
                tokens.push_back(current);
            }
            current.clear();
        }
    };
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            current.push_back(static_cast<char>(std::tolower(c)));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

int lexical_overlap(std::string_view caption, std::string_view question,
                    const std::unordered_set<std::string>& stopwords) {
    std::vector<std::string> caption_tokens = token_set(caption, stopwords);
    std::vector<std::string> question_tokens = token_set(question, stopwords);
    std::unordered_set<std::string> question_set(question_tokens.begin(), question_tokens.end());
    int overlap = 0;
    for (const auto& tok : caption_tokens) {
        if (question_set.count(tok)) {
            ++overlap;
        }
    }
    return overlap;
}

std::optional<std::string> detect_modality(std::string_view question_text,
                                           std::string_view option_a,
                                           std::string_view option_b,
                                           const std::vector<ModalityKeywords>& table) {
    std::string joined;
    joined.reserve(question_text.size() + option_a.size() + option_b.size() + 2);
    joined.append(question_text);
    joined.push_back(' ');
    joined.append(option_a);
    joined.push_back(' ');
    joined.append(option_b);
    for (const auto& row : table) {
        for (const auto& kw : row.keywords) {
            if (contains_keyword(joined, kw)) {
                return row.modality;
            }
        }
    }
    return std::nullopt;
}

}  // namespace dtk
