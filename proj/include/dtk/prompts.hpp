#pragma once

#include <map>
#include <string>
#include <vector>

namespace dtk {

enum class TemplateName { pairwise_discriminate, aggregate_decision, pair_adjudicator };

const char* template_name_str(TemplateName name);

struct PromptTemplate {
    TemplateName name = TemplateName::pairwise_discriminate;
    std::string body;
    std::vector<std::string> placeholders;  // in order of first appearance
};

// Compiled-in copies of the three shipped template files.
const PromptTemplate& builtin_template(TemplateName name);

// Validates the placeholder whitelist ({q},{a},{b},{n},{votes},{meta1},
// {meta2},{pred}); throws ValidationError on an unknown placeholder.
PromptTemplate make_template(TemplateName name, std::string body);
PromptTemplate load_template_file(TemplateName name, const std::string& path);

// Byte-exact substitution. Throws ValidationError when a placeholder in the
// template has no binding.
std::string render_prompt(const PromptTemplate& tpl,
                          const std::map<std::string, std::string>& bindings);

struct PromptSet {
    PromptTemplate pairwise;
    PromptTemplate aggregate;
    PromptTemplate pair_adj;

    static PromptSet builtin();
    const PromptTemplate& get(TemplateName name) const;
};

}  // namespace dtk
