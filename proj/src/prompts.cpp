#include "dtk/prompts.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk {

namespace {

const std::array<const char*, 8> kPlaceholderWhitelist = {"q",     "a",     "b",    "n",
                                                          "votes", "meta1", "meta2", "pred"};

bool whitelisted(std::string_view name) {
    for (const char* p : kPlaceholderWhitelist) {
        if (name == p) {
            return true;
        }
    }
    return false;
}

bool placeholder_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

const char kPairwiseBody[] =
    R"DTK(You are comparing two medical images to answer a question about the QUERY image.

Question: {q}

Answer choices:
A: {a}
B: {b}

Image roles:
Image 1 is the QUERY image (this is the image you must answer for).
Image 2 is the REFERENCE image (for comparison only).

Step 0 – Modality and anatomy
In one line, identify the imaging modality and the primary anatomy shown in the QUERY image.

Step 1 – QUERY findings
List exactly 3 concrete, observable visual findings in the QUERY image.
These must be specific medical findings (for example: focal opacity, fracture line, air–fluid level, organ enlargement).
Do not describe the reference image.
Do not mention image quality, brightness, orientation, or artifacts.

Step 2 – Differences versus REFERENCE
List 2 to 4 visual differences between the QUERY and REFERENCE images that are relevant to distinguishing answer A versus B.

Step 3 – Decision for QUERY
Based only on the QUERY image, decide whether A, B, or abstain (-).
If you cannot determine A vs B from the QUERY image with confidence >= 60, output Answer: -

Step 4 – Confidence and Key Evidence
Provide your confidence level (0-100) and the single most important piece of visual evidence that supports your answer.
Key evidence must name a specific visual feature in the QUERY image, not a conclusion.

Output format (follow exactly):

Modality and Anatomy: <one line>

QUERY Findings:

<finding 1>

<finding 2>

<finding 3>

Differences vs REFERENCE:

<difference 1>

<difference 2>

<difference 3> (optional)

<difference 4> (optional)

Answer: <A or B or ->

Confidence: <0-100>

Key evidence: <specific visual feature in QUERY, not a conclusion>

Rules:
Base the final answer only on the QUERY image.
Use the REFERENCE image only to identify discriminative visual features.
Do not reference captions, metadata, or prior cases.
Do not add explanations beyond the required fields.
Abstain (-) if evidence is insufficient or confidence is below 60.
)DTK";

const char kAggregateBody[] =
    R"DTK(You have made {n} pairwise comparisons for a medical image question.

Question: {q}
A: {a}
B: {b}

Your pairwise comparison votes:
{votes}

Based on the consistency of your comparisons, provide your final answer.
If the votes are inconsistent and average confidence is low, output Final Answer: -

Output format:
Final Answer: <A or B or ->
)DTK";

const char kPairAdjudicatorBody[] =
    R"DTK(You are analyzing TWO medical images for the same clinical question.

Question: {q}
A: {a}
B: {b}

Image 1: {meta1}
Image 2: {meta2}

Both images were independently predicted as: {pred}

Your task:
Evaluate each image primarily on its own visual evidence to determine the most appropriate answer.
You may consider visual differences between the two images only to assess whether the same decision should reasonably apply to both images.

IMPORTANT GUIDELINES:
- Each image should be judged on its own merits.
- There is NO requirement that the two images have different answers.
- There is NO requirement that the two images have the same answer.
- Use cross-image comparison only if it reveals a clear, clinically meaningful distinction.
- If evidence is ambiguous or insufficient for either image, abstain (-).
- Abstention is a valid and preferred outcome when confidence is low.
- Base all decisions strictly on visual evidence.

Provide:

1. Brief visual assessment of each image (key findings only).
2. Whether any observed differences justify different answers.
3. A final answer for each image.

Output format (follow exactly):

Visual assessment Image 1: <key visual features>
Visual assessment Image 2: <key visual features>

Do observed differences justify different answers? <Yes or No>

Final Answer Image1: <A or B or ->
Final Answer Image2: <A or B or ->

Rules:
- Do not rely on captions, metadata, or prior cases.
- Do not force disagreement between images.
- Do not guess; abstain (-) if uncertain.
)DTK";

}  // namespace

const char* template_name_str(TemplateName name) {
    switch (name) {
        case TemplateName::pairwise_discriminate: return "pairwise_discriminate";
        case TemplateName::aggregate_decision: return "aggregate_decision";
        case TemplateName::pair_adjudicator: return "pair_adjudicator";
    }
    return "?";
}

PromptTemplate make_template(TemplateName name, std::string body) {
    PromptTemplate tpl;
    tpl.name = name;
    tpl.body = std::move(body);

    std::size_t pos = 0;
    while ((pos = tpl.body.find('{', pos)) != std::string::npos) {
        std::size_t end = pos + 1;
        while (end < tpl.body.size() && placeholder_char(tpl.body[end])) {
            ++end;
        }
        if (end < tpl.body.size() && tpl.body[end] == '}' && end > pos + 1) {
            std::string ph = tpl.body.substr(pos + 1, end - pos - 1);
            if (!whitelisted(ph)) {
                throw ValidationError(std::string(template_name_str(name)) +
                                      ": unknown placeholder {" + ph + "}");
            }
            if (std::find(tpl.placeholders.begin(), tpl.placeholders.end(), ph) ==
                tpl.placeholders.end()) {
                tpl.placeholders.push_back(ph);
            }
            pos = end + 1;
        } else {
            ++pos;
        }
    }
    return tpl;
}

const PromptTemplate& builtin_template(TemplateName name) {
    static const PromptTemplate pairwise =
        make_template(TemplateName::pairwise_discriminate, kPairwiseBody);
    static const PromptTemplate aggregate =
        make_template(TemplateName::aggregate_decision, kAggregateBody);
    static const PromptTemplate pair_adj =
        make_template(TemplateName::pair_adjudicator, kPairAdjudicatorBody);
    switch (name) {
        case TemplateName::pairwise_discriminate: return pairwise;
        case TemplateName::aggregate_decision: return aggregate;
        case TemplateName::pair_adjudicator: return pair_adj;
    }
    return pairwise;
}

PromptTemplate load_template_file(TemplateName name, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open template: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return make_template(name, buf.str());
}

std::string render_prompt(const PromptTemplate& tpl,
                          const std::map<std::string, std::string>& bindings) {
    for (const auto& ph : tpl.placeholders) {
        if (!bindings.count(ph)) {
            throw ValidationError(std::string(template_name_str(tpl.name)) +
                                  ": missing binding for {" + ph + "}");
        }
    }
    std::string out;
    out.reserve(tpl.body.size());
    std::size_t pos = 0;
    while (pos < tpl.body.size()) {
        std::size_t brace = tpl.body.find('{', pos);
        if (brace == std::string::npos) {
            out.append(tpl.body, pos, std::string::npos);
            break;
        }
        out.append(tpl.body, pos, brace - pos);
        std::size_t end = brace + 1;
        while (end < tpl.body.size() && placeholder_char(tpl.body[end])) {
            ++end;
        }
        if (end < tpl.body.size() && tpl.body[end] == '}' && end > brace + 1 &&
            whitelisted(std::string_view(tpl.body).substr(brace + 1, end - brace - 1))) {
            out.append(bindings.at(tpl.body.substr(brace + 1, end - brace - 1)));
            pos = end + 1;
        } else {
            out.push_back('{');
            pos = brace + 1;
        }
    }
    return out;
}

PromptSet PromptSet::builtin() {
    return {builtin_template(TemplateName::pairwise_discriminate),
            builtin_template(TemplateName::aggregate_decision),
            builtin_template(TemplateName::pair_adjudicator)};
}

const PromptTemplate& PromptSet::get(TemplateName name) const {
    switch (name) {
        case TemplateName::pairwise_discriminate: return pairwise;
        case TemplateName::aggregate_decision: return aggregate;
        case TemplateName::pair_adjudicator: return pair_adj;
    }
    return pairwise;
}

}  // namespace dtk
