#include "dtk/triad.hpp"

#include <algorithm>
#include <cmath>

#include "dtk/errors.hpp"

namespace dtk {

const char* role_name(TriadRole role) {
    switch (role) {
        case TriadRole::anchor: return "anchor";
        case TriadRole::hard_negative: return "hard_negative";
        case TriadRole::boundary_probe: return "boundary_probe";
    }
    return "?";
}

const TriadMember* Triad::member(TriadRole role) const {
    for (const auto& m : members) {
        if (m.role == role) {
            return &m;
        }
    }
    return nullptr;
}

std::vector<std::size_t> gate_candidates(const ReferenceBank& bank,
                                         const std::optional<std::string>& modality,
                                         const std::vector<ModalityKeywords>& table,
                                         bool* gate_fell_back) {
    if (gate_fell_back) {
        *gate_fell_back = false;
    }
    std::vector<std::size_t> all(bank.entries.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    if (!modality) {
        return all;
    }
    const std::vector<std::string>* keywords = nullptr;
    for (const auto& row : table) {
        if (row.modality == *modality) {
            keywords = &row.keywords;
            break;
        }
    }
    if (!keywords) {
        // Unknown tag: nothing can match, fall back to the full bank.
        if (gate_fell_back) {
            *gate_fell_back = true;
        }
        return all;
    }
    std::vector<std::size_t> gated;
    for (std::size_t i = 0; i < bank.entries.size(); ++i) {
        const std::string& caption = bank.entries[i].caption;
        for (const auto& kw : *keywords) {
            if (contains_keyword(caption, kw)) {
                gated.push_back(i);
                break;
            }
        }
    }
    if (gated.empty()) {
        if (gate_fell_back) {
            *gate_fell_back = true;
        }
        return all;
    }
    return gated;
}

TriadMember select_anchor(const std::vector<RankedEntry>& ranked_pool) {
    if (ranked_pool.empty()) {
        throw ValidationError("select_anchor: empty pool");
    }
    const RankedEntry& top = ranked_pool.front();
    TriadMember m;
    m.entry_id = top.entry->id;
    m.doc_id = top.entry->doc_id;
    m.bank_index = top.bank_index;
    m.role = TriadRole::anchor;
    m.similarity_to_query = top.similarity;
    m.rank = top.rank;
    return m;
}

namespace {

struct BandCandidates {
    std::vector<const RankedEntry*> entries;
    bool expanded = false;
    bool doc_relaxed = false;
    bool exhausted = false;
};

// Walk the rank band, widening it symmetrically (lower bound halves toward 2,
// upper bound doubles toward the pool size) until an unselected candidate
// exists or the whole pool minus the selected entries has been covered.
// Within the band, candidates from unseen documents are preferred; when none
// exist the document constraint is relaxed.
BandCandidates collect_band_candidates(const std::vector<RankedEntry>& pool,
                                       std::pair<int, int> band,
                                       const std::unordered_set<std::string>& selected_ids,
                                       const std::unordered_set<std::string>& selected_docs) {
    const int pool_size = static_cast<int>(pool.size());
    BandCandidates out;
    long long lo = band.first;
    long long hi = band.second;
    bool first_attempt = true;

    while (true) {
        std::vector<const RankedEntry*> in_band;
        if (lo <= pool_size) {
            int from = static_cast<int>(lo);
            int to = static_cast<int>(std::min<long long>(hi, pool_size));
            for (int r = from; r <= to; ++r) {
                const RankedEntry& e = pool[static_cast<std::size_t>(r - 1)];
                if (!selected_ids.count(e.entry->id)) {
                    in_band.push_back(&e);
                }
            }
        }
        if (!in_band.empty()) {
            out.expanded = !first_attempt;
            std::vector<const RankedEntry*> distinct_doc;
            for (const RankedEntry* e : in_band) {
                if (!selected_docs.count(e->entry->doc_id)) {
                    distinct_doc.push_back(e);
                }
            }
            if (distinct_doc.empty()) {
                out.doc_relaxed = true;
                out.entries = std::move(in_band);
            } else {
                out.entries = std::move(distinct_doc);
            }
            return out;
        }
        if (lo <= 2 && hi >= pool_size) {
            out.exhausted = true;
            return out;
        }
        lo = std::max<long long>(2, (lo + 1) / 2);
        hi = std::min<long long>(pool_size, hi * 2);
        first_attempt = false;
    }
}

TriadMember make_member(const RankedEntry& e, TriadRole role, const BandCandidates& band) {
    TriadMember m;
    m.entry_id = e.entry->id;
    m.doc_id = e.entry->doc_id;
    m.bank_index = e.bank_index;
    m.role = role;
    m.similarity_to_query = e.similarity;
    m.rank = e.rank;
    if (band.expanded) {
        m.fallbacks.push_back(kFallbackBandExpanded);
    }
    if (band.doc_relaxed) {
        m.fallbacks.push_back(kFallbackDocRelaxed);
    }
    return m;
}

}  // namespace

TriadMember select_hard_negative(const ReferenceBank& bank,
                                 const std::vector<RankedEntry>& ranked_pool,
                                 const TriadMember& anchor,
                                 std::pair<int, int> band) {
    std::unordered_set<std::string> selected_ids{anchor.entry_id};
    std::unordered_set<std::string> selected_docs{anchor.doc_id};
    BandCandidates cands = collect_band_candidates(ranked_pool, band, selected_ids, selected_docs);
    if (cands.exhausted) {
        throw ValidationError("select_hard_negative: candidate pool exhausted");
    }
    const RankedEntry* best = nullptr;
    double best_key = 0.0;
    for (const RankedEntry* e : cands.entries) {
        double key = std::fabs(bank.entry_cosine(e->bank_index, anchor.bank_index));
        if (!best || key < best_key || (key == best_key && e->entry->id < best->entry->id)) {
            best = e;
            best_key = key;
        }
    }
    return make_member(*best, TriadRole::hard_negative, cands);
}

TriadMember select_boundary_probe(const ReferenceBank& bank,
                                  const std::vector<RankedEntry>& ranked_pool,
                                  const TriadMember& anchor,
                                  const std::vector<TriadMember>& already_selected,
                                  const QueryContext& ctx,
                                  std::pair<int, int> band,
                                  const std::unordered_set<std::string>& stopwords) {
    std::unordered_set<std::string> selected_ids;
    std::unordered_set<std::string> selected_docs;
    for (const auto& m : already_selected) {
        selected_ids.insert(m.entry_id);
        selected_docs.insert(m.doc_id);
    }
    BandCandidates cands = collect_band_candidates(ranked_pool, band, selected_ids, selected_docs);
    if (cands.exhausted) {
        throw ValidationError("select_boundary_probe: candidate pool exhausted");
    }
    const RankedEntry* best = nullptr;
    ScoreBreakdown best_breakdown;
    for (const RankedEntry* e : cands.entries) {
        ScoreBreakdown sb;
        sb.kappa = lexical_overlap(e->entry->caption, ctx.question_text, stopwords);
        sb.s_xr = e->similarity;
        sb.s_rr1 = bank.entry_cosine(e->bank_index, anchor.bank_index);
        sb.score = static_cast<double>(sb.kappa + 1) * sb.s_xr * (1.0 - sb.s_rr1);
        if (!best || sb.score > best_breakdown.score ||
            (sb.score == best_breakdown.score && e->entry->id < best->entry->id)) {
            best = e;
            best_breakdown = sb;
        }
    }
    TriadMember m = make_member(*best, TriadRole::boundary_probe, cands);
    m.score_breakdown = best_breakdown;
    return m;
}

Triad select_triad(const ReferenceBank& bank, const QueryContext& ctx,
                   const SelectionConfig& config) {
    if (bank.entries.empty()) {
        throw ValidationError("select_triad: empty bank");
    }

    Triad triad;
    triad.query_id = ctx.query_id;
    triad.modality =
        detect_modality(ctx.question_text, ctx.option_a, ctx.option_b, config.modality_table);

    bool gate_fell_back = false;
    std::vector<std::size_t> pool =
        gate_candidates(bank, triad.modality, config.modality_table, &gate_fell_back);
    if (gate_fell_back) {
        triad.fallbacks.push_back(kFallbackModalityGateEmpty);
    }
    triad.pool_size = pool.size();

    std::vector<RankedEntry> ranked = rank_by_similarity(bank, pool, ctx.query_embedding);

    triad.members.push_back(select_anchor(ranked));

    try {
        triad.members.push_back(select_hard_negative(bank, ranked, triad.members[0],
                                                     config.band_hard_negative));
    } catch (const ValidationError&) {
        triad.fallbacks.push_back(std::string("missing:") + role_name(TriadRole::hard_negative));
        return triad;
    }

    try {
        triad.members.push_back(select_boundary_probe(bank, ranked, triad.members[0],
                                                      triad.members, ctx,
                                                      config.band_boundary_probe,
                                                      config.stopwords));
    } catch (const ValidationError&) {
        triad.fallbacks.push_back(std::string("missing:") + role_name(TriadRole::boundary_probe));
    }
    return triad;
}

}  // namespace dtk
