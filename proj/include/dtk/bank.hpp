#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dtk/embedding.hpp"

namespace dtk {

struct BankEntry {
    std::string id;
    std::string doc_id;
    std::string caption;
    std::optional<std::string> modality;
    Embedding embedding;
    double norm = 0.0;      // cached at load
    std::size_t line = 0;   // manifest line, for error messages
};

struct BankProvenance {
    std::string manifest_path;
    std::string manifest_sha256;
    std::string embeddings_sha256;  // empty when embeddings are inline
};

struct ReferenceBank {
    std::vector<BankEntry> entries;
    std::size_t dimension = 0;
    BankProvenance provenance;

    std::size_t size() const { return entries.size(); }

    // Cosine between two retained entries, using the cached norms.
    double entry_cosine(std::size_t i, std::size_t j) const;

    // Cosine between entry i and an external query vector.
    double query_cosine(std::size_t i, std::span<const float> query, double query_norm) const;
};

struct DroppedDuplicate {
    std::string dropped_id;
    std::string against_id;
    double similarity;
};

// JSON-Lines manifest; embeddings either inline per record or as row indices
// into the binary matrix at embeddings_path. Entries come back in manifest
// order, not deduplicated.
ReferenceBank load_bank(const std::string& manifest_path,
                        const std::optional<std::string>& embeddings_path = std::nullopt);

// Greedy single pass in manifest order: an entry is retained iff its
// similarity to every already-retained entry is <= tau_dup.
std::pair<ReferenceBank, std::vector<DroppedDuplicate>> deduplicate(const ReferenceBank& bank,
                                                                    double tau_dup);

struct RankedEntry {
    std::size_t bank_index;     // index into the bank this ranking was built from
    const BankEntry* entry;
    double similarity;
    int rank;                   // 1-indexed, 1 = most similar
};

// Descending similarity, ties broken by ascending entry id.
std::vector<RankedEntry> rank_by_similarity(const ReferenceBank& bank,
                                            const std::vector<std::size_t>& pool,
                                            std::span<const float> query);
std::vector<RankedEntry> rank_by_similarity(const ReferenceBank& bank,
                                            std::span<const float> query);

// Binary matrix file: "DTBANK01", u32 count, u32 dim, count*dim f32, all
// little-endian, row-major.
struct EmbeddingMatrix {
    std::uint32_t count = 0;
    std::uint32_t dim = 0;
    std::vector<float> data;

    std::span<const float> row(std::size_t i) const {
        return {data.data() + i * dim, dim};
    }
};

EmbeddingMatrix read_embedding_matrix(const std::string& path);
void write_embedding_matrix(const std::string& path, std::uint32_t count, std::uint32_t dim,
                            std::span<const float> data);

}  // namespace dtk
