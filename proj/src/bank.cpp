#include "dtk/bank.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "dtk/digest.hpp"
#include "dtk/errors.hpp"

namespace dtk {

namespace {

constexpr char kMagic[8] = {'D', 'T', 'B', 'A', 'N', 'K', '0', '1'};

std::uint32_t read_u32_le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_u32_le(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xFF),
                          static_cast<unsigned char>((v >> 8) & 0xFF),
                          static_cast<unsigned char>((v >> 16) & 0xFF),
                          static_cast<unsigned char>((v >> 24) & 0xFF)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

[[noreturn]] void manifest_error(const std::string& path, std::size_t line, const std::string& msg) {
    throw ValidationError(path + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

double ReferenceBank::entry_cosine(std::size_t i, std::size_t j) const {
    const BankEntry& a = entries[i];
    const BankEntry& b = entries[j];
    double s = dot(a.embedding, b.embedding) / (a.norm * b.norm);
    return std::clamp(s, -1.0, 1.0);
}

double ReferenceBank::query_cosine(std::size_t i, std::span<const float> query,
                                   double query_norm) const {
    const BankEntry& e = entries[i];
    double s = dot(e.embedding, query) / (e.norm * query_norm);
    return std::clamp(s, -1.0, 1.0);
}

EmbeddingMatrix read_embedding_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open embeddings file: " + path);
    }
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kMagic, 8) != 0) {
        throw ValidationError(path + ": bad magic, expected DTBANK01");
    }
    EmbeddingMatrix m;
    m.count = read_u32_le(in);
    m.dim = read_u32_le(in);
    if (!in) {
        throw ValidationError(path + ": truncated header");
    }
    if (m.dim == 0) {
        throw ValidationError(path + ": dimension is zero");
    }
    std::size_t total = static_cast<std::size_t>(m.count) * m.dim;
    std::vector<unsigned char> raw(total * 4);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
        throw ValidationError(path + ": truncated matrix data");
    }
    m.data.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
        std::uint32_t bits = static_cast<std::uint32_t>(raw[4 * i]) |
                             (static_cast<std::uint32_t>(raw[4 * i + 1]) << 8) |
                             (static_cast<std::uint32_t>(raw[4 * i + 2]) << 16) |
                             (static_cast<std::uint32_t>(raw[4 * i + 3]) << 24);
        m.data[i] = std::bit_cast<float>(bits);
    }
    return m;
}

void write_embedding_matrix(const std::string& path, std::uint32_t count, std::uint32_t dim,
                            std::span<const float> data) {
    if (data.size() != static_cast<std::size_t>(count) * dim) {
        throw ValidationError("write_embedding_matrix: data size does not match count*dim");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw RuntimeFailure("cannot write embeddings file: " + path);
    }
    out.write(kMagic, 8);
    write_u32_le(out, count);
    write_u32_le(out, dim);
    for (float f : data) {
        std::uint32_t bits = std::bit_cast<std::uint32_t>(f);
        unsigned char b[4] = {static_cast<unsigned char>(bits & 0xFF),
                              static_cast<unsigned char>((bits >> 8) & 0xFF),
                              static_cast<unsigned char>((bits >> 16) & 0xFF),
                              static_cast<unsigned char>((bits >> 24) & 0xFF)};
        out.write(reinterpret_cast<const char*>(b), 4);
    }
    if (!out) {
        throw RuntimeFailure("short write: " + path);
    }
}

ReferenceBank load_bank(const std::string& manifest_path,
                        const std::optional<std::string>& embeddings_path) {
    std::ifstream in(manifest_path);
    if (!in) {
        throw ValidationError("cannot open manifest: " + manifest_path);
    }

    std::optional<EmbeddingMatrix> matrix;
    ReferenceBank bank;
    bank.provenance.manifest_path = manifest_path;

    std::unordered_map<std::string, std::size_t> seen_ids;  // id -> line
    enum class Style { unknown, inline_embedding, row_reference };
    Style style = Style::unknown;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            manifest_error(manifest_path, line_no, std::string("malformed record: ") + e.what());
        }
        if (!j.is_object()) {
            manifest_error(manifest_path, line_no, "record is not a JSON object");
        }

        BankEntry entry;
        entry.line = line_no;
        try {
            entry.id = j.at("id").get<std::string>();
            entry.doc_id = j.value("doc_id", std::string());
            entry.caption = j.value("caption", std::string());
            if (j.contains("modality") && !j["modality"].is_null()) {
                entry.modality = j["modality"].get<std::string>();
            }
        } catch (const nlohmann::json::exception& e) {
            manifest_error(manifest_path, line_no, std::string("malformed record: ") + e.what());
        }
        if (entry.id.empty()) {
            manifest_error(manifest_path, line_no, "empty id");
        }
        if (entry.doc_id.empty()) {
            // Synthetic document id so the distinct-document constraint
            // degrades to distinct-image.
            entry.doc_id = entry.id;
        }

        auto [it, inserted] = seen_ids.emplace(entry.id, line_no);
        if (!inserted) {
            manifest_error(manifest_path, line_no,
                           "duplicate id \"" + entry.id + "\" (first seen at line " +
                               std::to_string(it->second) + ")");
        }

        bool has_inline = j.contains("embedding");
        bool has_row = j.contains("row");
        if (has_inline == has_row) {
            manifest_error(manifest_path, line_no,
                           "record must carry exactly one of \"embedding\" or \"row\"");
        }
        Style record_style = has_inline ? Style::inline_embedding : Style::row_reference;
        if (style == Style::unknown) {
            style = record_style;
        } else if (style != record_style) {
            manifest_error(manifest_path, line_no,
                           "manifest mixes inline embeddings and row references");
        }

        if (has_inline) {
            try {
                entry.embedding = j["embedding"].get<std::vector<float>>();
            } catch (const nlohmann::json::exception& e) {
                manifest_error(manifest_path, line_no, std::string("bad embedding: ") + e.what());
            }
        } else {
            if (!embeddings_path) {
                manifest_error(manifest_path, line_no,
                               "row reference used but no embeddings file was given");
            }
            if (!matrix) {
                matrix = read_embedding_matrix(*embeddings_path);
            }
            if (!j["row"].is_number_unsigned()) {
                manifest_error(manifest_path, line_no, "row must be a non-negative integer");
            }
            std::size_t row = j["row"].get<std::size_t>();
            if (row >= matrix->count) {
                manifest_error(manifest_path, line_no,
                               "row " + std::to_string(row) + " out of range (count " +
                                   std::to_string(matrix->count) + ")");
            }
            auto r = matrix->row(row);
            entry.embedding.assign(r.begin(), r.end());
        }

        if (entry.embedding.empty()) {
            manifest_error(manifest_path, line_no, "empty embedding");
        }
        if (bank.dimension == 0) {
            bank.dimension = entry.embedding.size();
        } else if (entry.embedding.size() != bank.dimension) {
            manifest_error(manifest_path, line_no,
                           "dimension mismatch: got " + std::to_string(entry.embedding.size()) +
                               ", expected " + std::to_string(bank.dimension));
        }
        if (!all_finite(entry.embedding)) {
            manifest_error(manifest_path, line_no, "non-finite embedding component");
        }
        entry.norm = norm(entry.embedding);
        if (entry.norm == 0.0) {
            manifest_error(manifest_path, line_no, "zero-norm embedding for id \"" + entry.id + "\"");
        }

        bank.entries.push_back(std::move(entry));
    }

    if (bank.entries.empty()) {
        throw ValidationError(manifest_path + ": manifest has no records");
    }

    bank.provenance.manifest_sha256 = sha256_file_hex(manifest_path);
    if (embeddings_path && style == Style::row_reference) {
        bank.provenance.embeddings_sha256 = sha256_file_hex(*embeddings_path);
    }
    return bank;
}

std::pair<ReferenceBank, std::vector<DroppedDuplicate>> deduplicate(const ReferenceBank& bank,
                                                                    double tau_dup) {
    if (!(tau_dup > 0.0 && tau_dup <= 1.0)) {
        throw ValidationError("tau_dup must be in (0, 1], got " + std::to_string(tau_dup));
    }
    ReferenceBank retained;
    retained.dimension = bank.dimension;
    retained.provenance = bank.provenance;
    std::vector<DroppedDuplicate> dropped;

    std::vector<std::size_t> kept_indices;
    for (std::size_t i = 0; i < bank.entries.size(); ++i) {
        bool keep = true;
        for (std::size_t kept : kept_indices) {
            double s = bank.entry_cosine(i, kept);
            if (s > tau_dup) {
                dropped.push_back({bank.entries[i].id, bank.entries[kept].id, s});
                keep = false;
                break;
            }
        }
        if (keep) {
            kept_indices.push_back(i);
            retained.entries.push_back(bank.entries[i]);
        }
    }
    return {std::move(retained), std::move(dropped)};
}

std::vector<RankedEntry> rank_by_similarity(const ReferenceBank& bank,
                                            const std::vector<std::size_t>& pool,
                                            std::span<const float> query) {
    if (pool.empty()) {
        throw ValidationError("rank_by_similarity: empty candidate pool");
    }
    if (query.size() != bank.dimension) {
        throw ValidationError("rank_by_similarity: query dimension " +
                              std::to_string(query.size()) + " does not match bank dimension " +
                              std::to_string(bank.dimension));
    }
    double qnorm = norm(query);
    if (qnorm == 0.0) {
        throw ValidationError("rank_by_similarity: zero-norm query");
    }

    std::vector<RankedEntry> ranked;
    ranked.reserve(pool.size());
    for (std::size_t idx : pool) {
        ranked.push_back({idx, &bank.entries[idx], bank.query_cosine(idx, query, qnorm), 0});
    }
    std::sort(ranked.begin(), ranked.end(), [](const RankedEntry& a, const RankedEntry& b) {
        if (a.similarity != b.similarity) {
            return a.similarity > b.similarity;
        }
        return a.entry->id < b.entry->id;
    });
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        ranked[i].rank = static_cast<int>(i + 1);
    }
    return ranked;
}

std::vector<RankedEntry> rank_by_similarity(const ReferenceBank& bank,
                                            std::span<const float> query) {
    std::vector<std::size_t> pool(bank.entries.size());
    for (std::size_t i = 0; i < pool.size(); ++i) {
        pool[i] = i;
    }
    return rank_by_similarity(bank, pool, query);
}

}  // namespace dtk
