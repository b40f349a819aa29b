#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tscs/pipeline.hpp"
#include "tscs/similarity.hpp"
#include "tscs/stats.hpp"

namespace tscs {

/// A collection of processed documents with document-frequency statistics
/// kept consistent with the contents. Mutation must be externally
/// serialized; read-only queries may run concurrently.
class Corpus {
public:
    /// Preprocess and insert a document. Throws std::invalid_argument on an
    /// empty or duplicate id.
    void add_document(const RawDocument& raw, const PipelineConfig& config);

    /// Insert an already processed document together with its original text.
    void add_processed(std::string original_text, ProcessedDocument doc);

    std::int64_t size() const { return static_cast<std::int64_t>(docs_.size()); }
    bool contains(const std::string& id) const { return docs_.contains(id); }

    /// Document ids in sorted order.
    std::vector<std::string> ids() const;

    const ProcessedDocument& document(const std::string& id) const;
    const std::string& original_text(const std::string& id) const;

    const CorpusStats& stats() const { return stats_; }

    /// Recount stats from scratch (for invariant checks).
    CorpusStats recompute_stats() const;

    bool operator==(const Corpus&) const = default;

private:
    struct Entry {
        std::string text;
        ProcessedDocument doc;
        bool operator==(const Entry&) const = default;
    };
    std::map<std::string, Entry> docs_;
    CorpusStats stats_;
};

struct DirectoryLoadReport {
    std::vector<std::string> skipped;  // one message per unreadable file
};

/// Load every *.txt file under path (non-recursive) as a document whose id
/// is the filename, in sorted filename order. Unreadable files are recorded
/// in the report and skipped. Throws std::runtime_error if path itself is
/// not a readable directory.
Corpus load_directory(const std::filesystem::path& path, const PipelineConfig& config,
                      DirectoryLoadReport* report = nullptr);

/// Persist a corpus as line-delimited JSON records (one header line, then
/// one document per line with id, original text and term sequence).
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

/// Load a corpus saved by save_corpus. Stats are recomputed from the term
/// sequences and cross-checked against the stored document count. Throws
/// std::runtime_error with the offending line number on malformed records.
Corpus load_corpus(const std::filesystem::path& path);

/// Symmetric pairwise similarity matrix in sorted-id order.
struct SimilarityMatrix {
    std::vector<std::string> ids;
    std::vector<SimilarityResult> cells;  // row-major, size() x size()

    std::size_t size() const { return ids.size(); }
    const SimilarityResult& at(std::size_t i, std::size_t j) const {
        return cells[i * ids.size() + j];
    }
};

/// OpenMP kernel: all document pairs are scored in parallel. threads <= 0
/// uses the OpenMP default.
SimilarityMatrix pairwise_matrix(const Corpus& corpus, Alpha alpha,
                                 const WeightingScheme& scheme, int threads = 0);

/// Serial reference implementation; must produce bit-identical cells.
SimilarityMatrix pairwise_matrix_serial(const Corpus& corpus, Alpha alpha,
                                        const WeightingScheme& scheme);

}  // namespace tscs
