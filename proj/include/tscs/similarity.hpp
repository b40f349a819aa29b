#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tscs/pipeline.hpp"
#include "tscs/stats.hpp"

namespace tscs {

/// Per-term occurrence positions of one document. For each term the k-th
/// entry is the ordinal position of its k-th instance, so sequences are
/// strictly increasing and the union of all positions is 0..n-1.
using PositionalTermMap = std::map<std::string, std::vector<int>>;

/// Sparse term-weight vector (no zero entries stored).
using TermVector = std::map<std::string, double>;

enum class WeightKind { tf, tfidf };

/// Term-weighting scheme for cosine similarity. tfidf carries a non-owning
/// reference to corpus statistics that must outlive the scheme.
struct WeightingScheme {
    WeightKind kind = WeightKind::tf;
    const CorpusStats* stats = nullptr;

    static WeightingScheme tf() { return {WeightKind::tf, nullptr}; }
    static WeightingScheme tfidf(const CorpusStats& s) { return {WeightKind::tfidf, &s}; }
};

/// Interpolation weight between cosine (alpha=1) and positional similarity
/// (alpha=0). Construction validates the [0,1] range.
class Alpha {
public:
    Alpha() = default;
    explicit Alpha(double value);
    double value() const { return value_; }

private:
    double value_ = 0.5;
};

struct SpatialDifference {
    double sum = 0.0;          // sum of |p_i - p_j| / (p_i + p_j) over matched instances
    std::int64_t matched = 0;  // min of the two instance counts
};

struct TssScore {
    double score = 0.0;
    std::int64_t lambda = 0;  // matched instance pairs over all common terms
    double spatial_sum = 0.0;
};

struct SimilarityResult {
    double cosine = 0.0;
    double tss = 0.0;
    double tscs = 0.0;
    std::int64_t lambda = 0;
    double spatial_sum = 0.0;
    bool degenerate = false;  // both documents empty after preprocessing
};

/// Group the positions of each term, in occurrence order.
PositionalTermMap positional_map(const ProcessedDocument& doc);

/// Spatial difference of one term's instance positions in two documents.
/// The k-th instance is paired with the k-th instance; surplus instances on
/// either side are ignored. A 0/0 quotient (both instances at position 0)
/// counts as 0.
SpatialDifference spatial_difference(std::span<const int> positions_i,
                                     std::span<const int> positions_j);

/// Positional similarity: 1 - (sum of spatial differences) / lambda, in
/// [0,1]. Documents with no common term (lambda = 0) score 0.
TssScore tss(const PositionalTermMap& map_i, const PositionalTermMap& map_j);
TssScore tss(const ProcessedDocument& doc_i, const ProcessedDocument& doc_j);

/// Term weights for a document: raw counts (tf) or count * (1 + ln(N/df))
/// with df floored at 1 (tfidf). tfidf requires stats with doc_count >= 1.
TermVector term_vector(const ProcessedDocument& doc, const WeightingScheme& scheme);

/// Cosine of two sparse vectors, in [0,1]; 0 when either vector is empty.
double cosine(const TermVector& v_i, const TermVector& v_j);

/// Weighted combination alpha * cosine + (1 - alpha) * tss. alpha=1 equals
/// the cosine value bit-for-bit, alpha=0 equals the tss value.
double combine(double cosine_value, double tss_value, Alpha alpha);

/// Full similarity bundle for a document pair.
SimilarityResult tscs(const ProcessedDocument& doc_i, const ProcessedDocument& doc_j,
                      Alpha alpha, const WeightingScheme& scheme);

/// Per-pair corpus statistics: treats the two documents as a 2-document
/// corpus. This is what tfidf weighting falls back to when no external
/// corpus is supplied.
CorpusStats pair_stats(const ProcessedDocument& doc_i, const ProcessedDocument& doc_j);

}  // namespace tscs
