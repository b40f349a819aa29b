#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tscs/corpus.hpp"
#include "tscs/pipeline.hpp"
#include "tscs/similarity.hpp"

namespace tscs {

/// One sentence pair from a paraphrase dataset.
struct ParaphrasePair {
    std::string id;  // filename:lineNumber
    std::string text_a;
    std::string text_b;
    std::optional<double> gold;  // dataset-provided relatedness score
};

/// Load tab-separated sentence-pair files (two columns per line). When gold
/// paths are given they parallel the input paths, one real number per line,
/// aligned line-for-line. Pairs from multiple files are concatenated in the
/// order given. Throws std::runtime_error naming file and line on malformed
/// input, and on gold/input length mismatch.
std::vector<ParaphrasePair> load_sts_dataset(
    const std::vector<std::filesystem::path>& input_paths,
    const std::vector<std::filesystem::path>& gold_paths = {});

/// Raw cosine + positional scores of one pair, before any alpha is applied.
/// With tfidf weighting and no bound stats, the pair itself is treated as a
/// 2-document corpus.
struct PairScore {
    double cosine = 0.0;
    TssScore ts;
    bool degenerate = false;
};

PairScore score_pair(const ParaphrasePair& pair, const WeightingScheme& scheme,
                     const PipelineConfig& config);

SimilarityResult to_result(const PairScore& score, Alpha alpha);

/// True iff the combined similarity at this alpha reaches the threshold.
/// Threshold must lie in [0,1].
bool detect_paraphrase(const ParaphrasePair& pair, Alpha alpha, double threshold,
                       const WeightingScheme& scheme, const PipelineConfig& config);

struct PairOutcome {
    std::string id;
    std::optional<double> gold;
    SimilarityResult result;
    bool detected = false;
};

struct EvalSummary {
    std::int64_t detected = 0;
    std::int64_t total = 0;
    double rate = 0.0;  // detected / total
};

/// Score every pair at one alpha; OpenMP parallel over pairs, output in
/// input order. threads <= 0 uses the OpenMP default.
std::vector<PairOutcome> evaluate_pairs(std::span<const ParaphrasePair> pairs, Alpha alpha,
                                        double threshold, const WeightingScheme& scheme,
                                        const PipelineConfig& config, int threads = 0);
std::vector<PairOutcome> evaluate_pairs_serial(std::span<const ParaphrasePair> pairs,
                                               Alpha alpha, double threshold,
                                               const WeightingScheme& scheme,
                                               const PipelineConfig& config);

EvalSummary summarize(std::span<const PairOutcome> outcomes);

/// Accuracy against gold labels binarized at the cutoff: a pair counts when
/// detection agrees with gold >= cutoff. Throws if any pair lacks a gold
/// score.
EvalSummary summarize_against_gold(std::span<const PairOutcome> outcomes, double cutoff);

struct SweepPoint {
    double alpha = 0.0;
    std::int64_t detected = 0;
    std::int64_t total = 0;
    double rate = 0.0;
};

/// Default grid 0.0, 0.1, ..., 1.0.
std::vector<double> default_alpha_grid();

/// Detection counts across an alpha grid. Each pair is preprocessed and
/// scored once; the grid only re-weights the combination. OpenMP parallel
/// over pairs; deterministic.
std::vector<SweepPoint> alpha_sweep(std::span<const ParaphrasePair> pairs,
                                    std::span<const double> alphas, double threshold,
                                    const WeightingScheme& scheme, const PipelineConfig& config,
                                    int threads = 0);
std::vector<SweepPoint> alpha_sweep_serial(std::span<const ParaphrasePair> pairs,
                                           std::span<const double> alphas, double threshold,
                                           const WeightingScheme& scheme,
                                           const PipelineConfig& config);

struct SensitivityRow {
    std::int64_t corpus_size = 0;
    double sim_set1 = 0.0;
    double sim_set2 = 0.0;
};

struct SensitivityResult {
    std::vector<SensitivityRow> tscs_rows;
    std::vector<SensitivityRow> cosine_rows;
};

/// Corpus-size sensitivity study: for each target size, a corpus holding
/// both seed pairs plus that many filler documents is built, document
/// frequencies are recomputed, and the combined (at the given alpha) and
/// pure-cosine similarities of each seed pair are recorded. Sizes must be
/// increasing and start at 4 or more; throws std::runtime_error when the
/// fillers cannot reach the largest size.
SensitivityResult corpus_sensitivity(const RawDocument& seed1_a, const RawDocument& seed1_b,
                                     const RawDocument& seed2_a, const RawDocument& seed2_b,
                                     std::span<const RawDocument> fillers,
                                     std::span<const std::int64_t> sizes, Alpha alpha,
                                     WeightKind weighting, const PipelineConfig& config);

/// Largest minus smallest value of one similarity column. Rows must be
/// non-empty.
double variation_range(std::span<const double> values);

/// CSV emission. Headers are part of the output contract:
///   sweep:        alpha,detected,total,rate
///   sensitivity:  corpus_size,tscs_set1,tscs_set2,cosine_set1,cosine_set2
///   per-pair:     id,gold,cosine,tss,tscs,lambda,detected
void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points);
void write_sensitivity_csv(std::ostream& out, const SensitivityResult& result);
void write_pair_csv(std::ostream& out, std::span<const PairOutcome> outcomes);

/// Shortest round-trip decimal form of a double (full precision).
std::string format_double(double value);

/// RFC-4180 style field quoting, applied only when needed.
std::string csv_escape(const std::string& field);

}  // namespace tscs
