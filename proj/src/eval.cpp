#include "tscs/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "tscs/parallel.hpp"

namespace tscs {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void line_error(const fs::path& path, int line, const std::string& what) {
    throw std::runtime_error(path.string() + ": line " + std::to_string(line) + ": " + what);
}

void check_threshold(double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw std::invalid_argument("threshold must lie in [0,1]");
}

std::string chop_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::vector<ParaphrasePair> load_sts_dataset(const std::vector<fs::path>& input_paths,
                                             const std::vector<fs::path>& gold_paths) {
    if (!gold_paths.empty() && gold_paths.size() != input_paths.size())
        throw std::runtime_error("expected one gold file per input file");

    std::vector<ParaphrasePair> pairs;
    for (std::size_t f = 0; f < input_paths.size(); f++) {
        const fs::path& path = input_paths[f];
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open dataset file: " + path.string());

        const std::string filename = path.filename().string();
        std::size_t first_of_file = pairs.size();
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            line_no++;
            line = chop_cr(std::move(line));
            auto tab = line.find('\t');
            if (tab == std::string::npos)
                line_error(path, line_no, "expected two tab-separated sentences");
            if (line.find('\t', tab + 1) != std::string::npos)
                line_error(path, line_no, "expected exactly one tab");
            ParaphrasePair pair;
            pair.id = filename + ":" + std::to_string(line_no);
            pair.text_a = line.substr(0, tab);
            pair.text_b = line.substr(tab + 1);
            if (pair.text_a.empty() || pair.text_b.empty())
                line_error(path, line_no, "empty sentence");
            pairs.push_back(std::move(pair));
        }

        if (!gold_paths.empty()) {
            const fs::path& gold_path = gold_paths[f];
            std::ifstream gold_in(gold_path, std::ios::binary);
            if (!gold_in)
                throw std::runtime_error("cannot open gold file: " + gold_path.string());
            std::size_t index = first_of_file;
            int gold_line_no = 0;
            while (std::getline(gold_in, line)) {
                gold_line_no++;
                line = chop_cr(std::move(line));
                if (index >= pairs.size())
                    throw std::runtime_error(gold_path.string() + ": more gold scores than pairs in " +
                                             path.string());
                double value = 0.0;
                auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
                if (ec != std::errc{} || ptr != line.data() + line.size())
                    line_error(gold_path, gold_line_no, "expected one real number");
                pairs[index++].gold = value;
            }
            if (index != pairs.size())
                throw std::runtime_error(gold_path.string() + ": fewer gold scores than pairs in " +
                                         path.string());
        }
    }
    return pairs;
}

PairScore score_pair(const ParaphrasePair& pair, const WeightingScheme& scheme,
                     const PipelineConfig& config) {
    ProcessedDocument a = preprocess({pair.id + "#a", pair.text_a}, config);
    ProcessedDocument b = preprocess({pair.id + "#b", pair.text_b}, config);

    PairScore score;
    score.ts = tss(a, b);
    score.degenerate = a.terms.empty() && b.terms.empty();
    if (scheme.kind == WeightKind::tfidf && scheme.stats == nullptr) {
        CorpusStats stats = pair_stats(a, b);
        WeightingScheme bound = WeightingScheme::tfidf(stats);
        score.cosine = cosine(term_vector(a, bound), term_vector(b, bound));
    } else {
        score.cosine = cosine(term_vector(a, scheme), term_vector(b, scheme));
    }
    return score;
}

SimilarityResult to_result(const PairScore& score, Alpha alpha) {
    SimilarityResult r;
    r.cosine = score.cosine;
    r.tss = score.ts.score;
    r.tscs = combine(score.cosine, score.ts.score, alpha);
    r.lambda = score.ts.lambda;
    r.spatial_sum = score.ts.spatial_sum;
    r.degenerate = score.degenerate;
    return r;
}

bool detect_paraphrase(const ParaphrasePair& pair, Alpha alpha, double threshold,
                       const WeightingScheme& scheme, const PipelineConfig& config) {
    check_threshold(threshold);
    PairScore score = score_pair(pair, scheme, config);
    return combine(score.cosine, score.ts.score, alpha) >= threshold;
}

namespace {

std::vector<PairOutcome> assemble_outcomes(std::span<const ParaphrasePair> pairs,
                                           std::span<const PairScore> scores, Alpha alpha,
                                           double threshold) {
    std::vector<PairOutcome> outcomes(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); i++) {
        outcomes[i].id = pairs[i].id;
        outcomes[i].gold = pairs[i].gold;
        outcomes[i].result = to_result(scores[i], alpha);
        outcomes[i].detected = outcomes[i].result.tscs >= threshold;
    }
    return outcomes;
}

std::vector<PairScore> score_all_serial(std::span<const ParaphrasePair> pairs,
                                        const WeightingScheme& scheme,
                                        const PipelineConfig& config) {
    std::vector<PairScore> scores(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); i++)
        scores[i] = score_pair(pairs[i], scheme, config);
    return scores;
}

std::vector<PairScore> score_all(std::span<const ParaphrasePair> pairs,
                                 const WeightingScheme& scheme, const PipelineConfig& config,
                                 int threads) {
    std::vector<PairScore> scores(pairs.size());
    const std::int64_t n = static_cast<std::int64_t>(pairs.size());
    [[maybe_unused]] const int num_threads = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 16) num_threads(num_threads)
    for (std::int64_t i = 0; i < n; i++)
        scores[i] = score_pair(pairs[i], scheme, config);
    return scores;
}

std::vector<SweepPoint> sweep_from_scores(std::span<const PairScore> scores,
                                          std::span<const double> alphas, double threshold) {
    std::vector<SweepPoint> points;
    points.reserve(alphas.size());
    for (double a : alphas) {
        Alpha alpha(a);
        SweepPoint point;
        point.alpha = a;
        point.total = static_cast<std::int64_t>(scores.size());
        for (const PairScore& s : scores)
            if (combine(s.cosine, s.ts.score, alpha) >= threshold) point.detected++;
        point.rate = point.total == 0
                         ? 0.0
                         : static_cast<double>(point.detected) / static_cast<double>(point.total);
        points.push_back(point);
    }
    return points;
}

void check_sweep_args(std::span<const double> alphas, double threshold) {
    check_threshold(threshold);
    if (alphas.empty()) throw std::invalid_argument("alpha grid must be non-empty");
}

}  // namespace

std::vector<PairOutcome> evaluate_pairs(std::span<const ParaphrasePair> pairs, Alpha alpha,
                                        double threshold, const WeightingScheme& scheme,
                                        const PipelineConfig& config, int threads) {
    check_threshold(threshold);
    return assemble_outcomes(pairs, score_all(pairs, scheme, config, threads), alpha, threshold);
}

std::vector<PairOutcome> evaluate_pairs_serial(std::span<const ParaphrasePair> pairs, Alpha alpha,
                                               double threshold, const WeightingScheme& scheme,
                                               const PipelineConfig& config) {
    check_threshold(threshold);
    return assemble_outcomes(pairs, score_all_serial(pairs, scheme, config), alpha, threshold);
}

EvalSummary summarize(std::span<const PairOutcome> outcomes) {
    EvalSummary s;
    s.total = static_cast<std::int64_t>(outcomes.size());
    for (const PairOutcome& o : outcomes)
        if (o.detected) s.detected++;
    s.rate = s.total == 0 ? 0.0 : static_cast<double>(s.detected) / static_cast<double>(s.total);
    return s;
}

EvalSummary summarize_against_gold(std::span<const PairOutcome> outcomes, double cutoff) {
    EvalSummary s;
    s.total = static_cast<std::int64_t>(outcomes.size());
    for (const PairOutcome& o : outcomes) {
        if (!o.gold)
            throw std::runtime_error("pair " + o.id + " has no gold score");
        if (o.detected == (*o.gold >= cutoff)) s.detected++;
    }
    s.rate = s.total == 0 ? 0.0 : static_cast<double>(s.detected) / static_cast<double>(s.total);
    return s;
}

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 10; i++) grid.push_back(i / 10.0);
    return grid;
}

std::vector<SweepPoint> alpha_sweep(std::span<const ParaphrasePair> pairs,
                                    std::span<const double> alphas, double threshold,
                                    const WeightingScheme& scheme, const PipelineConfig& config,
                                    int threads) {
    check_sweep_args(alphas, threshold);
    return sweep_from_scores(score_all(pairs, scheme, config, threads), alphas, threshold);
}

std::vector<SweepPoint> alpha_sweep_serial(std::span<const ParaphrasePair> pairs,
                                           std::span<const double> alphas, double threshold,
                                           const WeightingScheme& scheme,
                                           const PipelineConfig& config) {
    check_sweep_args(alphas, threshold);
    return sweep_from_scores(score_all_serial(pairs, scheme, config), alphas, threshold);
}

SensitivityResult corpus_sensitivity(const RawDocument& seed1_a, const RawDocument& seed1_b,
                                     const RawDocument& seed2_a, const RawDocument& seed2_b,
                                     std::span<const RawDocument> fillers,
                                     std::span<const std::int64_t> sizes, Alpha alpha,
                                     WeightKind weighting, const PipelineConfig& config) {
    if (sizes.empty()) throw std::invalid_argument("sizes must be non-empty");
    for (std::size_t i = 0; i < sizes.size(); i++) {
        if (sizes[i] < 4)
            throw std::invalid_argument("sizes must be at least 4 (the seed documents)");
        if (i > 0 && sizes[i] <= sizes[i - 1])
            throw std::invalid_argument("sizes must be strictly increasing");
    }
    const std::int64_t max_fillers = sizes.back() - 4;
    if (max_fillers > static_cast<std::int64_t>(fillers.size()))
        throw std::runtime_error("insufficient filler documents: need " +
                                 std::to_string(max_fillers) + ", have " +
                                 std::to_string(fillers.size()));

    const ProcessedDocument a1 = preprocess(seed1_a, config);
    const ProcessedDocument b1 = preprocess(seed1_b, config);
    const ProcessedDocument a2 = preprocess(seed2_a, config);
    const ProcessedDocument b2 = preprocess(seed2_b, config);

    // The positional component never depends on the corpus.
    const double tss1 = tss(a1, b1).score;
    const double tss2 = tss(a2, b2).score;

    SensitivityResult result;
    for (std::int64_t target : sizes) {
        Corpus corpus;
        for (const RawDocument* seed : {&seed1_a, &seed1_b, &seed2_a, &seed2_b})
            corpus.add_document(*seed, config);
        for (std::int64_t i = 0; i < target - 4; i++)
            corpus.add_document(fillers[i], config);

        WeightingScheme scheme = weighting == WeightKind::tfidf
                                     ? WeightingScheme::tfidf(corpus.stats())
                                     : WeightingScheme::tf();
        double c1 = cosine(term_vector(a1, scheme), term_vector(b1, scheme));
        double c2 = cosine(term_vector(a2, scheme), term_vector(b2, scheme));
        result.cosine_rows.push_back({target, c1, c2});
        result.tscs_rows.push_back({target, combine(c1, tss1, alpha), combine(c2, tss2, alpha)});
    }
    return result;
}

double variation_range(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("variation_range requires values");
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    return *hi - *lo;
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> points) {
    out << "alpha,detected,total,rate\n";
    for (const SweepPoint& p : points)
        out << format_double(p.alpha) << ',' << p.detected << ',' << p.total << ','
            << format_double(p.rate) << '\n';
}

void write_sensitivity_csv(std::ostream& out, const SensitivityResult& result) {
    out << "corpus_size,tscs_set1,tscs_set2,cosine_set1,cosine_set2\n";
    for (std::size_t i = 0; i < result.tscs_rows.size(); i++) {
        const SensitivityRow& t = result.tscs_rows[i];
        const SensitivityRow& c = result.cosine_rows[i];
        out << t.corpus_size << ',' << format_double(t.sim_set1) << ','
            << format_double(t.sim_set2) << ',' << format_double(c.sim_set1) << ','
            << format_double(c.sim_set2) << '\n';
    }
}

void write_pair_csv(std::ostream& out, std::span<const PairOutcome> outcomes) {
    out << "id,gold,cosine,tss,tscs,lambda,detected\n";
    for (const PairOutcome& o : outcomes) {
        out << csv_escape(o.id) << ',' << (o.gold ? format_double(*o.gold) : "") << ','
            << format_double(o.result.cosine) << ',' << format_double(o.result.tss) << ','
            << format_double(o.result.tscs) << ',' << o.result.lambda << ','
            << (o.detected ? "true" : "false") << '\n';
    }
}

}  // namespace tscs
