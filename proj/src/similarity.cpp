#include "tscs/similarity.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace tscs {

Alpha::Alpha(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0))
        throw std::invalid_argument("alpha must lie in [0,1]");
}

PositionalTermMap positional_map(const ProcessedDocument& doc) {
    PositionalTermMap map;
    for (int pos = 0; pos < static_cast<int>(doc.terms.size()); pos++)
        map[doc.terms[pos]].push_back(pos);
    return map;
}

SpatialDifference spatial_difference(std::span<const int> positions_i,
                                     std::span<const int> positions_j) {
    SpatialDifference sd;
    sd.matched = static_cast<std::int64_t>(std::min(positions_i.size(), positions_j.size()));
    for (std::int64_t k = 0; k < sd.matched; k++) {
        int pi = positions_i[k];
        int pj = positions_j[k];
        int den = pi + pj;
        if (den != 0) sd.sum += static_cast<double>(std::abs(pi - pj)) / den;
    }
    return sd;
}

TssScore tss(const PositionalTermMap& map_i, const PositionalTermMap& map_j) {
    TssScore result;
    // Merge join over the sorted maps; iterating common terms in lexical
    // order makes the floating-point sum independent of argument order.
    auto it_i = map_i.begin();
    auto it_j = map_j.begin();
    while (it_i != map_i.end() && it_j != map_j.end()) {
        if (it_i->first < it_j->first) {
            ++it_i;
        } else if (it_j->first < it_i->first) {
            ++it_j;
        } else {
            SpatialDifference sd = spatial_difference(it_i->second, it_j->second);
            result.spatial_sum += sd.sum;
            result.lambda += sd.matched;
            ++it_i;
            ++it_j;
        }
    }
    if (result.lambda == 0) return {};
    result.score = 1.0 - result.spatial_sum / static_cast<double>(result.lambda);
    return result;
}

TssScore tss(const ProcessedDocument& doc_i, const ProcessedDocument& doc_j) {
    return tss(positional_map(doc_i), positional_map(doc_j));
}

TermVector term_vector(const ProcessedDocument& doc, const WeightingScheme& scheme) {
    if (scheme.kind == WeightKind::tfidf) {
        if (scheme.stats == nullptr || scheme.stats->doc_count < 1)
            throw std::invalid_argument("tfidf weighting requires corpus stats with N >= 1");
    }
    TermVector counts;
    for (const std::string& t : doc.terms) counts[t] += 1.0;
    if (scheme.kind == WeightKind::tfidf) {
        double n = static_cast<double>(scheme.stats->doc_count);
        for (auto& [term, weight] : counts)
            weight *= 1.0 + std::log(n / static_cast<double>(scheme.stats->df_floored(term)));
    }
    return counts;
}

double cosine(const TermVector& v_i, const TermVector& v_j) {
    if (v_i.empty() || v_j.empty()) return 0.0;
    double dot = 0.0;
    auto it_i = v_i.begin();
    auto it_j = v_j.begin();
    while (it_i != v_i.end() && it_j != v_j.end()) {
        if (it_i->first < it_j->first) {
            ++it_i;
        } else if (it_j->first < it_i->first) {
            ++it_j;
        } else {
            dot += it_i->second * it_j->second;
            ++it_i;
            ++it_j;
        }
    }
    double norm_i = 0.0;
    for (const auto& [term, w] : v_i) norm_i += w * w;
    double norm_j = 0.0;
    for (const auto& [term, w] : v_j) norm_j += w * w;
    if (norm_i == 0.0 || norm_j == 0.0) return 0.0;
    // sqrt(n_i * n_j) keeps identical vectors at exactly 1; the clamp guards
    // the upper bound for proportional vectors.
    return std::min(1.0, dot / std::sqrt(norm_i * norm_j));
}

double combine(double cosine_value, double tss_value, Alpha alpha) {
    double a = alpha.value();
    return a * cosine_value + (1.0 - a) * tss_value;
}

SimilarityResult tscs(const ProcessedDocument& doc_i, const ProcessedDocument& doc_j,
                      Alpha alpha, const WeightingScheme& scheme) {
    SimilarityResult r;
    TssScore ts = tss(doc_i, doc_j);
    r.tss = ts.score;
    r.lambda = ts.lambda;
    r.spatial_sum = ts.spatial_sum;
    r.cosine = cosine(term_vector(doc_i, scheme), term_vector(doc_j, scheme));
    r.tscs = combine(r.cosine, r.tss, alpha);
    r.degenerate = doc_i.terms.empty() && doc_j.terms.empty();
    return r;
}

CorpusStats pair_stats(const ProcessedDocument& doc_i, const ProcessedDocument& doc_j) {
    CorpusStats stats;
    stats.doc_count = 2;
    for (const ProcessedDocument* doc : {&doc_i, &doc_j}) {
        std::map<std::string, bool> seen;
        for (const std::string& t : doc->terms) {
            if (!seen[t]) {
                seen[t] = true;
                stats.df[t]++;
            }
        }
    }
    return stats;
}

}  // namespace tscs
