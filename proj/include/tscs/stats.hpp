#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace tscs {

/// Document-frequency statistics over a corpus: how many documents contain
/// each term, out of doc_count in total. Backs IDF weighting.
struct CorpusStats {
    std::int64_t doc_count = 0;
    std::map<std::string, std::int64_t> df;

    /// df with a floor of 1, so out-of-corpus terms never divide by zero.
    std::int64_t df_floored(const std::string& term) const {
        auto it = df.find(term);
        return (it == df.end() || it->second < 1) ? 1 : it->second;
    }
};

}  // namespace tscs
