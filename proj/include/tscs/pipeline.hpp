#pragma once

#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

namespace tscs {

/// Raw input document: an opaque id plus UTF-8 text.
struct RawDocument {
    std::string id;
    std::string text;
};

enum class StemmingMode { porter, none };

/// Immutable preprocessing configuration shared by all pipeline calls.
struct PipelineConfig {
    bool lowercase = true;
    std::unordered_set<std::string> stopwords;  // default-constructed -> built-in list
    StemmingMode stemming = StemmingMode::porter;

    PipelineConfig();
};

/// Document after tokenization, stop-word removal and stemming. The index
/// of a term in `terms` is its ordinal position (0-based, dense).
struct ProcessedDocument {
    std::string id;
    std::vector<std::string> terms;

    bool empty() const { return terms.empty(); }
    bool operator==(const ProcessedDocument&) const = default;
};

/// Built-in English stop-word list (127 single-token entries, matching an
/// alphanumeric-run tokenizer; possessive/contraction fragments appear as
/// the bare letters "s" and "t").
const std::unordered_set<std::string>& default_stopwords();

/// Parse a stop-word override file: UTF-8, one token per line, '#' starts a
/// comment, blank lines ignored. Entries are lowercased.
/// Throws std::runtime_error on I/O failure.
std::unordered_set<std::string> load_stopword_file(const std::filesystem::path& path);

/// Split text into maximal alphanumeric runs, lowercased when
/// config.lowercase. ASCII alphanumerics plus any non-ASCII codepoint count
/// as token characters; lowercasing covers ASCII and the Latin-1 letter
/// range.
std::vector<std::string> tokenize(std::string_view text, const PipelineConfig& config);

/// Drop tokens present in config.stopwords, preserving order.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const PipelineConfig& config);

/// Stem one token according to the configured mode.
std::string stem(const std::string& token, const PipelineConfig& config);

/// Full pipeline: tokenize, remove stop-words, stem. Ordinal positions are
/// the indices of the resulting term sequence, assigned after removal.
ProcessedDocument preprocess(const RawDocument& raw, const PipelineConfig& config);

}  // namespace tscs
