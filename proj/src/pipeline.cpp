#include "tscs/pipeline.hpp"

#include "tscs/porter.hpp"

#include <cstdint>

namespace tscs {
namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Lowercase one codepoint: ASCII plus the Latin-1 letter block. Other
// scripts pass through unchanged.
std::uint32_t lower_codepoint(std::uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decode the next UTF-8 codepoint; malformed bytes are treated as Latin-1
// so that no input can fail tokenization.
std::uint32_t next_codepoint(std::string_view text, size_t& i) {
    unsigned char c = text[i];
    int extra = 0;
    std::uint32_t cp = c;
    if (c >= 0xF0) { extra = 3; cp = c & 0x07; }
    else if (c >= 0xE0) { extra = 2; cp = c & 0x0F; }
    else if (c >= 0xC0) { extra = 1; cp = c & 0x1F; }
    if (i + extra >= text.size()) { i++; return c; }
    for (int n = 1; n <= extra; n++) {
        unsigned char cont = text[i + n];
        if ((cont & 0xC0) != 0x80) { i++; return c; }
        cp = (cp << 6) | (cont & 0x3F);
    }
    i += extra + 1;
    return cp;
}

}  // namespace

PipelineConfig::PipelineConfig() : stopwords(default_stopwords()) {}

std::vector<std::string> tokenize(std::string_view text, const PipelineConfig& config) {
    std::vector<std::string> tokens;
    std::string current;
    size_t i = 0;
    while (i < text.size()) {
        unsigned char c = text[i];
        std::uint32_t cp;
        if (c < 0x80) {
            cp = c;
            i++;
        } else {
            cp = next_codepoint(text, i);
        }
        bool is_token_char = cp < 0x80 ? is_ascii_alnum(static_cast<unsigned char>(cp))
                                       : true;
        if (is_token_char) {
            append_utf8(current, config.lowercase ? lower_codepoint(cp) : cp);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const PipelineConfig& config) {
    std::erase_if(tokens, [&](const std::string& t) { return config.stopwords.contains(t); });
    return tokens;
}

std::string stem(const std::string& token, const PipelineConfig& config) {
    if (config.stemming == StemmingMode::none) return token;
    return porter_stem(token);
}

ProcessedDocument preprocess(const RawDocument& raw, const PipelineConfig& config) {
    ProcessedDocument doc;
    doc.id = raw.id;
    doc.terms = remove_stopwords(tokenize(raw.text, config), config);
    if (config.stemming == StemmingMode::porter) {
        for (std::string& t : doc.terms) t = porter_stem(t);
    }
    return doc;
}

}  // namespace tscs
