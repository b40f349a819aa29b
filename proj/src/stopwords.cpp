#include "tscs/pipeline.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tscs {
namespace {

// Classic 127-word English list. Kept as single alphanumeric tokens so that
// entries line up with the tokenizer ("don't" arrives as "don", "t").
constexpr const char* kDefaultStopwords =
    "i me my myself we our ours ourselves you your yours yourself yourselves "
    "he him his himself she her hers herself it its itself they them their "
    "theirs themselves what which who whom this that these those am is are "
    "was were be been being have has had having do does did doing a an the "
    "and but if or because as until while of at by for with about against "
    "between into through during before after above below to from up down in "
    "out on off over under again further then once here there when where why "
    "how all any both each few more most other some such no nor not only own "
    "same so than too very s t can will just don should now";

std::string to_lower_ascii(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    return s;
}

}  // namespace

const std::unordered_set<std::string>& default_stopwords() {
    static const std::unordered_set<std::string> words = [] {
        std::unordered_set<std::string> set;
        std::istringstream in(kDefaultStopwords);
        std::string w;
        while (in >> w) set.insert(w);
        return set;
    }();
    return words;
}

std::unordered_set<std::string> load_stopword_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open stop-word file: " + path.string());
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string w;
        while (fields >> w) words.insert(to_lower_ascii(std::move(w)));
    }
    return words;
}

}  // namespace tscs
