#include "tscs/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tscs/parallel.hpp"

namespace tscs {

namespace fs = std::filesystem;
using nlohmann::json;

void Corpus::add_document(const RawDocument& raw, const PipelineConfig& config) {
    add_processed(raw.text, preprocess(raw, config));
}

void Corpus::add_processed(std::string original_text, ProcessedDocument doc) {
    if (doc.id.empty())
        throw std::invalid_argument("document id must be non-empty");
    if (docs_.contains(doc.id))
        throw std::invalid_argument("duplicate document id: " + doc.id);
    std::set<std::string> distinct(doc.terms.begin(), doc.terms.end());
    for (const std::string& t : distinct) stats_.df[t]++;
    stats_.doc_count++;
    docs_.emplace(doc.id, Entry{std::move(original_text), std::move(doc)});
}

std::vector<std::string> Corpus::ids() const {
    std::vector<std::string> out;
    out.reserve(docs_.size());
    for (const auto& [id, entry] : docs_) out.push_back(id);
    return out;
}

const ProcessedDocument& Corpus::document(const std::string& id) const {
    auto it = docs_.find(id);
    if (it == docs_.end()) throw std::out_of_range("no such document: " + id);
    return it->second.doc;
}

const std::string& Corpus::original_text(const std::string& id) const {
    auto it = docs_.find(id);
    if (it == docs_.end()) throw std::out_of_range("no such document: " + id);
    return it->second.text;
}

CorpusStats Corpus::recompute_stats() const {
    CorpusStats stats;
    stats.doc_count = static_cast<std::int64_t>(docs_.size());
    for (const auto& [id, entry] : docs_) {
        std::set<std::string> distinct(entry.doc.terms.begin(), entry.doc.terms.end());
        for (const std::string& t : distinct) stats.df[t]++;
    }
    return stats;
}

Corpus load_directory(const fs::path& path, const PipelineConfig& config,
                      DirectoryLoadReport* report) {
    std::error_code ec;
    if (!fs::is_directory(path, ec))
        throw std::runtime_error("not a readable directory: " + path.string());

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    Corpus corpus;
    for (const fs::path& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            if (report) report->skipped.push_back("cannot open " + file.string());
            continue;
        }
        std::ostringstream text;
        text << in.rdbuf();
        if (in.bad()) {
            if (report) report->skipped.push_back("read error on " + file.string());
            continue;
        }
        corpus.add_document({file.filename().string(), text.str()}, config);
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write corpus file: " + path.string());
    json header = {{"tscs_corpus", 1}, {"doc_count", corpus.size()}};
    out << header.dump() << '\n';
    for (const std::string& id : corpus.ids()) {
        json record = {{"id", id},
                       {"text", corpus.original_text(id)},
                       {"terms", corpus.document(id).terms}};
        out << record.dump() << '\n';
    }
    if (!out)
        throw std::runtime_error("write failure on corpus file: " + path.string());
}

namespace {

[[noreturn]] void record_error(const fs::path& path, int line, const std::string& what) {
    throw std::runtime_error(path.string() + ": line " + std::to_string(line) + ": " + what);
}

}  // namespace

Corpus load_corpus(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open corpus file: " + path.string());

    Corpus corpus;
    std::string line;
    int line_no = 0;
    std::int64_t declared_count = -1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            record_error(path, line_no, std::string("malformed record: ") + e.what());
        }
        if (line_no == 1) {
            if (!record.contains("tscs_corpus") || !record.contains("doc_count") ||
                !record["doc_count"].is_number_integer())
                record_error(path, line_no, "missing corpus header");
            declared_count = record["doc_count"].get<std::int64_t>();
            continue;
        }
        if (!record.contains("id") || !record["id"].is_string() ||
            !record.contains("text") || !record["text"].is_string() ||
            !record.contains("terms") || !record["terms"].is_array())
            record_error(path, line_no, "record requires string id, string text, array terms");
        ProcessedDocument doc;
        doc.id = record["id"].get<std::string>();
        for (const auto& t : record["terms"]) {
            if (!t.is_string()) record_error(path, line_no, "terms must be strings");
            doc.terms.push_back(t.get<std::string>());
        }
        try {
            corpus.add_processed(record["text"].get<std::string>(), std::move(doc));
        } catch (const std::invalid_argument& e) {
            record_error(path, line_no, e.what());
        }
    }
    if (declared_count < 0)
        throw std::runtime_error(path.string() + ": missing corpus header");
    if (declared_count != corpus.size())
        throw std::runtime_error(path.string() + ": header declares " +
                                 std::to_string(declared_count) + " documents, found " +
                                 std::to_string(corpus.size()));
    return corpus;
}

namespace {

struct DocView {
    const ProcessedDocument* doc;
    PositionalTermMap positions;
    TermVector vector;
};

SimilarityResult score_pair(const DocView& a, const DocView& b, Alpha alpha) {
    SimilarityResult r;
    TssScore ts = tss(a.positions, b.positions);
    r.tss = ts.score;
    r.lambda = ts.lambda;
    r.spatial_sum = ts.spatial_sum;
    r.cosine = cosine(a.vector, b.vector);
    r.tscs = combine(r.cosine, r.tss, alpha);
    r.degenerate = a.doc->terms.empty() && b.doc->terms.empty();
    return r;
}

std::vector<DocView> make_views(const Corpus& corpus, const std::vector<std::string>& ids,
                                const WeightingScheme& scheme) {
    std::vector<DocView> views(ids.size());
    for (std::size_t i = 0; i < ids.size(); i++) {
        const ProcessedDocument& doc = corpus.document(ids[i]);
        views[i] = {&doc, positional_map(doc), term_vector(doc, scheme)};
    }
    return views;
}

}  // namespace

SimilarityMatrix pairwise_matrix_serial(const Corpus& corpus, Alpha alpha,
                                        const WeightingScheme& scheme) {
    if (corpus.size() == 0)
        throw std::invalid_argument("pairwise_matrix requires a non-empty corpus");
    SimilarityMatrix m;
    m.ids = corpus.ids();
    const std::size_t n = m.ids.size();
    std::vector<DocView> views = make_views(corpus, m.ids, scheme);
    m.cells.resize(n * n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i; j < n; j++) {
            SimilarityResult r = score_pair(views[i], views[j], alpha);
            m.cells[i * n + j] = r;
            m.cells[j * n + i] = r;
        }
    }
    return m;
}

SimilarityMatrix pairwise_matrix(const Corpus& corpus, Alpha alpha,
                                 const WeightingScheme& scheme, int threads) {
    if (corpus.size() == 0)
        throw std::invalid_argument("pairwise_matrix requires a non-empty corpus");
    SimilarityMatrix m;
    m.ids = corpus.ids();
    const std::size_t n = m.ids.size();
    std::vector<DocView> views = make_views(corpus, m.ids, scheme);
    m.cells.resize(n * n);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(n * (n + 1) / 2);
    for (std::uint32_t i = 0; i < n; i++)
        for (std::uint32_t j = i; j < n; j++) pairs.emplace_back(i, j);

    const std::int64_t total = static_cast<std::int64_t>(pairs.size());
    [[maybe_unused]] const int num_threads = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 64) num_threads(num_threads)
    for (std::int64_t p = 0; p < total; p++) {
        auto [i, j] = pairs[p];
        SimilarityResult r = score_pair(views[i], views[j], alpha);
        m.cells[i * n + j] = r;
        m.cells[j * n + i] = r;
    }
    return m;
}

}  // namespace tscs
