#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tscs/corpus.hpp"
#include "tscs/eval.hpp"
#include "tscs/pipeline.hpp"
#include "tscs/similarity.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliConfig {
    double alpha = 0.5;
    double threshold = 0.5;
    std::string weighting = "tf";
    std::string stopwords_path;
    bool no_stem = false;
    std::string format = "table";
    int threads = 0;
};

void add_common_options(CLI::App* cmd, CliConfig& cfg, const std::string& default_format) {
    cfg.format = default_format;
    cmd->add_option("--alpha", cfg.alpha, "Weight of the cosine component, in [0,1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--threshold", cfg.threshold, "Paraphrase decision threshold, in [0,1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    cmd->add_option("--weighting", cfg.weighting, "Term weighting for cosine")
        ->check(CLI::IsMember({"tf", "tfidf"}))
        ->capture_default_str();
    cmd->add_option("--stopwords", cfg.stopwords_path,
                    "Stop-word override file (one token per line, # comments)");
    cmd->add_flag("--no-stem", cfg.no_stem, "Disable Porter stemming");
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
}

tscs::PipelineConfig make_pipeline_config(const CliConfig& cfg) {
    tscs::PipelineConfig config;
    if (!cfg.stopwords_path.empty())
        config.stopwords = tscs::load_stopword_file(cfg.stopwords_path);
    if (cfg.no_stem) config.stemming = tscs::StemmingMode::none;
    return config;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read error on file: " + path.string());
    return text.str();
}

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

json result_to_json(const tscs::SimilarityResult& r) {
    return {{"cosine", r.cosine},   {"tss", r.tss},
            {"tscs", r.tscs},       {"lambda", r.lambda},
            {"spatial_sum", r.spatial_sum}, {"degenerate", r.degenerate}};
}

void print_result(const tscs::SimilarityResult& r, const std::string& format) {
    if (format == "json") {
        std::cout << result_to_json(r).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "cosine,tss,tscs,lambda,spatial_sum\n"
                  << tscs::format_double(r.cosine) << ',' << tscs::format_double(r.tss) << ','
                  << tscs::format_double(r.tscs) << ',' << r.lambda << ','
                  << tscs::format_double(r.spatial_sum) << "\n";
    } else {
        std::cout << "cosine  " << fixed4(r.cosine) << "\n"
                  << "tss     " << fixed4(r.tss) << "\n"
                  << "tscs    " << fixed4(r.tscs) << "\n"
                  << "lambda  " << r.lambda << "\n";
        if (r.degenerate) std::cout << "note    both documents empty after preprocessing\n";
    }
}

int cmd_sim(const fs::path& file_a, const fs::path& file_b, const CliConfig& cfg) {
    tscs::PipelineConfig config = make_pipeline_config(cfg);
    tscs::ParaphrasePair pair{"cli", read_file(file_a), read_file(file_b), std::nullopt};
    tscs::WeightingScheme scheme =
        cfg.weighting == "tfidf" ? tscs::WeightingScheme{tscs::WeightKind::tfidf, nullptr}
                                 : tscs::WeightingScheme::tf();
    tscs::SimilarityResult r =
        tscs::to_result(tscs::score_pair(pair, scheme, config), tscs::Alpha(cfg.alpha));
    print_result(r, cfg.format);
    return 0;
}

int cmd_matrix(const fs::path& dir, const CliConfig& cfg) {
    tscs::PipelineConfig config = make_pipeline_config(cfg);
    tscs::DirectoryLoadReport report;
    tscs::Corpus corpus = tscs::load_directory(dir, config, &report);
    for (const std::string& msg : report.skipped) std::cerr << "skipped: " << msg << "\n";
    if (corpus.size() == 0)
        throw std::runtime_error("no readable *.txt documents in " + dir.string());

    tscs::WeightingScheme scheme = cfg.weighting == "tfidf"
                                       ? tscs::WeightingScheme::tfidf(corpus.stats())
                                       : tscs::WeightingScheme::tf();
    tscs::SimilarityMatrix m =
        tscs::pairwise_matrix(corpus, tscs::Alpha(cfg.alpha), scheme, cfg.threads);

    const std::size_t n = m.size();
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < n; i++) {
            json row = json::array();
            for (std::size_t j = 0; j < n; j++) row.push_back(m.at(i, j).tscs);
            rows.push_back(row);
        }
        std::cout << json{{"ids", m.ids}, {"tscs", rows}}.dump() << "\n";
        return 0;
    }
    const bool table = cfg.format == "table";
    std::cout << "id";
    for (const std::string& id : m.ids) std::cout << ',' << tscs::csv_escape(id);
    std::cout << "\n";
    for (std::size_t i = 0; i < n; i++) {
        std::cout << tscs::csv_escape(m.ids[i]);
        for (std::size_t j = 0; j < n; j++) {
            double v = m.at(i, j).tscs;
            std::cout << ',' << (table ? fixed4(v) : tscs::format_double(v));
        }
        std::cout << "\n";
    }
    return 0;
}

tscs::WeightingScheme eval_scheme(const CliConfig& cfg) {
    // tfidf without bound stats: each pair is its own 2-document corpus.
    return cfg.weighting == "tfidf" ? tscs::WeightingScheme{tscs::WeightKind::tfidf, nullptr}
                                    : tscs::WeightingScheme::tf();
}

std::vector<fs::path> to_paths(const std::vector<std::string>& strings) {
    return {strings.begin(), strings.end()};
}

int cmd_eval_paraphrase(const std::vector<std::string>& inputs,
                        const std::vector<std::string>& golds, double gold_cutoff,
                        bool use_gold_cutoff, const std::string& per_pair_path,
                        const CliConfig& cfg) {
    tscs::PipelineConfig config = make_pipeline_config(cfg);
    std::vector<tscs::ParaphrasePair> pairs =
        tscs::load_sts_dataset(to_paths(inputs), to_paths(golds));
    std::vector<tscs::PairOutcome> outcomes = tscs::evaluate_pairs(
        pairs, tscs::Alpha(cfg.alpha), cfg.threshold, eval_scheme(cfg), config, cfg.threads);
    tscs::EvalSummary summary = use_gold_cutoff
                                    ? tscs::summarize_against_gold(outcomes, gold_cutoff)
                                    : tscs::summarize(outcomes);

    if (!per_pair_path.empty()) {
        std::ofstream out(per_pair_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write per-pair file: " + per_pair_path);
        tscs::write_pair_csv(out, outcomes);
    }

    if (cfg.format == "json") {
        std::cout << json{{"detected", summary.detected},
                          {"total", summary.total},
                          {"rate", summary.rate}}
                         .dump()
                  << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "detected,total,rate\n"
                  << summary.detected << ',' << summary.total << ','
                  << tscs::format_double(summary.rate) << "\n";
    } else {
        std::cout << "detected " << summary.detected << " of " << summary.total
                  << "  rate " << fixed4(summary.rate) << "\n";
    }
    return 0;
}

int cmd_sweep_alpha(const std::vector<std::string>& inputs, std::vector<double> alphas,
                    const CliConfig& cfg) {
    tscs::PipelineConfig config = make_pipeline_config(cfg);
    if (alphas.empty()) alphas = tscs::default_alpha_grid();
    std::vector<tscs::ParaphrasePair> pairs = tscs::load_sts_dataset(to_paths(inputs));
    std::vector<tscs::SweepPoint> points = tscs::alpha_sweep(
        pairs, alphas, cfg.threshold, eval_scheme(cfg), config, cfg.threads);
    tscs::write_sweep_csv(std::cout, points);
    return 0;
}

int cmd_corpus_sensitivity(const fs::path& seed_dir, const fs::path& filler_dir,
                           const std::vector<std::int64_t>& sizes, const CliConfig& cfg) {
    tscs::PipelineConfig config = make_pipeline_config(cfg);

    auto seed = [&](const std::string& name) -> tscs::RawDocument {
        fs::path p = seed_dir / name;
        if (!fs::exists(p))
            throw std::runtime_error("seed directory must contain " + name +
                                     " (set1_a.txt set1_b.txt set2_a.txt set2_b.txt)");
        return {name, read_file(p)};
    };
    tscs::RawDocument s1a = seed("set1_a.txt"), s1b = seed("set1_b.txt");
    tscs::RawDocument s2a = seed("set2_a.txt"), s2b = seed("set2_b.txt");

    std::vector<tscs::RawDocument> fillers;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(filler_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& p : files) fillers.push_back({p.filename().string(), read_file(p)});

    tscs::WeightKind kind =
        cfg.weighting == "tfidf" ? tscs::WeightKind::tfidf : tscs::WeightKind::tf;
    tscs::SensitivityResult result = tscs::corpus_sensitivity(
        s1a, s1b, s2a, s2b, fillers, sizes, tscs::Alpha(cfg.alpha), kind, config);
    tscs::write_sensitivity_csv(std::cout, result);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positional document similarity: cosine, TSS and TSCS scoring, "
                 "pairwise matrices, and paraphrase evaluation"};
    app.require_subcommand(1);

    CliConfig cfg;

    std::string file_a, file_b;
    CLI::App* sim = app.add_subcommand("sim", "Score one document pair");
    sim->add_option("file_a", file_a, "First document")->required();
    sim->add_option("file_b", file_b, "Second document")->required();
    add_common_options(sim, cfg, "table");

    std::string matrix_dir;
    CLI::App* matrix = app.add_subcommand("matrix", "Pairwise TSCS matrix over a directory");
    matrix->add_option("dir", matrix_dir, "Directory of *.txt documents")->required();
    add_common_options(matrix, cfg, "csv");
    matrix->add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)");

    std::vector<std::string> eval_inputs, eval_golds;
    std::string per_pair_path;
    double gold_cutoff = 0.5;
    CLI::App* evalp = app.add_subcommand("eval-paraphrase", "Paraphrase detection over a dataset");
    evalp->add_option("inputs", eval_inputs, "Tab-separated sentence-pair files")->required();
    add_common_options(evalp, cfg, "table");
    evalp->add_option("--gold", eval_golds, "Gold score files, one per input");
    CLI::Option* cutoff_opt =
        evalp->add_option("--gold-cutoff", gold_cutoff,
                          "Score agreement against gold labels binarized at this cutoff");
    evalp->add_option("--per-pair", per_pair_path, "Write per-pair CSV to this file");
    evalp->add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)");

    std::vector<std::string> sweep_inputs;
    std::vector<double> alphas;
    CLI::App* sweep = app.add_subcommand("sweep-alpha", "Detection counts across an alpha grid");
    sweep->add_option("inputs", sweep_inputs, "Tab-separated sentence-pair files")->required();
    add_common_options(sweep, cfg, "csv");
    sweep->add_option("--alphas", alphas, "Alpha grid (default 0.0,0.1,...,1.0)")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)");

    std::string seed_dir, filler_dir;
    std::vector<std::int64_t> sizes;
    CLI::App* sens = app.add_subcommand("corpus-sensitivity",
                                        "Seed-pair similarity across growing corpus sizes");
    sens->add_option("seed_dir", seed_dir, "Directory with set1_a/set1_b/set2_a/set2_b .txt")
        ->required();
    sens->add_option("filler_dir", filler_dir, "Directory of filler *.txt documents")->required();
    sens->add_option("--sizes", sizes, "Increasing corpus sizes, each >= 4")
        ->delimiter(',')
        ->required();
    add_common_options(sens, cfg, "csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed()) return cmd_sim(file_a, file_b, cfg);
        if (matrix->parsed()) return cmd_matrix(matrix_dir, cfg);
        if (evalp->parsed())
            return cmd_eval_paraphrase(eval_inputs, eval_golds, gold_cutoff,
                                       cutoff_opt->count() > 0, per_pair_path, cfg);
        if (sweep->parsed()) return cmd_sweep_alpha(sweep_inputs, alphas, cfg);
        if (sens->parsed()) return cmd_corpus_sensitivity(seed_dir, filler_dir, sizes, cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
