#include <focusrank/cli.hpp>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <focusrank/corpus.hpp>
#include <focusrank/embeddings.hpp>
#include <focusrank/pipeline.hpp>
#include <focusrank/runner.hpp>
#include <focusrank/synthetic.hpp>

namespace focusrank::cli {

namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

std::string read_all(std::istream &in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_input(const std::string &path, std::istream &in) {
    if (path == "-")
        return read_all(in);
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open " + path);
    return read_all(file);
}

std::string one_line(std::string_view text) {
    std::string out;
    bool pending_space = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space)
            out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    return out;
}

// Flags shared by the ranking commands.
struct CommonFlags {
    RankerConfig config;
    std::string bias_text;
    std::string bias_file;
    std::string embedder = "tfidf";
    std::string embeddings;
    std::string stopwords;
    bool pre_segmented = false;
    std::string output = "text";

    Segmentation segmentation() const { return pre_segmented ? Segmentation::PreSegmented : Segmentation::Rules; }

    std::optional<std::string> bias(std::istream &in) const {
        if (!bias_text.empty())
            return bias_text;
        if (!bias_file.empty())
            return read_input(bias_file, in);
        return std::nullopt;
    }

    StopwordSet stopword_set() const { return stopwords.empty() ? default_stopwords() : load_stopwords(stopwords); }
};

std::optional<double> parse_number(const std::string &text) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        return std::nullopt;
    return value;
}

const auto OPEN_UNIT_INTERVAL = CLI::Validator(
    [](std::string &value) {
        const auto d = parse_number(value);
        if (!d)
            return "'" + value + "' is not a number";
        return (*d > 0.0 && *d < 1.0) ? std::string() : "must lie strictly between 0 and 1";
    },
    "(0,1)");

const auto HALF_OPEN_UNIT_INTERVAL = CLI::Validator(
    [](std::string &value) {
        const auto t = parse_number(value);
        if (!t)
            return "'" + value + "' is not a number";
        return (*t >= 0.0 && *t < 1.0) ? std::string() : "must lie in [0, 1)";
    },
    "[0,1)");

void add_ranker_flags(CLI::App *app, CommonFlags &flags) {
    app->add_option("--damping", flags.config.damping, "Probability of following an edge")
        ->check(OPEN_UNIT_INTERVAL)
        ->capture_default_str();
    app->add_option("--threshold", flags.config.threshold, "Minimum cosine similarity for an edge")
        ->check(HALF_OPEN_UNIT_INTERVAL)
        ->capture_default_str();
    app->add_option("--epsilon", flags.config.epsilon, "L1 convergence tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--max-iterations", flags.config.max_iterations, "Power iteration cap")
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
        ->capture_default_str();
}

void add_embedding_flags(CLI::App *app, CommonFlags &flags, const char *embeddings_help) {
    app->add_option("--embedder", flags.embedder, "Embedding provider")
        ->check(CLI::IsMember({"tfidf", "file"}))
        ->capture_default_str();
    app->add_option("--embeddings", flags.embeddings, embeddings_help);
    app->add_option("--stopwords", flags.stopwords, "Stopword file for the tf-idf embedder")->check(CLI::ExistingFile);
    app->add_flag("--pre-segmented", flags.pre_segmented, "Treat each input line as one sentence");
}

void add_bias_flags(CLI::App *app, CommonFlags &flags) {
    auto *text = app->add_option("--bias-text", flags.bias_text, "Focus text");
    auto *file = app->add_option("--bias-file", flags.bias_file, "File holding the focus text");
    text->excludes(file);
}

void require_embeddings_path(const CommonFlags &flags) {
    if (flags.embedder == "file" && flags.embeddings.empty())
        throw CLI::ValidationError("--embeddings", "required when --embedder file");
}

std::string display_name(Method method, std::size_t k) {
    switch (method) {
    case Method::BiasedTextRank:
        return "Biased TextRank";
    case Method::TextRank:
        return "TextRank";
    case Method::Lead:
        return "Lead-" + std::to_string(k);
    }
    return "?";
}

void print_table(std::ostream &out, std::span<const MethodAggregate> aggregates) {
    char line[160];
    std::snprintf(line, sizeof line, "%-18s %4s %8s %8s %8s %8s\n", "method", "k", "ROUGE-1", "ROUGE-2", "ROUGE-L",
                  "records");
    out << line;
    for (const auto &agg : aggregates) {
        const auto name = display_name(agg.method, agg.k);
        if (agg.mean) {
            std::snprintf(line, sizeof line, "%-18s %4zu %8.2f %8.2f %8.2f %8zu\n", name.c_str(), agg.k,
                          100.0 * agg.mean->rouge1.f1, 100.0 * agg.mean->rouge2.f1, 100.0 * agg.mean->rougeL.f1,
                          agg.scored_records);
        } else {
            std::snprintf(line, sizeof line, "%-18s %4zu %8s %8s %8s %8zu\n", name.c_str(), agg.k, "n/a", "n/a", "n/a",
                          agg.scored_records);
        }
        out << line;
    }
}

ordered_json table_json(std::span<const MethodAggregate> aggregates) {
    ordered_json rows = ordered_json::array();
    for (const auto &agg : aggregates) {
        ordered_json row;
        row["method"] = std::string(method_name(agg.method));
        row["k"] = agg.k;
        row["scored_records"] = agg.scored_records;
        if (agg.mean) {
            row["rouge1_f1"] = agg.mean->rouge1.f1;
            row["rouge2_f1"] = agg.mean->rouge2.f1;
            row["rougeL_f1"] = agg.mean->rougeL.f1;
        } else {
            row["rouge1_f1"] = nullptr;
            row["rouge2_f1"] = nullptr;
            row["rougeL_f1"] = nullptr;
        }
        row["mean_iterations"] = agg.mean_iterations;
        rows.push_back(std::move(row));
    }
    return rows;
}

ProviderLookup make_providers(const CommonFlags &flags) {
    if (flags.embedder == "file") {
        const std::filesystem::path directory = flags.embeddings;
        return [directory](const TaskRecord &record) -> std::shared_ptr<const EmbeddingProvider> {
            return std::make_shared<FileEmbeddingProvider>(directory / (record.id + ".jsonl"));
        };
    }
    auto shared = std::make_shared<const TfidfProvider>(flags.stopword_set());
    return [shared](const TaskRecord &) -> std::shared_ptr<const EmbeddingProvider> { return shared; };
}

std::string provider_label(const CommonFlags &flags) {
    return flags.embedder == "file" ? "file:" + flags.embeddings : "tfidf";
}

// ---------------------------------------------------------------------------

struct RankCommand {
    CommonFlags flags;
    std::string input;
    std::size_t top_k = 5;
    std::string baseline;

    void attach(CLI::App *app) {
        app->add_option("input", input, "Document path, or - for stdin")->required();
        add_bias_flags(app, flags);
        app->add_option("--top-k", top_k, "Number of sentences to select")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        add_ranker_flags(app, flags);
        add_embedding_flags(app, flags, "Interchange file with sentence vectors (bias last)");
        app->add_option("--output", flags.output, "Output format")->check(CLI::IsMember({"text", "json"}));
        app->add_option("--baseline", baseline, "Run a baseline instead of Biased TextRank")
            ->check(CLI::IsMember({"textrank", "lead"}));
    }

    int execute(std::istream &in, std::ostream &out) const {
        require_embeddings_path(flags);
        const std::string document_id = input == "-" ? "stdin" : input;
        const auto document = parse(read_input(input, in), flags.segmentation(), document_id);
        const auto bias = flags.bias(in);

        std::unique_ptr<EmbeddingProvider> provider;
        if (flags.embedder == "file")
            provider = std::make_unique<FileEmbeddingProvider>(flags.embeddings);
        else
            provider = std::make_unique<TfidfProvider>(flags.stopword_set());

        ExtractionResult result;
        if (baseline == "lead") {
            result = lead_k(document, top_k);
        } else if (baseline == "textrank") {
            const auto prepared = prepare(document, bias, *provider, flags.config);
            result = rank_prepared(document, prepared, Restart::Uniform, flags.config, top_k);
        } else {
            result = extract(document, bias, *provider, flags.config, top_k);
        }
        const auto run = make_method_run(document, result);

        if (flags.output == "json") {
            auto j = ordered_json::parse(method_run_json(run));
            ordered_json doc;
            doc["document_id"] = document.id;
            doc["sentence_count"] = document.sentences.size();
            doc["config"] = {{"damping", flags.config.damping},
                             {"threshold", flags.config.threshold},
                             {"epsilon", flags.config.epsilon},
                             {"max_iterations", flags.config.max_iterations}};
            doc.update(j);
            out << doc.dump(2) << '\n';
        } else {
            for (const auto &span : run.selected)
                out << span.sentence_index << '\t' << span.rank_position << '\t' << fixed(span.score, 6) << '\t'
                    << one_line(span.text) << '\n';
        }
        return Success;
    }
};

struct CorpusCommand {
    Task task;
    CommonFlags flags;
    std::string corpus;
    std::size_t top_k = 0;
    std::vector<std::string> baselines;
    std::string out_dir;
    unsigned jobs = 1;

    explicit CorpusCommand(Task task) : task(task) {}

    void attach(CLI::App *app) {
        app->add_option("corpus", corpus, "JSONL corpus")->required();
        add_bias_flags(app, flags);
        app->add_option("--top-k", top_k, "Sentences per record (default " + std::to_string(default_k(task)) + ")")
            ->check(CLI::PositiveNumber);
        add_ranker_flags(app, flags);
        add_embedding_flags(app, flags, "Directory of <record-id>.jsonl interchange files");
        app->add_option("--baseline", baselines, "Also run a baseline (repeatable)")
            ->check(CLI::IsMember({"textrank", "lead"}));
        app->add_option("--out-dir", out_dir, "Write per-record results and manifest.json here");
        app->add_option("--output", flags.output, "Table format")->check(CLI::IsMember({"text", "json"}));
        app->add_option("--jobs", jobs, "Records processed in parallel")
            ->envname("FOCUSRANK_JOBS")
            ->check(CLI::PositiveNumber);
    }

    TaskOptions options(std::istream &in) const {
        TaskOptions options;
        options.config = flags.config;
        options.k = top_k == 0 ? default_k(task) : top_k;
        options.segmentation = flags.segmentation();
        options.bias_override = flags.bias(in);
        options.jobs = jobs;
        for (const auto &baseline : baselines) {
            options.textrank_baseline = options.textrank_baseline || baseline == "textrank";
            options.lead_baseline = options.lead_baseline || baseline == "lead";
        }
        return options;
    }

    int execute(std::istream &in, std::ostream &out, std::ostream &err) const {
        require_embeddings_path(flags);
        const auto records = load_corpus(corpus);
        const auto opts = options(in);
        const auto run = run_task(records, make_providers(flags), opts);

        if (!out_dir.empty()) {
            RunSettings settings{std::string(task_name(task)), corpus, opts.config, provider_label(flags), opts.k,
                                 flags.pre_segmented ? "pre-segmented" : "rules"};
            save_results(settings, run.records, run.aggregates, run.total_ms, out_dir);
            err << "wrote " << run.records.size() << " record results to " << out_dir << '\n';
        }
        if (flags.output == "json")
            out << table_json(run.aggregates).dump(2) << '\n';
        else
            print_table(out, run.aggregates);
        return Success;
    }
};

struct AblateCommand {
    CommonFlags flags;
    std::string corpus;
    std::string task = "summarize";
    std::size_t top_k = 0;
    std::vector<double> dampings{0.80, 0.85, 0.90};
    std::vector<double> thresholds{0.55, 0.60, 0.65, 0.70, 0.75};
    std::string csv;
    unsigned jobs = 1;

    void attach(CLI::App *app) {
        app->add_option("corpus", corpus, "JSONL corpus with references")->required();
        app->add_option("--task", task, "Determines the default k")
            ->check(CLI::IsMember({"summarize", "explain"}))
            ->capture_default_str();
        app->add_option("--top-k", top_k, "Sentences per record")->check(CLI::PositiveNumber);
        app->add_option("--dampings", dampings, "Damping values (comma separated)")
            ->delimiter(',')
            ->check(OPEN_UNIT_INTERVAL)
            ->capture_default_str();
        app->add_option("--thresholds", thresholds, "Threshold values (comma separated)")
            ->delimiter(',')
            ->check(HALF_OPEN_UNIT_INTERVAL)
            ->capture_default_str();
        app->add_option("--epsilon", flags.config.epsilon, "L1 convergence tolerance")->check(CLI::PositiveNumber);
        app->add_option("--max-iterations", flags.config.max_iterations, "Power iteration cap")
            ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
        add_bias_flags(app, flags);
        add_embedding_flags(app, flags, "Directory of <record-id>.jsonl interchange files");
        app->add_option("--csv", csv, "Write the CSV here instead of stdout");
        app->add_option("--jobs", jobs, "Records processed in parallel")
            ->envname("FOCUSRANK_JOBS")
            ->check(CLI::PositiveNumber);
    }

    int execute(std::istream &in, std::ostream &out) const {
        require_embeddings_path(flags);
        const auto records = load_corpus(corpus);
        const Task t = task == "explain" ? Task::Explain : Task::Summarize;
        const auto providers = make_providers(flags);
        const auto bias = flags.bias(in);

        std::ostringstream table;
        table << "damping,threshold,rouge1_f1,rouge2_f1,rougeL_f1,mean_iterations\r\n";
        for (double damping : dampings) {
            for (double threshold : thresholds) {
                TaskOptions options;
                options.config = flags.config;
                options.config.damping = damping;
                options.config.threshold = threshold;
                options.k = top_k == 0 ? default_k(t) : top_k;
                options.segmentation = flags.segmentation();
                options.bias_override = bias;
                options.jobs = jobs;
                const auto run = run_task(records, providers, options);
                const auto &biased = run.aggregates.front();
                if (!biased.mean)
                    throw InvalidArgument("ablation needs records with references");
                table << fixed(damping, 4) << ',' << fixed(threshold, 4) << ',' << fixed(biased.mean->rouge1.f1, 4)
                      << ',' << fixed(biased.mean->rouge2.f1, 4) << ',' << fixed(biased.mean->rougeL.f1, 4) << ','
                      << fixed(biased.mean_iterations, 4) << "\r\n";
            }
        }
        if (csv.empty()) {
            out << table.str();
        } else {
            std::ofstream file(csv, std::ios::binary | std::ios::trunc);
            if (!file || !(file << table.str()))
                throw IoError("cannot write " + csv);
        }
        return Success;
    }
};

struct BenchCommand {
    RankerConfig config;
    std::size_t nodes = 1000;
    std::size_t repetitions = 10;
    std::uint64_t seed = 1;
    std::string output = "text";

    void attach(CLI::App *app) {
        app->add_option("--nodes", nodes, "Graph size")
            ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()))
            ->capture_default_str();
        app->add_option("--repetitions", repetitions, "Timed runs")->check(CLI::PositiveNumber)->capture_default_str();
        app->add_option("--seed", seed, "Graph seed")->capture_default_str();
        app->add_option("--damping", config.damping, "Damping factor")->check(OPEN_UNIT_INTERVAL);
        app->add_option("--threshold", config.threshold, "Edge threshold")->check(HALF_OPEN_UNIT_INTERVAL);
        app->add_option("--epsilon", config.epsilon, "L1 convergence tolerance")->check(CLI::PositiveNumber);
        app->add_option("--max-iterations", config.max_iterations, "Power iteration cap")
            ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
        app->add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "json"}));
    }

    int execute(std::ostream &out) const {
        const auto graph = random_graph(nodes, config.threshold, seed);
        std::mt19937_64 engine(seed ^ 0x9E3779B97F4A7C15ULL);
        std::vector<double> raw(nodes);
        for (double &v : raw)
            v = 0.01 + static_cast<double>(engine() % 1000) / 1000.0;
        const auto bias = BiasVector::normalized(raw);

        double total = 0.0;
        double fastest = std::numeric_limits<double>::infinity();
        double slowest = 0.0;
        std::size_t iterations = 0;
        for (std::size_t r = 0; r < repetitions; ++r) {
            const auto start = Clock::now();
            const auto result = rank(graph, bias, config);
            const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
            iterations = result.iterations;
            total += ms;
            fastest = std::min(fastest, ms);
            slowest = std::max(slowest, ms);
        }
        const double mean = total / static_cast<double>(repetitions);
        if (output == "json") {
            ordered_json j;
            j["nodes"] = nodes;
            j["edges"] = graph.edge_count();
            j["repetitions"] = repetitions;
            j["iterations"] = iterations;
            j["mean_ms"] = mean;
            j["min_ms"] = fastest;
            j["max_ms"] = slowest;
            out << j.dump(2) << '\n';
        } else {
            out << "nodes " << nodes << '\n'
                << "edges " << graph.edge_count() << '\n'
                << "repetitions " << repetitions << '\n'
                << "iterations " << iterations << '\n'
                << "mean_ms " << fixed(mean, 3) << '\n'
                << "min_ms " << fixed(fastest, 3) << '\n'
                << "max_ms " << fixed(slowest, 3) << '\n';
        }
        return Success;
    }
};

struct SegmentCommand {
    std::string input;
    bool pre_segmented = false;

    void attach(CLI::App *app) {
        app->add_option("input", input, "Document path, or - for stdin")->required();
        app->add_flag("--pre-segmented", pre_segmented, "Treat each input line as one sentence");
    }

    int execute(std::istream &in, std::ostream &out) const {
        const auto document =
            parse(read_input(input, in), pre_segmented ? Segmentation::PreSegmented : Segmentation::Rules);
        for (const auto &sentence : document.sentences)
            out << one_line(sentence.text) << '\n';
        return Success;
    }
};

struct EmbedCommand {
    CommonFlags flags;
    std::string input;
    std::string out_path;

    void attach(CLI::App *app) {
        app->add_option("input", input, "Document path, or - for stdin")->required();
        add_bias_flags(app, flags);
        app->add_option("--stopwords", flags.stopwords, "Stopword file")->check(CLI::ExistingFile);
        app->add_flag("--pre-segmented", flags.pre_segmented, "Treat each input line as one sentence");
        app->add_option("--out", out_path, "Interchange file to write (default stdout)");
    }

    int execute(std::istream &in, std::ostream &out) const {
        const auto document = parse(read_input(input, in), flags.segmentation());
        const auto embedded = tfidf_embed(document.sentence_texts(), flags.bias(in), flags.stopword_set());
        auto vectors = embedded.sentences.vectors;
        if (embedded.bias)
            vectors.push_back(*embedded.bias);
        if (out_path.empty())
            write_embedding_file(out, "tfidf", vectors);
        else
            write_embedding_file(std::filesystem::path(out_path), "tfidf", vectors);
        return Success;
    }
};

struct SynthCommand {
    SyntheticOptions options;
    std::string out_path;

    void attach(CLI::App *app) {
        app->add_option("--records", options.records, "Number of records")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        app->add_option("--sentences", options.sentences, "Sentences per transcript")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        app->add_option("--reference-sentences", options.reference_sentences, "Sentences per reference")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        app->add_option("--seed", options.seed, "Generator seed")->capture_default_str();
        app->add_option("--out", out_path, "Corpus file to write (default stdout)");
    }

    int execute(std::ostream &out) const {
        const auto records = synthetic_two_topic_corpus(options);
        if (out_path.empty())
            write_corpus(out, records);
        else
            write_corpus(std::filesystem::path(out_path), records);
        return Success;
    }
};

} // namespace

SimilarityGraph random_graph(std::size_t n, double threshold, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::vector<double> weights(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = uniform(engine);
            if (w > threshold) {
                weights[i * n + j] = w;
                weights[j * n + i] = w;
            }
        }
    }
    return SimilarityGraph::from_weights(n, std::move(weights), threshold);
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Focus-aware sentence ranking with Biased TextRank", "focusrank"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "focusrank 1.0.0");

    RankCommand rank_cmd;
    CorpusCommand summarize_cmd(Task::Summarize);
    CorpusCommand explain_cmd(Task::Explain);
    AblateCommand ablate_cmd;
    BenchCommand bench_cmd;
    SegmentCommand segment_cmd;
    EmbedCommand embed_cmd;
    SynthCommand synth_cmd;

    auto *rank_app = app.add_subcommand("rank", "Rank and select sentences of one document");
    auto *summarize_app = app.add_subcommand("summarize", "Focused summaries for a corpus (k = 20)");
    auto *explain_app = app.add_subcommand("explain", "Explanation extraction for a corpus (k = 4)");
    auto *ablate_app = app.add_subcommand("ablate", "Sweep damping and threshold, report mean ROUGE as CSV");
    auto *bench_app = app.add_subcommand("bench", "Time ranking on a random graph");
    auto *segment_app = app.add_subcommand("segment", "Print one sentence per line");
    auto *embed_app = app.add_subcommand("embed", "Write tf-idf vectors in the interchange format");
    auto *synth_app = app.add_subcommand("synth", "Write the synthetic two-topic fixture corpus");
    rank_cmd.attach(rank_app);
    summarize_cmd.attach(summarize_app);
    explain_cmd.attach(explain_app);
    ablate_cmd.attach(ablate_app);
    bench_cmd.attach(bench_app);
    segment_cmd.attach(segment_app);
    embed_cmd.attach(embed_app);
    synth_cmd.attach(synth_app);

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("focusrank");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &arg : storage)
        argv.push_back(arg.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return UsageError;
    }

    try {
        if (rank_app->parsed())
            return rank_cmd.execute(in, out);
        if (summarize_app->parsed())
            return summarize_cmd.execute(in, out, err);
        if (explain_app->parsed())
            return explain_cmd.execute(in, out, err);
        if (ablate_app->parsed())
            return ablate_cmd.execute(in, out);
        if (bench_app->parsed())
            return bench_cmd.execute(out);
        if (segment_app->parsed())
            return segment_cmd.execute(in, out);
        if (embed_app->parsed())
            return embed_cmd.execute(in, out);
        if (synth_app->parsed())
            return synth_cmd.execute(out);
    } catch (const CLI::ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return RuntimeError;
    }
    return UsageError;
}

} // namespace focusrank::cli
