#include <focusrank/corpus.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <openssl/evp.h>

#include <json.hpp>

namespace focusrank {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr const char *REFERENCE_AGGREGATION =
    "per-reference scores averaged within each record, then averaged over records";

std::string at_line(const std::string &source, std::size_t line) {
    return source + ": line " + std::to_string(line) + ": ";
}

std::string require_string(const json &object, const char *key, const std::string &where, std::size_t line) {
    const auto it = object.find(key);
    if (it == object.end())
        throw CorpusError(where + "missing key '" + key + "'", line);
    if (!it->is_string())
        throw CorpusError(where + "'" + key + "' must be a string", line);
    return it->get<std::string>();
}

bool blank(const std::string &s) {
    return s.find_first_not_of(" \t\r\n\f\v") == std::string::npos;
}

bool valid_id(const std::string &id) {
    if (id.empty() || id.front() == '.' || id == "manifest")
        return false;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '.'
                        || c == '_' || c == '-';
        if (!ok)
            return false;
    }
    return true;
}

Method method_from_name(const std::string &name) {
    for (Method m : {Method::BiasedTextRank, Method::TextRank, Method::Lead}) {
        if (method_name(m) == name)
            return m;
    }
    throw FormatError("unknown method '" + name + "'");
}

ordered_json score_to_json(const rouge::Score &s) {
    ordered_json out;
    out["precision"] = s.precision;
    out["recall"] = s.recall;
    out["f1"] = s.f1;
    return out;
}

ordered_json rouge_to_json(const std::optional<rouge::RougeScore> &score) {
    if (!score)
        return nullptr;
    ordered_json out;
    out["rouge1"] = score_to_json(score->rouge1);
    out["rouge2"] = score_to_json(score->rouge2);
    out["rougeL"] = score_to_json(score->rougeL);
    return out;
}

rouge::Score score_from_json(const json &j) {
    return {j.at("precision").get<double>(), j.at("recall").get<double>(), j.at("f1").get<double>()};
}

std::optional<rouge::RougeScore> rouge_from_json(const json &j) {
    if (j.is_null())
        return std::nullopt;
    return rouge::RougeScore{score_from_json(j.at("rouge1")), score_from_json(j.at("rouge2")),
                             score_from_json(j.at("rougeL"))};
}

ordered_json config_to_json(const RankerConfig &config) {
    ordered_json out;
    out["damping"] = config.damping;
    out["threshold"] = config.threshold;
    out["epsilon"] = config.epsilon;
    out["max_iterations"] = config.max_iterations;
    return out;
}

RankerConfig config_from_json(const json &j) {
    RankerConfig config;
    config.damping = j.at("damping").get<double>();
    config.threshold = j.at("threshold").get<double>();
    config.epsilon = j.at("epsilon").get<double>();
    config.max_iterations = j.at("max_iterations").get<std::size_t>();
    return config;
}

ordered_json method_run_to_json(const MethodRun &run) {
    ordered_json out;
    out["method"] = std::string(method_name(run.method));
    out["k"] = run.k;
    out["provider_id"] = run.provider_id;
    out["iterations"] = run.iterations;
    out["converged"] = run.converged;
    ordered_json selected = ordered_json::array();
    for (const auto &span : run.selected) {
        ordered_json s;
        s["sentence_index"] = span.sentence_index;
        s["rank_position"] = span.rank_position;
        s["score"] = span.score;
        s["char_start"] = span.char_start;
        s["char_end"] = span.char_end;
        s["text"] = span.text;
        selected.push_back(std::move(s));
    }
    out["selected"] = std::move(selected);
    out["scores"] = run.scores;
    out["rouge"] = rouge_to_json(run.rouge);
    out["warnings"] = run.warnings;
    return out;
}

MethodRun method_run_from_json(const json &j) {
    MethodRun run;
    run.method = method_from_name(j.at("method").get<std::string>());
    run.k = j.at("k").get<std::size_t>();
    run.provider_id = j.at("provider_id").get<std::string>();
    run.iterations = j.at("iterations").get<std::size_t>();
    run.converged = j.at("converged").get<bool>();
    for (const auto &s : j.at("selected")) {
        run.selected.push_back({s.at("sentence_index").get<std::size_t>(), s.at("rank_position").get<std::size_t>(),
                                s.at("score").get<double>(), s.at("char_start").get<std::size_t>(),
                                s.at("char_end").get<std::size_t>(), s.at("text").get<std::string>()});
    }
    run.scores = j.at("scores").get<std::vector<double>>();
    run.rouge = rouge_from_json(j.at("rouge"));
    run.warnings = j.at("warnings").get<std::vector<std::string>>();
    return run;
}

ordered_json aggregate_to_json(const MethodAggregate &aggregate) {
    ordered_json out;
    out["method"] = std::string(method_name(aggregate.method));
    out["k"] = aggregate.k;
    out["scored_records"] = aggregate.scored_records;
    out["mean_iterations"] = aggregate.mean_iterations;
    out["rouge"] = rouge_to_json(aggregate.mean);
    return out;
}

MethodAggregate aggregate_from_json(const json &j) {
    MethodAggregate aggregate;
    aggregate.method = method_from_name(j.at("method").get<std::string>());
    aggregate.k = j.at("k").get<std::size_t>();
    aggregate.scored_records = j.at("scored_records").get<std::size_t>();
    aggregate.mean_iterations = j.at("mean_iterations").get<double>();
    aggregate.mean = rouge_from_json(j.at("rouge"));
    return aggregate;
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

// Write to a sibling temporary file, then rename over the target.
void write_atomically(const std::filesystem::path &path, const std::string &content) {
    auto temporary = path;
    temporary += ".tmp";
    {
        std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot write " + temporary.string());
        out << content;
        if (!out)
            throw IoError("failed writing " + temporary.string());
    }
    std::error_code ec;
    std::filesystem::rename(temporary, path, ec);
    if (ec)
        throw IoError("cannot move " + temporary.string() + " to " + path.string() + ": " + ec.message());
}

} // namespace

std::vector<TaskRecord> read_corpus(std::istream &in, const std::string &source) {
    std::vector<TaskRecord> records;
    std::unordered_map<std::string, std::size_t> first_line;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (blank(line))
            continue;
        const std::string where = at_line(source, line_number);
        json object;
        try {
            object = json::parse(line);
        } catch (const json::parse_error &e) {
            throw CorpusError(where + "malformed JSON: " + e.what(), line_number);
        }
        if (!object.is_object())
            throw CorpusError(where + "expected a JSON object", line_number);
        for (const auto &[key, value] : object.items()) {
            if (key != "id" && key != "text" && key != "bias" && key != "references" && key != "meta")
                throw CorpusError(where + "unknown key '" + key + "'", line_number);
        }

        TaskRecord record;
        record.id = require_string(object, "id", where, line_number);
        record.text = require_string(object, "text", where, line_number);
        record.bias = require_string(object, "bias", where, line_number);
        if (!valid_id(record.id))
            throw CorpusError(where + "id '" + record.id
                                  + "' must be a non-empty file-name-safe token ([A-Za-z0-9._-], not starting "
                                    "with '.', not 'manifest')",
                              line_number);
        if (blank(record.text))
            throw CorpusError(where + "record '" + record.id + "' has empty text", line_number);
        if (blank(record.bias))
            throw CorpusError(where + "record '" + record.id + "' has empty bias", line_number);

        if (const auto refs = object.find("references"); refs != object.end()) {
            if (!refs->is_array())
                throw CorpusError(where + "'references' must be an array of strings", line_number);
            for (const auto &ref : *refs) {
                if (!ref.is_string())
                    throw CorpusError(where + "'references' must be an array of strings", line_number);
                record.references.push_back(ref.get<std::string>());
            }
        }
        if (const auto meta = object.find("meta"); meta != object.end()) {
            if (!meta->is_object())
                throw CorpusError(where + "'meta' must be an object of strings", line_number);
            for (const auto &[key, value] : meta->items()) {
                if (!value.is_string())
                    throw CorpusError(where + "meta value '" + key + "' must be a string", line_number);
                record.meta.emplace(key, value.get<std::string>());
            }
        }

        if (const auto [it, inserted] = first_line.emplace(record.id, line_number); !inserted)
            throw CorpusError(source + ": duplicate id '" + record.id + "' on lines " + std::to_string(it->second)
                                  + " and " + std::to_string(line_number),
                              line_number);
        records.push_back(std::move(record));
    }
    if (records.empty())
        throw CorpusError(source + ": corpus has no records", 0);
    return records;
}

std::vector<TaskRecord> load_corpus(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open corpus " + path.string());
    return read_corpus(in, path.string());
}

void write_corpus(std::ostream &out, std::span<const TaskRecord> records) {
    for (const auto &record : records) {
        ordered_json j;
        j["id"] = record.id;
        j["text"] = record.text;
        j["bias"] = record.bias;
        j["references"] = record.references;
        j["meta"] = record.meta;
        out << j.dump() << '\n';
    }
}

void write_corpus(const std::filesystem::path &path, std::span<const TaskRecord> records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write corpus " + path.string());
    write_corpus(out, records);
}

std::string sha256_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> context(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    if (!context || EVP_DigestInit_ex(context.get(), EVP_sha256(), nullptr) != 1)
        throw Error("sha256: cannot initialise digest");
    std::vector<char> buffer(1 << 16);
    while (in) {
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        const auto got = in.gcount();
        if (got > 0 && EVP_DigestUpdate(context.get(), buffer.data(), static_cast<std::size_t>(got)) != 1)
            throw Error("sha256: digest update failed");
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_DigestFinal_ex(context.get(), digest, &length) != 1)
        throw Error("sha256: digest finalisation failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0x0F]);
    }
    return out;
}

MethodRun make_method_run(const Document &document, const ExtractionResult &result) {
    MethodRun run;
    run.method = result.method;
    run.k = result.k;
    run.provider_id = result.provider_id;
    run.iterations = result.scores.iterations;
    run.converged = result.scores.converged;
    run.scores = result.scores.scores;
    run.warnings = result.warnings;
    for (const auto &selected : result.selected) {
        const auto &sentence = document.sentences.at(selected.sentence_index);
        run.selected.push_back({selected.sentence_index, selected.rank_position, selected.score, sentence.char_start,
                                sentence.char_end, sentence.text});
    }
    return run;
}

std::string method_run_json(const MethodRun &run, int indent) {
    return method_run_to_json(run).dump(indent);
}

RunManifest save_results(const RunSettings &settings, std::span<const RecordRun> records,
                         std::span<const MethodAggregate> aggregates, double total_ms,
                         const std::filesystem::path &out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
        throw IoError("cannot create output directory " + out_dir.string()
                      + (ec ? ": " + ec.message() : std::string()));

    RunManifest manifest;
    manifest.task = settings.task;
    manifest.corpus_path = settings.corpus_path.string();
    manifest.corpus_sha256 = sha256_file(settings.corpus_path);
    manifest.config = settings.config;
    manifest.provider_id = settings.provider_id;
    manifest.k = settings.k;
    manifest.segmentation = settings.segmentation;
    manifest.reference_aggregation = REFERENCE_AGGREGATION;
    manifest.aggregates.assign(aggregates.begin(), aggregates.end());
    manifest.total_ms = total_ms;

    for (const auto &record : records) {
        ordered_json j;
        j["id"] = record.record_id;
        j["sentence_count"] = record.sentence_count;
        ordered_json runs = ordered_json::array();
        for (const auto &run : record.runs)
            runs.push_back(method_run_to_json(run));
        j["results"] = std::move(runs);
        const std::string file_name = record.record_id + ".json";
        write_atomically(out_dir / file_name, j.dump(2) + "\n");
        manifest.records.push_back({record.record_id, file_name, record.elapsed_ms});
    }

    ordered_json j;
    j["task"] = manifest.task;
    j["corpus"] = {{"path", manifest.corpus_path}, {"sha256", manifest.corpus_sha256}};
    j["config"] = config_to_json(manifest.config);
    j["k"] = manifest.k;
    j["provider_id"] = manifest.provider_id;
    j["segmentation"] = manifest.segmentation;
    j["reference_aggregation"] = manifest.reference_aggregation;
    ordered_json record_list = ordered_json::array();
    for (const auto &record : manifest.records) {
        if (!std::filesystem::exists(out_dir / record.output))
            throw IoError("result file " + (out_dir / record.output).string() + " vanished before manifest write");
        record_list.push_back({{"id", record.id}, {"output", record.output}, {"elapsed_ms", record.elapsed_ms}});
    }
    j["records"] = std::move(record_list);
    ordered_json aggregate_list = ordered_json::array();
    for (const auto &aggregate : manifest.aggregates)
        aggregate_list.push_back(aggregate_to_json(aggregate));
    j["aggregates"] = std::move(aggregate_list);
    j["timings"] = {{"total_ms", manifest.total_ms}};
    write_atomically(out_dir / "manifest.json", j.dump(2) + "\n");
    return manifest;
}

RunManifest load_manifest(const std::filesystem::path &path) {
    const auto j = read_json_file(path);
    try {
        RunManifest manifest;
        manifest.task = j.at("task").get<std::string>();
        manifest.corpus_path = j.at("corpus").at("path").get<std::string>();
        manifest.corpus_sha256 = j.at("corpus").at("sha256").get<std::string>();
        manifest.config = config_from_json(j.at("config"));
        manifest.k = j.at("k").get<std::size_t>();
        manifest.provider_id = j.at("provider_id").get<std::string>();
        manifest.segmentation = j.at("segmentation").get<std::string>();
        manifest.reference_aggregation = j.at("reference_aggregation").get<std::string>();
        for (const auto &record : j.at("records"))
            manifest.records.push_back({record.at("id").get<std::string>(), record.at("output").get<std::string>(),
                                        record.at("elapsed_ms").get<double>()});
        for (const auto &aggregate : j.at("aggregates"))
            manifest.aggregates.push_back(aggregate_from_json(aggregate));
        manifest.total_ms = j.at("timings").at("total_ms").get<double>();
        return manifest;
    } catch (const json::exception &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

RecordRun load_record_run(const std::filesystem::path &path) {
    const auto j = read_json_file(path);
    try {
        RecordRun record;
        record.record_id = j.at("id").get<std::string>();
        record.sentence_count = j.at("sentence_count").get<std::size_t>();
        for (const auto &run : j.at("results"))
            record.runs.push_back(method_run_from_json(run));
        return record;
    } catch (const json::exception &e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

} // namespace focusrank
