#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <focusrank/error.hpp>
#include <focusrank/graph.hpp>
#include <focusrank/pipeline.hpp>
#include <focusrank/rouge.hpp>

namespace focusrank {

/// One document to extract from, with its focus text and optional references.
struct TaskRecord {
    std::string id;
    std::string text;
    std::string bias;
    std::vector<std::string> references;
    std::map<std::string, std::string> meta;

    friend bool operator==(const TaskRecord &, const TaskRecord &) = default;
};

/// Corpus validation failure. `line` is the 1-based line of the offending record.
class CorpusError : public Error {
public:
    CorpusError(const std::string &what, std::size_t line) : Error(what), line(line) {}

    std::size_t line;
};

/**
 * Reads a JSONL corpus: one object per line with keys "id", "text", "bias"
 * and optionally "references" (array of strings) and "meta" (object of
 * strings). Blank lines are skipped. Ids must be unique, usable as file
 * names ([A-Za-z0-9._-], not starting with '.') and not "manifest".
 * Throws CorpusError naming the line; an empty corpus is an error.
 */
std::vector<TaskRecord> load_corpus(const std::filesystem::path &path);
std::vector<TaskRecord> read_corpus(std::istream &in, const std::string &source = "<stream>");

void write_corpus(std::ostream &out, std::span<const TaskRecord> records);
void write_corpus(const std::filesystem::path &path, std::span<const TaskRecord> records);

/// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path &path);

// ---------------------------------------------------------------------------
// Run results

struct SelectedSpan {
    std::size_t sentence_index = 0;
    std::size_t rank_position = 0;
    double score = 0.0;
    std::size_t char_start = 0;
    std::size_t char_end = 0;
    std::string text;

    friend bool operator==(const SelectedSpan &, const SelectedSpan &) = default;
};

/// One method's output on one record.
struct MethodRun {
    Method method = Method::BiasedTextRank;
    std::size_t k = 0;
    std::string provider_id;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<SelectedSpan> selected;
    std::vector<double> scores;
    std::optional<rouge::RougeScore> rouge;
    std::vector<std::string> warnings;
};

struct RecordRun {
    std::string record_id;
    std::size_t sentence_count = 0;
    std::vector<MethodRun> runs;
    double elapsed_ms = 0.0;
};

struct MethodAggregate {
    Method method = Method::BiasedTextRank;
    std::size_t k = 0;
    /// Mean over records that have references; absent when none do.
    std::optional<rouge::RougeScore> mean;
    std::size_t scored_records = 0;
    double mean_iterations = 0.0;
};

struct RunSettings {
    std::string task;
    std::filesystem::path corpus_path;
    RankerConfig config;
    std::string provider_id;
    std::size_t k = 0;
    std::string segmentation = "rules";
};

struct ManifestRecord {
    std::string id;
    std::string output;
    double elapsed_ms = 0.0;
};

struct RunManifest {
    std::string task;
    std::string corpus_path;
    std::string corpus_sha256;
    RankerConfig config;
    std::string provider_id;
    std::size_t k = 0;
    std::string segmentation;
    std::string reference_aggregation;
    std::vector<ManifestRecord> records;
    std::vector<MethodAggregate> aggregates;
    double total_ms = 0.0;
};

/// Method run built from an extraction result and the document it came from.
MethodRun make_method_run(const Document &document, const ExtractionResult &result);

/// JSON object for one method run, as stored in per-record result files.
std::string method_run_json(const MethodRun &run, int indent = 2);

/**
 * Writes <out_dir>/<record-id>.json for every record run and then
 * <out_dir>/manifest.json. Record files are replaced atomically; existing
 * files are overwritten. Throws IoError when the directory is unwritable.
 */
RunManifest save_results(const RunSettings &settings, std::span<const RecordRun> records,
                         std::span<const MethodAggregate> aggregates, double total_ms,
                         const std::filesystem::path &out_dir);

RunManifest load_manifest(const std::filesystem::path &path);
RecordRun load_record_run(const std::filesystem::path &path);

} // namespace focusrank
