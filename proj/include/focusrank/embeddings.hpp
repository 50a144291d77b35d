#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <focusrank/embedding_vector.hpp>

namespace focusrank {

/// Vectors aligned 1:1 with the spans they were computed from.
struct EmbeddingBatch {
    std::vector<EmbeddingVector> vectors;
    std::string provider_id;

    std::size_t size() const noexcept { return vectors.size(); }
    /// 0 for an empty batch.
    std::size_t dimension() const noexcept { return vectors.empty() ? 0 : vectors.front().dimension(); }
};

/// Sentence vectors for one document plus the bias vector when one was requested.
struct EmbeddedDocument {
    EmbeddingBatch sentences;
    std::optional<EmbeddingVector> bias;
    /// Indices of spans that produced the all-zero vector.
    std::vector<std::size_t> zero_spans;
};

/// Turns text spans (and an optional bias text) into vectors of one dimension.
/// Implementations are deterministic and stateless after construction.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;

    virtual std::string id() const = 0;
    virtual EmbeddedDocument embed(std::span<const std::string> spans,
                                   const std::optional<std::string> &bias) const = 0;
};

using StopwordSet = std::set<std::string, std::less<>>;

/// Built-in English stopword list.
const StopwordSet &default_stopwords();

/// One stopword per line; blank lines and lines starting with '#' are ignored.
StopwordSet load_stopwords(const std::filesystem::path &path);

/**
 * TF-IDF vectors over the vocabulary of spans plus bias.
 *
 * Tokens are lowercased alphanumeric runs with stopwords removed. Entry =
 * raw term count * (ln((1 + N) / (1 + df)) + 1), where N counts the spans
 * plus the bias text when present. Vocabulary is sorted, so dimension i is
 * the i-th term in byte order. Nonzero vectors are L2-normalized.
 *
 * Throws InvalidArgument when there are no spans, when no term survives
 * filtering, or when a present bias text has no terms left.
 */
EmbeddedDocument tfidf_embed(std::span<const std::string> spans, const std::optional<std::string> &bias,
                             const StopwordSet &stopwords = default_stopwords());

class TfidfProvider final : public EmbeddingProvider {
public:
    TfidfProvider() : stopwords_(default_stopwords()) {}
    explicit TfidfProvider(StopwordSet stopwords) : stopwords_(std::move(stopwords)) {}

    std::string id() const override;
    EmbeddedDocument embed(std::span<const std::string> spans,
                           const std::optional<std::string> &bias) const override;

private:
    StopwordSet stopwords_;
};

// ---------------------------------------------------------------------------
// Interchange format: a header line {"provider", "dimension", "count"}
// followed by `count` lines {"index": i, "vector": [...]} with i = 0..count-1.
// When a bias vector is stored it is the last record.

struct EmbeddingFileHeader {
    std::string provider;
    std::size_t dimension = 0;
    std::size_t count = 0;
};

struct EmbeddingFile {
    EmbeddingFileHeader header;
    std::vector<EmbeddingVector> vectors;
};

EmbeddingFile read_embedding_file(std::istream &in, const std::string &source = "<stream>");
EmbeddingFile read_embedding_file(const std::filesystem::path &path);

void write_embedding_file(std::ostream &out, const std::string &provider, std::span<const EmbeddingVector> vectors);
void write_embedding_file(const std::filesystem::path &path, const std::string &provider,
                          std::span<const EmbeddingVector> vectors);

/// Reads an interchange file and checks it holds exactly `expected_count` records.
EmbeddingBatch load_embeddings(const std::filesystem::path &path, std::size_t expected_count);

/**
 * Serves vectors precomputed into an interchange file. For n spans the file
 * must hold n + 1 records (bias last) when a bias is requested, and n or
 * n + 1 records otherwise. Span text is not inspected.
 */
class FileEmbeddingProvider final : public EmbeddingProvider {
public:
    explicit FileEmbeddingProvider(std::filesystem::path path) : path_(std::move(path)) {}

    std::string id() const override;
    EmbeddedDocument embed(std::span<const std::string> spans,
                           const std::optional<std::string> &bias) const override;

private:
    std::filesystem::path path_;
};

} // namespace focusrank
