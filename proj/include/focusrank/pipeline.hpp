#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <focusrank/embeddings.hpp>
#include <focusrank/error.hpp>
#include <focusrank/graph.hpp>

namespace focusrank {

/// A sentence as a byte range [char_start, char_end) of the raw text.
struct Sentence {
    std::size_t index = 0;
    std::size_t char_start = 0;
    std::size_t char_end = 0;
    std::string text;
};

struct Document {
    std::string id;
    std::string raw_text;
    std::vector<Sentence> sentences;

    std::vector<std::string> sentence_texts() const;
};

enum class Segmentation {
    /// Rule-based boundaries on . ! ? and blank lines.
    Rules,
    /// Every non-blank input line is one sentence.
    PreSegmented,
};

/**
 * Splits raw text into sentences.
 *
 * With Segmentation::Rules a boundary follows a run of '.', '!' or '?' (plus
 * any closing quotes or brackets) when whitespace and then an uppercase
 * letter, digit or opening quote follow. A '.' after a known abbreviation or
 * a single-capital initial is not a boundary. A blank line always ends a
 * sentence. Sentences are trimmed of surrounding whitespace.
 *
 * Throws InvalidArgument for empty or whitespace-only input.
 */
Document parse(std::string raw_text, Segmentation mode = Segmentation::Rules, std::string id = {});

enum class Method { BiasedTextRank, TextRank, Lead };

std::string_view method_name(Method method);

struct SelectedSentence {
    std::size_t sentence_index = 0;
    double score = 0.0;
    /// 1-based position in rank order.
    std::size_t rank_position = 0;

    friend bool operator==(const SelectedSentence &, const SelectedSentence &) = default;
};

struct ExtractionResult {
    std::string document_id;
    Method method = Method::BiasedTextRank;
    /// In original document order.
    std::vector<SelectedSentence> selected;
    RankVector scores;
    RankerConfig config;
    std::string provider_id;
    std::size_t k = 0;
    std::vector<std::string> warnings;
};

/// Pipeline failure annotated with the document it happened in.
class DocumentError : public Error {
public:
    DocumentError(std::string document_id, const std::string &what)
        : Error("document '" + document_id + "': " + what), document_id(std::move(document_id)) {}

    std::string document_id;
};

/// The top min(k, n) entries of `scores` (ties to the lower index), listed in index order.
std::vector<SelectedSentence> select_top_k(std::span<const double> scores, std::size_t k);

/// Graph and restart weights of one document, shareable between the biased
/// run and the TextRank baseline so both rank the same graph.
struct PreparedDocument {
    SimilarityGraph graph;
    std::optional<RestartWeights> restart;
    std::string provider_id;
    std::vector<std::string> warnings;
};

enum class Restart { Bias, Uniform };

PreparedDocument prepare(const Document &document, const std::optional<std::string> &bias_text,
                         const EmbeddingProvider &provider, const RankerConfig &config);

/// Ranks a prepared document. Restart::Bias requires a bias text at prepare time.
ExtractionResult rank_prepared(const Document &document, const PreparedDocument &prepared, Restart restart,
                               const RankerConfig &config, std::size_t k);

/// Embed, build the graph, rank and select. Without a bias text this is TextRank.
ExtractionResult extract(const Document &document, const std::optional<std::string> &bias_text,
                         const EmbeddingProvider &provider, const RankerConfig &config, std::size_t k);

/// First min(k, n) sentences with zero scores.
ExtractionResult lead_k(const Document &document, std::size_t k);

/// Selected sentence texts joined by single spaces, in document order.
std::string selected_text(const Document &document, const ExtractionResult &result);

} // namespace focusrank
