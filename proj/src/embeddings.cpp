#include <focusrank/embeddings.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include <focusrank/error.hpp>
#include <focusrank/text.hpp>

namespace focusrank {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::vector<std::string> content_terms(std::string_view span, const StopwordSet &stopwords) {
    std::vector<std::string> terms;
    for (auto &token : text::tokenize(span)) {
        if (!stopwords.contains(token))
            terms.push_back(std::move(token));
    }
    return terms;
}

EmbeddingVector weigh(const std::vector<std::string> &terms, const std::map<std::string, std::size_t> &column,
                      const std::vector<double> &idf) {
    std::vector<double> values(idf.size(), 0.0);
    for (const auto &term : terms)
        values[column.at(term)] += 1.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] *= idf[i];
        norm += values[i] * values[i];
    }
    if (norm > 0.0) {
        norm = std::sqrt(norm);
        for (double &v : values)
            v /= norm;
    }
    return EmbeddingVector(std::move(values));
}

std::size_t require_size(const json &value, const char *key, const std::string &where, std::size_t line) {
    const auto it = value.find(key);
    if (it == value.end() || !it->is_number_unsigned())
        throw FormatError(where + ": line " + std::to_string(line) + ": '" + key
                          + "' must be a nonnegative integer", line);
    return it->get<std::size_t>();
}

} // namespace

const StopwordSet &default_stopwords() {
    static const StopwordSet words = {
        "a",       "about",   "above",   "after",   "again",   "against",  "ain",     "all",
        "also",    "am",      "an",      "and",     "any",     "are",      "aren",    "as",
        "at",      "be",      "because", "been",    "before",  "being",    "below",   "between",
        "both",    "but",     "by",      "can",     "could",   "couldn",   "d",       "did",
        "didn",    "do",      "does",    "doesn",   "doing",   "don",      "down",    "during",
        "each",    "even",    "few",     "for",     "from",    "further",  "had",     "hadn",
        "has",     "hasn",    "have",    "haven",   "having",  "he",       "her",     "here",
        "hers",    "herself", "him",     "himself", "his",     "how",      "i",       "if",
        "in",      "into",    "is",      "isn",     "it",      "its",      "itself",  "just",
        "ll",      "m",       "may",     "me",      "might",   "more",     "most",    "must",
        "my",      "myself",  "no",      "nor",     "not",     "now",      "o",       "of",
        "off",     "on",      "once",    "only",    "or",      "other",    "our",     "ours",
        "ourselves", "out",   "over",    "own",     "re",      "s",        "same",    "shall",
        "she",     "should",  "shouldn", "so",      "some",    "such",     "t",       "than",
        "that",    "the",     "their",   "theirs",  "them",    "themselves", "then",  "there",
        "these",   "they",    "this",    "those",   "through", "to",       "too",     "under",
        "until",   "up",      "us",      "ve",      "very",    "was",      "wasn",    "we",
        "were",    "weren",   "what",    "when",    "where",   "which",    "while",   "who",
        "whom",    "why",     "will",    "with",    "won",     "would",    "wouldn",  "y",
        "yet",     "you",     "your",    "yours",   "yourself", "yourselves",
    };
    return words;
}

StopwordSet load_stopwords(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open stopword file " + path.string());
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        for (auto &token : text::tokenize(line))
            words.insert(std::move(token));
    }
    return words;
}

EmbeddedDocument tfidf_embed(std::span<const std::string> spans, const std::optional<std::string> &bias,
                             const StopwordSet &stopwords) {
    if (spans.empty())
        throw InvalidArgument("tfidf_embed: no spans");

    std::vector<std::vector<std::string>> documents;
    documents.reserve(spans.size() + 1);
    for (const auto &span : spans)
        documents.push_back(content_terms(span, stopwords));
    if (bias) {
        documents.push_back(content_terms(*bias, stopwords));
        if (documents.back().empty())
            throw InvalidArgument("tfidf_embed: bias text has no content terms after filtering");
    }

    std::map<std::string, std::size_t> document_frequency;
    for (const auto &terms : documents) {
        std::set<std::string_view> seen(terms.begin(), terms.end());
        for (auto term : seen)
            ++document_frequency[std::string(term)];
    }
    if (document_frequency.empty())
        throw InvalidArgument("tfidf_embed: no content terms in any span");

    const double n_documents = static_cast<double>(documents.size());
    std::map<std::string, std::size_t> column;
    std::vector<double> idf;
    idf.reserve(document_frequency.size());
    for (const auto &[term, df] : document_frequency) {
        column.emplace(term, idf.size());
        idf.push_back(std::log((1.0 + n_documents) / (1.0 + static_cast<double>(df))) + 1.0);
    }

    EmbeddedDocument out;
    out.sentences.provider_id = "tfidf";
    out.sentences.vectors.reserve(spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i) {
        if (documents[i].empty())
            out.zero_spans.push_back(i);
        out.sentences.vectors.push_back(weigh(documents[i], column, idf));
    }
    if (bias)
        out.bias = weigh(documents.back(), column, idf);
    return out;
}

std::string TfidfProvider::id() const {
    return "tfidf";
}

EmbeddedDocument TfidfProvider::embed(std::span<const std::string> spans,
                                      const std::optional<std::string> &bias) const {
    return tfidf_embed(spans, bias, stopwords_);
}

EmbeddingFile read_embedding_file(std::istream &in, const std::string &source) {
    EmbeddingFile file;
    std::string line;
    std::size_t line_number = 0;

    auto parse_line = [&](const std::string &content) {
        try {
            auto value = json::parse(content);
            if (!value.is_object())
                throw FormatError(source + ": line " + std::to_string(line_number) + ": expected a JSON object",
                                  line_number);
            return value;
        } catch (const json::parse_error &e) {
            throw FormatError(source + ": line " + std::to_string(line_number) + ": malformed JSON: " + e.what(),
                              line_number);
        }
    };

    if (!std::getline(in, line))
        throw FormatError(source + ": missing header line", 1);
    ++line_number;
    const auto header = parse_line(line);
    const auto provider = header.find("provider");
    if (provider == header.end() || !provider->is_string())
        throw FormatError(source + ": line 1: header 'provider' must be a string", 1);
    file.header.provider = provider->get<std::string>();
    file.header.dimension = require_size(header, "dimension", source, 1);
    file.header.count = require_size(header, "count", source, 1);
    if (file.header.dimension == 0)
        throw FormatError(source + ": line 1: header 'dimension' must be positive", 1);

    while (std::getline(in, line)) {
        ++line_number;
        const auto record = parse_line(line);
        const std::size_t expected_index = file.vectors.size();
        const std::size_t index = require_size(record, "index", source, line_number);
        if (index != expected_index)
            throw FormatError(source + ": line " + std::to_string(line_number) + ": expected index "
                              + std::to_string(expected_index) + ", found " + std::to_string(index),
                              line_number);
        const auto vector = record.find("vector");
        if (vector == record.end() || !vector->is_array())
            throw FormatError(source + ": line " + std::to_string(line_number) + ": 'vector' must be an array",
                              line_number);
        if (vector->size() != file.header.dimension)
            throw DimensionMismatch(file.header.dimension, vector->size(),
                                    source + ": record " + std::to_string(index) + " (line "
                                        + std::to_string(line_number) + ")");
        std::vector<double> values;
        values.reserve(vector->size());
        for (const auto &entry : *vector) {
            if (!entry.is_number())
                throw FormatError(source + ": line " + std::to_string(line_number) + ": non-numeric vector entry",
                                  line_number);
            values.push_back(entry.get<double>());
        }
        try {
            file.vectors.emplace_back(std::move(values));
        } catch (const Error &e) {
            throw FormatError(source + ": line " + std::to_string(line_number) + ": " + e.what(), line_number);
        }
    }
    if (file.vectors.size() != file.header.count)
        throw CountMismatch(file.header.count, file.vectors.size(), source + " (header count vs records)");
    return file;
}

EmbeddingFile read_embedding_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open embedding file " + path.string());
    return read_embedding_file(in, path.string());
}

void write_embedding_file(std::ostream &out, const std::string &provider, std::span<const EmbeddingVector> vectors) {
    if (vectors.empty())
        throw InvalidArgument("write_embedding_file: no vectors");
    const std::size_t dimension = vectors.front().dimension();
    ordered_json header;
    header["provider"] = provider;
    header["dimension"] = dimension;
    header["count"] = vectors.size();
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].dimension() != dimension)
            throw DimensionMismatch(dimension, vectors[i].dimension(), "write_embedding_file: vector " + std::to_string(i));
        ordered_json record;
        record["index"] = i;
        record["vector"] = std::vector<double>(vectors[i].values().begin(), vectors[i].values().end());
        out << record.dump() << '\n';
    }
}

void write_embedding_file(const std::filesystem::path &path, const std::string &provider,
                          std::span<const EmbeddingVector> vectors) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write embedding file " + path.string());
    write_embedding_file(out, provider, vectors);
    if (!out)
        throw IoError("failed writing embedding file " + path.string());
}

EmbeddingBatch load_embeddings(const std::filesystem::path &path, std::size_t expected_count) {
    auto file = read_embedding_file(path);
    if (file.vectors.size() != expected_count)
        throw CountMismatch(expected_count, file.vectors.size(), path.string());
    return EmbeddingBatch{std::move(file.vectors), std::move(file.header.provider)};
}

std::string FileEmbeddingProvider::id() const {
    return "file";
}

EmbeddedDocument FileEmbeddingProvider::embed(std::span<const std::string> spans,
                                              const std::optional<std::string> &bias) const {
    if (spans.empty())
        throw InvalidArgument("file embeddings: no spans");
    auto file = read_embedding_file(path_);
    const std::size_t n = spans.size();
    const std::size_t found = file.vectors.size();
    if (bias ? found != n + 1 : (found != n && found != n + 1))
        throw CountMismatch(bias ? n + 1 : n, found, path_.string());

    EmbeddedDocument out;
    out.sentences.provider_id = "file:" + file.header.provider;
    if (bias)
        out.bias = file.vectors.back();
    file.vectors.erase(file.vectors.begin() + static_cast<std::ptrdiff_t>(n), file.vectors.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (file.vectors[i].is_zero())
            out.zero_spans.push_back(i);
    }
    out.sentences.vectors = std::move(file.vectors);
    return out;
}

} // namespace focusrank
