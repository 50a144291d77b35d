#include <focusrank/pipeline.hpp>

#include <algorithm>
#include <array>
#include <set>

#include <focusrank/text.hpp>

namespace focusrank {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

const std::set<std::string, std::less<>> &abbreviations() {
    static const std::set<std::string, std::less<>> words = {
        "a.m", "al",   "approx", "apr",  "aug",  "capt", "cf",   "co",  "col",  "corp", "dec",
        "dept", "dr",  "e.g",    "est",  "etc",  "feb",  "fig",  "gen", "gov",  "i.e",  "inc",
        "jan", "jr",   "jul",    "jun",  "lt",   "ltd",  "maj",  "mar", "messrs", "mr", "mrs",
        "ms",  "mt",   "no",     "nov",  "oct",  "p.m",  "ph.d", "pres", "prof", "rep", "rev",
        "sen", "sep",  "sept",   "sgt",  "sr",   "st",   "u.k",  "u.n", "u.s",  "u.s.a", "vs",
    };
    return words;
}

// Closing punctuation that stays attached to the sentence it ends.
std::size_t skip_closers(std::string_view text, std::size_t pos) {
    static constexpr std::array<char32_t, 7> closers = {U'"', U'\'', U')', U']', U'”', U'’', U'»'};
    while (pos < text.size()) {
        std::size_t next = pos;
        const char32_t cp = text::decode_utf8(text, next);
        if (std::find(closers.begin(), closers.end(), cp) == closers.end())
            break;
        pos = next;
    }
    return pos;
}

bool opens_sentence(std::string_view text, std::size_t pos) {
    static constexpr std::array<char32_t, 7> openers = {U'"', U'\'', U'(', U'[', U'“', U'‘', U'«'};
    const char32_t cp = text::decode_utf8(text, pos);
    return text::is_upper(cp) || (cp >= U'0' && cp <= U'9')
           || std::find(openers.begin(), openers.end(), cp) != openers.end();
}

// The word immediately before a terminating period, lowercased, with
// leading brackets or quotes removed.
bool ends_with_abbreviation(std::string_view text, std::size_t period) {
    std::size_t start = period;
    while (start > 0 && !is_space(text[start - 1]))
        --start;
    std::string_view word = text.substr(start, period - start);
    while (!word.empty() && (word.front() == '(' || word.front() == '"' || word.front() == '\''
                             || word.front() == '['))
        word.remove_prefix(1);
    if (word.empty())
        return false;
    if (word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z' && word[0] != 'I')
        return true;
    std::string lowered;
    std::size_t pos = 0;
    while (pos < word.size())
        text::append_utf8(lowered, text::to_lower(text::decode_utf8(word, pos)));
    return abbreviations().contains(lowered);
}

bool blank_line_follows(std::string_view text, std::size_t newline) {
    std::size_t pos = newline + 1;
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
        ++pos;
    return pos < text.size() && text[pos] == '\n';
}

std::vector<std::size_t> rule_boundaries(std::string_view text) {
    std::vector<std::size_t> cuts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == '\n' && blank_line_follows(text, pos)) {
            cuts.push_back(pos);
            ++pos;
            continue;
        }
        if (c != '.' && c != '!' && c != '?') {
            ++pos;
            continue;
        }
        const std::size_t terminator = pos;
        std::size_t end = pos;
        while (end < text.size() && (text[end] == '.' || text[end] == '!' || text[end] == '?'))
            ++end;
        const bool single_period = end - terminator == 1 && c == '.';
        end = skip_closers(text, end);
        pos = end;
        if (end == text.size()) {
            cuts.push_back(end);
            break;
        }
        if (!is_space(text[end]))
            continue;
        std::size_t next = end;
        while (next < text.size() && is_space(text[next]))
            ++next;
        if (next == text.size()) {
            cuts.push_back(end);
            break;
        }
        if (!opens_sentence(text, next))
            continue;
        if (single_period && ends_with_abbreviation(text, terminator))
            continue;
        cuts.push_back(end);
    }
    return cuts;
}

void append_trimmed(Document &document, std::size_t begin, std::size_t end) {
    const std::string_view raw = document.raw_text;
    while (begin < end && is_space(raw[begin]))
        ++begin;
    while (end > begin && is_space(raw[end - 1]))
        --end;
    if (begin == end)
        return;
    document.sentences.push_back(
        Sentence{document.sentences.size(), begin, end, std::string(raw.substr(begin, end - begin))});
}

ExtractionResult make_result(const Document &document, Method method, RankVector scores, const RankerConfig &config,
                             std::string provider_id, std::size_t k) {
    ExtractionResult result;
    result.document_id = document.id;
    result.method = method;
    result.selected = select_top_k(scores.scores, k);
    result.scores = std::move(scores);
    result.config = config;
    result.provider_id = std::move(provider_id);
    result.k = k;
    return result;
}

void require_sentences(const Document &document, std::size_t k) {
    if (document.sentences.empty())
        throw DocumentError(document.id, "document has no sentences");
    if (k == 0)
        throw DocumentError(document.id, "k must be positive");
}

} // namespace

std::vector<std::string> Document::sentence_texts() const {
    std::vector<std::string> texts;
    texts.reserve(sentences.size());
    for (const auto &sentence : sentences)
        texts.push_back(sentence.text);
    return texts;
}

Document parse(std::string raw_text, Segmentation mode, std::string id) {
    if (std::all_of(raw_text.begin(), raw_text.end(), is_space))
        throw InvalidArgument("parse: input text is empty");

    Document document{std::move(id), std::move(raw_text), {}};
    const std::string_view raw = document.raw_text;
    std::size_t start = 0;
    if (mode == Segmentation::PreSegmented) {
        while (start <= raw.size()) {
            std::size_t end = raw.find('\n', start);
            if (end == std::string_view::npos)
                end = raw.size();
            append_trimmed(document, start, end);
            start = end + 1;
        }
        return document;
    }
    for (std::size_t cut : rule_boundaries(raw)) {
        append_trimmed(document, start, cut);
        start = cut;
    }
    append_trimmed(document, start, raw.size());
    return document;
}

std::string_view method_name(Method method) {
    switch (method) {
    case Method::BiasedTextRank:
        return "biased-textrank";
    case Method::TextRank:
        return "textrank";
    case Method::Lead:
        return "lead";
    }
    return "unknown";
}

std::vector<SelectedSentence> select_top_k(std::span<const double> scores, std::size_t k) {
    const auto order = order_by_score(scores);
    const std::size_t count = std::min(k, scores.size());
    std::vector<SelectedSentence> selected;
    selected.reserve(count);
    for (std::size_t position = 0; position < count; ++position)
        selected.push_back({order[position], scores[order[position]], position + 1});
    std::sort(selected.begin(), selected.end(),
              [](const auto &a, const auto &b) { return a.sentence_index < b.sentence_index; });
    return selected;
}

PreparedDocument prepare(const Document &document, const std::optional<std::string> &bias_text,
                         const EmbeddingProvider &provider, const RankerConfig &config) {
    if (document.sentences.empty())
        throw DocumentError(document.id, "document has no sentences");
    try {
        const auto spans = document.sentence_texts();
        auto embedded = provider.embed(spans, bias_text);
        if (embedded.sentences.size() != spans.size())
            throw CountMismatch(spans.size(), embedded.sentences.size(), "embedding provider " + provider.id());

        std::vector<std::string> warnings;
        for (std::size_t index : embedded.zero_spans)
            warnings.push_back("sentence " + std::to_string(index) + " has no content terms; embedded as zero vector");

        auto graph = build_graph(embedded.sentences.vectors, config);
        std::optional<RestartWeights> restart;
        if (bias_text) {
            if (!embedded.bias)
                throw InvalidArgument("embedding provider returned no bias vector");
            restart = bias_weights(*embedded.bias, embedded.sentences.vectors);
            if (restart->uniform_fallback)
                warnings.emplace_back("no sentence is similar to the bias text; using uniform restart");
        }
        return PreparedDocument{std::move(graph), std::move(restart), std::move(embedded.sentences.provider_id),
                                std::move(warnings)};
    } catch (const DocumentError &) {
        throw;
    } catch (const Error &e) {
        throw DocumentError(document.id, e.what());
    }
}

ExtractionResult rank_prepared(const Document &document, const PreparedDocument &prepared, Restart restart,
                               const RankerConfig &config, std::size_t k) {
    require_sentences(document, k);
    if (prepared.graph.size() != document.sentences.size())
        throw DocumentError(document.id, "prepared graph does not match the document");
    try {
        const bool biased = restart == Restart::Bias;
        if (biased && !prepared.restart)
            throw InvalidArgument("biased ranking requested without a bias text");
        auto scores = biased ? rank(prepared.graph, prepared.restart->bias, config) : textrank(prepared.graph, config);
        auto result = make_result(document, biased ? Method::BiasedTextRank : Method::TextRank, std::move(scores),
                                  config, prepared.provider_id, k);
        result.warnings = prepared.warnings;
        if (!result.scores.converged)
            result.warnings.push_back("stopped after " + std::to_string(result.scores.iterations)
                                      + " iterations without reaching the convergence tolerance");
        return result;
    } catch (const Error &e) {
        throw DocumentError(document.id, e.what());
    }
}

ExtractionResult extract(const Document &document, const std::optional<std::string> &bias_text,
                         const EmbeddingProvider &provider, const RankerConfig &config, std::size_t k) {
    require_sentences(document, k);
    const auto prepared = prepare(document, bias_text, provider, config);
    return rank_prepared(document, prepared, bias_text ? Restart::Bias : Restart::Uniform, config, k);
}

ExtractionResult lead_k(const Document &document, std::size_t k) {
    require_sentences(document, k);
    RankVector scores;
    scores.scores.assign(document.sentences.size(), 0.0);
    scores.converged = true;
    ExtractionResult result;
    result.document_id = document.id;
    result.method = Method::Lead;
    const std::size_t count = std::min(k, document.sentences.size());
    for (std::size_t i = 0; i < count; ++i)
        result.selected.push_back({i, 0.0, i + 1});
    result.scores = std::move(scores);
    result.provider_id = "none";
    result.k = k;
    return result;
}

std::string selected_text(const Document &document, const ExtractionResult &result) {
    std::string out;
    for (const auto &selected : result.selected) {
        if (!out.empty())
            out.push_back(' ');
        out += document.sentences.at(selected.sentence_index).text;
    }
    return out;
}

} // namespace focusrank
