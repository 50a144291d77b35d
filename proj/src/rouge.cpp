#include <focusrank/rouge.hpp>

#include <algorithm>
#include <map>

#include <focusrank/error.hpp>
#include <focusrank/text.hpp>

namespace focusrank::rouge {

namespace {

using NgramCounts = std::map<std::vector<std::string_view>, std::size_t>;

NgramCounts count_ngrams(std::span<const std::string> tokens, int n) {
    NgramCounts counts;
    const auto width = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i + width <= tokens.size(); ++i) {
        std::vector<std::string_view> gram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                           tokens.begin() + static_cast<std::ptrdiff_t>(i + width));
        ++counts[std::move(gram)];
    }
    return counts;
}

std::size_t total(const NgramCounts &counts) {
    std::size_t sum = 0;
    for (const auto &[gram, count] : counts)
        sum += count;
    return sum;
}

void accumulate(Score &into, const Score &add) {
    into.precision += add.precision;
    into.recall += add.recall;
    into.f1 += add.f1;
}

void scale(Score &score, double factor) {
    score.precision *= factor;
    score.recall *= factor;
    score.f1 *= factor;
}

} // namespace

Score Score::from_counts(double overlap, double candidate_total, double reference_total) {
    Score s;
    s.precision = candidate_total > 0.0 ? overlap / candidate_total : 0.0;
    s.recall = reference_total > 0.0 ? overlap / reference_total : 0.0;
    const double sum = s.precision + s.recall;
    s.f1 = sum > 0.0 ? 2.0 * s.precision * s.recall / sum : 0.0;
    return s;
}

Score rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n) {
    if (n != 1 && n != 2)
        throw InvalidArgument("rouge_n: n must be 1 or 2, got " + std::to_string(n));
    const auto reference_counts = count_ngrams(reference, n);
    if (reference_counts.empty())
        throw InvalidArgument("rouge_n: reference has no " + std::to_string(n) + "-grams");
    const auto candidate_counts = count_ngrams(candidate, n);

    std::size_t overlap = 0;
    for (const auto &[gram, count] : candidate_counts) {
        const auto it = reference_counts.find(gram);
        if (it != reference_counts.end())
            overlap += std::min(count, it->second);
    }
    return Score::from_counts(static_cast<double>(overlap), static_cast<double>(total(candidate_counts)),
                              static_cast<double>(total(reference_counts)));
}

Score rouge_n(std::string_view candidate, std::string_view reference, int n) {
    return rouge_n(text::tokenize(candidate), text::tokenize(reference), n);
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
    // Two-row dynamic program.
    std::vector<std::size_t> previous(b.size() + 1, 0);
    std::vector<std::size_t> current(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            current[j] = a[i - 1] == b[j - 1] ? previous[j - 1] + 1 : std::max(previous[j], current[j - 1]);
        }
        std::swap(previous, current);
    }
    return previous[b.size()];
}

Score rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
    if (candidate.empty() || reference.empty())
        throw InvalidArgument("rouge_l: candidate and reference must both have tokens");
    const auto lcs = static_cast<double>(lcs_length(candidate, reference));
    return Score::from_counts(lcs, static_cast<double>(candidate.size()), static_cast<double>(reference.size()));
}

Score rouge_l(std::string_view candidate, std::string_view reference) {
    return rouge_l(text::tokenize(candidate), text::tokenize(reference));
}

RougeScore score(std::string_view candidate, std::string_view reference) {
    const auto candidate_tokens = text::tokenize(candidate);
    const auto reference_tokens = text::tokenize(reference);
    return RougeScore{rouge_n(candidate_tokens, reference_tokens, 1), rouge_n(candidate_tokens, reference_tokens, 2),
                      rouge_l(candidate_tokens, reference_tokens)};
}

RougeScore mean(std::span<const RougeScore> scores) {
    if (scores.empty())
        throw InvalidArgument("rouge mean: no scores");
    RougeScore out;
    for (const auto &s : scores) {
        accumulate(out.rouge1, s.rouge1);
        accumulate(out.rouge2, s.rouge2);
        accumulate(out.rougeL, s.rougeL);
    }
    const double factor = 1.0 / static_cast<double>(scores.size());
    scale(out.rouge1, factor);
    scale(out.rouge2, factor);
    scale(out.rougeL, factor);
    return out;
}

CorpusScore evaluate_corpus(std::span<const std::pair<std::string, std::string>> pairs) {
    if (pairs.empty())
        throw InvalidArgument("evaluate_corpus: no pairs");
    CorpusScore out;
    out.per_pair.reserve(pairs.size());
    for (const auto &[candidate, reference] : pairs)
        out.per_pair.push_back(score(candidate, reference));
    out.mean = mean(out.per_pair);
    return out;
}

} // namespace focusrank::rouge
