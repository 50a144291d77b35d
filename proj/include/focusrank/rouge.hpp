#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace focusrank::rouge {

/// Precision, recall and F1 of one ROUGE variant.
struct Score {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;

    static Score from_counts(double overlap, double candidate_total, double reference_total);
};

struct RougeScore {
    Score rouge1;
    Score rouge2;
    Score rougeL;
};

/// Clipped n-gram overlap, n in {1, 2}, over lowercased alphanumeric tokens.
/// Throws InvalidArgument for other n or when the reference has no n-grams.
Score rouge_n(std::string_view candidate, std::string_view reference, int n);
Score rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference, int n);

/// Summary-level LCS over the whole token sequences. Throws InvalidArgument
/// when either side has no tokens.
Score rouge_l(std::string_view candidate, std::string_view reference);
Score rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

RougeScore score(std::string_view candidate, std::string_view reference);

struct CorpusScore {
    RougeScore mean;
    std::vector<RougeScore> per_pair;
};

/// Arithmetic mean over pairs of (candidate, reference). Throws on an empty list.
CorpusScore evaluate_corpus(std::span<const std::pair<std::string, std::string>> pairs);

/// Arithmetic mean of already computed scores. Throws on an empty list.
RougeScore mean(std::span<const RougeScore> scores);

} // namespace focusrank::rouge
