#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <focusrank/corpus.hpp>

namespace focusrank {

struct SyntheticOptions {
    std::size_t records = 5;
    std::size_t sentences = 100;
    /// Length of the single reference per record, in sentences.
    std::size_t reference_sentences = 20;
    std::uint64_t seed = 20201208;
};

/**
 * Desk-scale two-topic corpus. Each transcript mixes procedural sentences,
 * a large and tightly knit off-focus topic (the economy) and a smaller,
 * looser on-focus topic (health care). Bias texts and references describe
 * the on-focus topic, and transcripts open with procedural sentences, so a
 * focus-aware ranker should beat both TextRank and Lead-k. Output is fully
 * determined by the options.
 */
std::vector<TaskRecord> synthetic_two_topic_corpus(const SyntheticOptions &options = {});

} // namespace focusrank
