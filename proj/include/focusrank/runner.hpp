#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <focusrank/corpus.hpp>
#include <focusrank/embeddings.hpp>
#include <focusrank/pipeline.hpp>

namespace focusrank {

enum class Task { Summarize, Explain };

/// 20 sentences for focused summaries, 4 for explanations.
std::size_t default_k(Task task);
std::string_view task_name(Task task);

struct TaskOptions {
    RankerConfig config;
    std::size_t k = 20;
    bool textrank_baseline = false;
    bool lead_baseline = false;
    Segmentation segmentation = Segmentation::Rules;
    /// Replaces every record's bias text when set.
    std::optional<std::string> bias_override;
    unsigned jobs = 1;
};

using ProviderLookup = std::function<std::shared_ptr<const EmbeddingProvider>(const TaskRecord &)>;

struct TaskRun {
    std::vector<RecordRun> records;
    /// Biased TextRank first, then TextRank and Lead when requested.
    std::vector<MethodAggregate> aggregates;
    double total_ms = 0.0;
};

/// ROUGE of `candidate` against each reference, averaged. Absent without references.
std::optional<rouge::RougeScore> score_against_references(const std::string &candidate,
                                                          std::span<const std::string> references);

/**
 * Runs Biased TextRank (and the requested baselines) on every record.
 * TextRank shares the biased run's graph and differs only in its uniform
 * restart. Records run on up to `jobs` threads; results keep corpus order.
 * The first failing record (in corpus order) is rethrown after all workers
 * finish.
 */
TaskRun run_task(std::span<const TaskRecord> records, const ProviderLookup &providers, const TaskOptions &options);

} // namespace focusrank
