#include <focusrank/runner.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

namespace focusrank {

namespace {

using Clock = std::chrono::steady_clock;

double milliseconds_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

RecordRun run_record(const TaskRecord &record, const EmbeddingProvider &provider, const TaskOptions &options) {
    const auto start = Clock::now();
    const Document document = [&] {
        try {
            return parse(record.text, options.segmentation, record.id);
        } catch (const Error &e) {
            throw DocumentError(record.id, e.what());
        }
    }();
    const std::string bias = options.bias_override.value_or(record.bias);
    const auto prepared = prepare(document, bias, provider, options.config);

    RecordRun out;
    out.record_id = record.id;
    out.sentence_count = document.sentences.size();

    auto add = [&](const ExtractionResult &result) {
        auto run = make_method_run(document, result);
        try {
            run.rouge = score_against_references(selected_text(document, result), record.references);
        } catch (const Error &e) {
            throw DocumentError(record.id, e.what());
        }
        out.runs.push_back(std::move(run));
    };
    add(rank_prepared(document, prepared, Restart::Bias, options.config, options.k));
    if (options.textrank_baseline)
        add(rank_prepared(document, prepared, Restart::Uniform, options.config, options.k));
    if (options.lead_baseline)
        add(lead_k(document, options.k));
    out.elapsed_ms = milliseconds_since(start);
    return out;
}

std::vector<MethodAggregate> aggregate(std::span<const RecordRun> records, std::size_t k) {
    std::vector<MethodAggregate> out;
    if (records.empty())
        return out;
    const std::size_t methods = records.front().runs.size();
    for (std::size_t m = 0; m < methods; ++m) {
        MethodAggregate agg;
        agg.method = records.front().runs[m].method;
        agg.k = k;
        std::vector<rouge::RougeScore> scores;
        double iterations = 0.0;
        for (const auto &record : records) {
            const auto &run = record.runs[m];
            iterations += static_cast<double>(run.iterations);
            if (run.rouge)
                scores.push_back(*run.rouge);
        }
        agg.mean_iterations = iterations / static_cast<double>(records.size());
        agg.scored_records = scores.size();
        if (!scores.empty())
            agg.mean = rouge::mean(scores);
        out.push_back(agg);
    }
    return out;
}

} // namespace

std::size_t default_k(Task task) {
    return task == Task::Summarize ? 20 : 4;
}

std::string_view task_name(Task task) {
    return task == Task::Summarize ? "summarize" : "explain";
}

std::optional<rouge::RougeScore> score_against_references(const std::string &candidate,
                                                          std::span<const std::string> references) {
    if (references.empty())
        return std::nullopt;
    std::vector<rouge::RougeScore> scores;
    scores.reserve(references.size());
    for (const auto &reference : references)
        scores.push_back(rouge::score(candidate, reference));
    return rouge::mean(scores);
}

TaskRun run_task(std::span<const TaskRecord> records, const ProviderLookup &providers, const TaskOptions &options) {
    options.config.validate();
    if (options.k == 0)
        throw InvalidArgument("k must be positive");
    const auto start = Clock::now();

    std::vector<std::optional<RecordRun>> results(records.size());
    std::vector<std::exception_ptr> errors(records.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
            try {
                const auto provider = providers(records[i]);
                results[i] = run_record(records[i], *provider, options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const unsigned jobs = std::clamp<unsigned>(options.jobs, 1, static_cast<unsigned>(std::max<std::size_t>(1, records.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    for (const auto &error : errors) {
        if (error)
            std::rethrow_exception(error);
    }

    TaskRun run;
    run.records.reserve(records.size());
    for (auto &result : results)
        run.records.push_back(std::move(*result));
    run.aggregates = aggregate(run.records, options.k);
    run.total_ms = milliseconds_since(start);
    return run;
}

} // namespace focusrank
