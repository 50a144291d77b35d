#include <focusrank/synthetic.hpp>

#include <algorithm>
#include <array>
#include <random>
#include <span>
#include <string>

namespace focusrank {

namespace {

constexpr std::array<const char *, 12> HEALTH = {
    "health",   "insurance", "hospital", "patients",     "medicare", "doctors",
    "coverage", "medicine",  "nurses",   "prescription", "clinics",  "treatment",
};
constexpr std::array<const char *, 6> ECONOMY = {
    "taxes", "jobs", "economy", "budget", "deficit", "wages",
};
constexpr std::array<const char *, 8> PROCEDURE = {
    "question", "answer", "rebuttal", "minutes", "segment", "audience", "applause", "rules",
};
constexpr std::array<const char *, 6> SPEAKERS = {
    "The senator", "The governor", "The candidate", "The president", "The challenger", "The nominee",
};
constexpr std::array<const char *, 6> VERBS = {
    "promised", "defended", "criticized", "mentioned", "addressed", "questioned",
};

class Picker {
public:
    explicit Picker(std::uint64_t seed) : engine_(seed) {}

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

    template <std::size_t N>
    const char *one(const std::array<const char *, N> &pool) {
        return pool[index(N)];
    }

    // `count` distinct words from the pool, in random order.
    template <std::size_t N>
    std::vector<const char *> distinct(const std::array<const char *, N> &pool, std::size_t count) {
        std::vector<const char *> words(pool.begin(), pool.end());
        for (std::size_t i = 0; i < count; ++i)
            std::swap(words[i], words[i + index(N - i)]);
        words.resize(count);
        return words;
    }

private:
    std::mt19937_64 engine_;
};

std::string topic_sentence(Picker &pick, const std::vector<const char *> &words) {
    return std::string(pick.one(SPEAKERS)) + " " + pick.one(VERBS) + " plans for " + words[0] + " and " + words[1]
           + " while talking about " + words[2] + " " + words[3] + ".";
}

std::string procedural_sentence(Picker &pick) {
    const auto words = pick.distinct(PROCEDURE, 3);
    return std::string("The moderator asked for the ") + words[0] + " and " + words[1] + " before the next "
           + words[2] + ".";
}

std::string reference_sentence(Picker &pick) {
    const auto words = pick.distinct(HEALTH, 4);
    return std::string("Voters heard plans for ") + words[0] + " and " + words[1] + " as the candidates argued over "
           + words[2] + " " + words[3] + ".";
}

enum class Kind { Procedure, Health, Economy, Bridge };

std::string make_sentence(Picker &pick, Kind kind) {
    switch (kind) {
    case Kind::Procedure:
        return procedural_sentence(pick);
    case Kind::Health:
        return topic_sentence(pick, pick.distinct(HEALTH, 4));
    case Kind::Economy:
        return topic_sentence(pick, pick.distinct(ECONOMY, 4));
    case Kind::Bridge: {
        auto words = pick.distinct(HEALTH, 2);
        const auto economy = pick.distinct(ECONOMY, 2);
        words.insert(words.end(), economy.begin(), economy.end());
        return topic_sentence(pick, words);
    }
    }
    return {};
}

} // namespace

std::vector<TaskRecord> synthetic_two_topic_corpus(const SyntheticOptions &options) {
    Picker pick(options.seed);
    std::vector<TaskRecord> records;
    const std::size_t opening = std::min<std::size_t>(8, options.sentences);
    for (std::size_t r = 0; r < options.records; ++r) {
        std::vector<Kind> kinds(opening, Kind::Procedure);
        for (std::size_t i = opening; i < options.sentences; ++i) {
            const std::size_t roll = pick.index(100);
            kinds.push_back(roll < 25 ? Kind::Health : roll < 70 ? Kind::Economy : roll < 75 ? Kind::Bridge
                                                                                              : Kind::Procedure);
        }

        std::string text;
        for (std::size_t i = 0; i < kinds.size(); ++i) {
            if (i > 0)
                text += (i % 10 == 0) ? "\n\n" : " ";
            text += make_sentence(pick, kinds[i]);
        }

        std::string reference;
        for (std::size_t s = 0; s < options.reference_sentences; ++s) {
            if (s > 0)
                reference += ' ';
            reference += reference_sentence(pick);
        }

        TaskRecord record;
        record.id = "debate-" + std::to_string(r + 1);
        record.text = std::move(text);
        record.bias = "Affordable health care: insurance coverage, hospitals, doctors, nurses and medicine for "
                      "every patient.";
        record.references = {std::move(reference)};
        record.meta = {{"generator", "synthetic-two-topic"}, {"seed", std::to_string(options.seed)}};
        records.push_back(std::move(record));
    }
    return records;
}

} // namespace focusrank
