#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <focusrank/embedding_vector.hpp>

namespace focusrank {

/// Parameters of the random walk with restart.
struct RankerConfig {
    static constexpr double DEFAULT_DAMPING = 0.85;
    static constexpr double DEFAULT_THRESHOLD = 0.65;
    static constexpr double DEFAULT_EPSILON = 1e-6;
    static constexpr std::size_t DEFAULT_MAX_ITERATIONS = 100;

    double damping = DEFAULT_DAMPING;
    double threshold = DEFAULT_THRESHOLD;
    /// Stop once the L1 distance between consecutive iterates is at most this.
    double epsilon = DEFAULT_EPSILON;
    std::size_t max_iterations = DEFAULT_MAX_ITERATIONS;

    /// Throws InvalidArgument unless 0 < damping < 1, 0 <= threshold < 1,
    /// epsilon > 0 and max_iterations >= 1.
    void validate() const;

    friend bool operator==(const RankerConfig &, const RankerConfig &) = default;
};

/**
 * Thresholded sentence-similarity graph stored as a dense row-major n x n
 * weight matrix. Weight (i, j) is the weight of the edge i -> j.
 *
 * Invariants: zero diagonal, symmetric, every nonzero weight is finite and
 * strictly above the construction threshold.
 */
class SimilarityGraph {
public:
    /// Validates and adopts an explicit weight matrix (row-major, n * n entries).
    static SimilarityGraph from_weights(std::size_t n, std::vector<double> weights, double threshold);

    std::size_t size() const noexcept { return n_; }
    double threshold() const noexcept { return threshold_; }
    double weight(std::size_t from, std::size_t to) const noexcept { return weights_[from * n_ + to]; }
    std::span<const double> row(std::size_t i) const noexcept {
        return std::span<const double>(weights_).subspan(i * n_, n_);
    }
    std::span<const double> weights() const noexcept { return weights_; }

    std::size_t edge_count() const noexcept;

private:
    SimilarityGraph(std::size_t n, std::vector<double> weights, double threshold)
        : n_(n), threshold_(threshold), weights_(std::move(weights)) {}

    std::size_t n_;
    double threshold_;
    std::vector<double> weights_;
};

/// Restart distribution over graph nodes: nonnegative, finite, sums to 1 (within 1e-9).
class BiasVector {
public:
    static constexpr double SUM_TOLERANCE = 1e-9;

    /// Adopts values that already form a distribution; throws otherwise.
    explicit BiasVector(std::vector<double> values);

    /// Scales nonnegative values to sum 1. Throws when the sum is not positive.
    static BiasVector normalized(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

private:
    std::vector<double> values_;
};

/// Stationary scores of a walk plus the iteration bookkeeping.
struct RankVector {
    std::vector<double> scores;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Output of bias_weights. `uniform_fallback` is set when no node had a
/// positive similarity to the bias and the uniform distribution was used.
struct RestartWeights {
    BiasVector bias;
    bool uniform_fallback = false;
};

double cosine_similarity(const EmbeddingVector &a, const EmbeddingVector &b);

/// Pairwise cosine graph with entries at or below config.threshold removed.
/// All-zero embeddings become isolated nodes.
SimilarityGraph build_graph(std::span<const EmbeddingVector> embeddings, const RankerConfig &config);

/// Restart probabilities proportional to max(0, cos(bias, e_i)).
RestartWeights bias_weights(const EmbeddingVector &bias_embedding,
                            std::span<const EmbeddingVector> embeddings);

BiasVector uniform_bias(std::size_t n);

/**
 * Biased random walk with restart by power iteration.
 *
 * Iterates r <- d * P^T r + (1 - d) * b from r = 1/n, where P is the
 * row-normalized weight matrix and all-zero rows jump according to b. Stops
 * when the L1 change is at most config.epsilon or after max_iterations.
 */
RankVector rank(const SimilarityGraph &graph, const BiasVector &bias, const RankerConfig &config);

/// Classic TextRank: rank() with the uniform restart distribution.
RankVector textrank(const SimilarityGraph &graph, const RankerConfig &config);

/// Node indices ordered by descending score, ties broken by lower index.
std::vector<std::size_t> order_by_score(std::span<const double> scores);

} // namespace focusrank
