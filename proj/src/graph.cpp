#include <focusrank/graph.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <focusrank/error.hpp>

namespace focusrank {

namespace {

std::string describe(double value) {
    return std::to_string(value);
}

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += a[i] * b[i];
    return sum;
}

// Cosine with both norms already known to be positive.
double cosine_with_norms(const EmbeddingVector &a, double norm_a, const EmbeddingVector &b, double norm_b) {
    const double c = dot(a.values(), b.values()) / (norm_a * norm_b);
    return std::clamp(c, -1.0, 1.0);
}

void require_same_dimension(std::span<const EmbeddingVector> embeddings, std::size_t dimension,
                            const char *where) {
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
        if (embeddings[i].dimension() != dimension)
            throw DimensionMismatch(dimension, embeddings[i].dimension(),
                                    std::string(where) + ": embedding " + std::to_string(i));
    }
}

// Compressed out-edge lists of the thresholded graph; zero weights are skipped.
struct AdjacencyLists {
    std::vector<std::size_t> offsets;
    std::vector<std::size_t> targets;
    std::vector<double> weights;
    std::vector<double> out_weight;

    explicit AdjacencyLists(const SimilarityGraph &graph) {
        const std::size_t n = graph.size();
        offsets.reserve(n + 1);
        offsets.push_back(0);
        out_weight.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = graph.row(i);
            for (std::size_t j = 0; j < n; ++j) {
                if (row[j] != 0.0) {
                    targets.push_back(j);
                    weights.push_back(row[j]);
                    out_weight[i] += row[j];
                }
            }
            offsets.push_back(targets.size());
        }
    }
};

} // namespace

void RankerConfig::validate() const {
    if (!(damping > 0.0 && damping < 1.0))
        throw InvalidArgument("damping must lie in (0, 1), got " + describe(damping));
    if (!(threshold >= 0.0 && threshold < 1.0))
        throw InvalidArgument("threshold must lie in [0, 1), got " + describe(threshold));
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InvalidArgument("epsilon must be positive, got " + describe(epsilon));
    if (max_iterations < 1)
        throw InvalidArgument("max_iterations must be at least 1");
}

SimilarityGraph SimilarityGraph::from_weights(std::size_t n, std::vector<double> weights, double threshold) {
    if (weights.size() != n * n)
        throw InvalidArgument("weight matrix must have " + std::to_string(n * n) + " entries, got "
                              + std::to_string(weights.size()));
    if (!(threshold >= 0.0 && threshold < 1.0))
        throw InvalidArgument("threshold must lie in [0, 1), got " + describe(threshold));
    for (std::size_t i = 0; i < n; ++i) {
        if (weights[i * n + i] != 0.0)
            throw InvalidArgument("self-loop at node " + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            const double w = weights[i * n + j];
            if (!std::isfinite(w))
                throw NonFiniteValue("non-finite weight at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            if (w != 0.0 && !(w > threshold))
                throw InvalidArgument("weight at (" + std::to_string(i) + ", " + std::to_string(j)
                                      + ") does not exceed threshold " + describe(threshold));
            if (w != weights[j * n + i])
                throw InvalidArgument("weight matrix is not symmetric at (" + std::to_string(i) + ", "
                                      + std::to_string(j) + ")");
        }
    }
    return SimilarityGraph(n, std::move(weights), threshold);
}

std::size_t SimilarityGraph::edge_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(weights_.begin(), weights_.end(), [](double w) { return w != 0.0; }));
}

BiasVector::BiasVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty())
        throw InvalidArgument("bias vector must not be empty");
    double sum = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw NonFiniteValue("bias entry " + std::to_string(i) + " is not finite");
        if (values_[i] < 0.0)
            throw InvalidArgument("bias entry " + std::to_string(i) + " is negative");
        sum += values_[i];
    }
    if (std::abs(sum - 1.0) > SUM_TOLERANCE)
        throw InvalidArgument("bias entries sum to " + describe(sum) + ", expected 1");
}

BiasVector BiasVector::normalized(std::vector<double> values) {
    double sum = 0.0;
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidArgument("bias weights must be finite and nonnegative");
        sum += v;
    }
    if (!(sum > 0.0))
        throw InvalidArgument("bias weights sum to zero");
    for (double &v : values)
        v /= sum;
    return BiasVector(std::move(values));
}

double cosine_similarity(const EmbeddingVector &a, const EmbeddingVector &b) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch(a.dimension(), b.dimension(), "cosine_similarity");
    const double norm_a = a.norm();
    const double norm_b = b.norm();
    if (norm_a == 0.0 || norm_b == 0.0)
        throw ZeroNormVector("cosine_similarity: zero-norm vector");
    return cosine_with_norms(a, norm_a, b, norm_b);
}

SimilarityGraph build_graph(std::span<const EmbeddingVector> embeddings, const RankerConfig &config) {
    config.validate();
    if (embeddings.empty())
        throw InvalidArgument("build_graph: no embeddings");
    require_same_dimension(embeddings, embeddings.front().dimension(), "build_graph");

    const std::size_t n = embeddings.size();
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i)
        norms[i] = embeddings[i].norm();

    std::vector<double> weights(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (norms[i] == 0.0)
            continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (norms[j] == 0.0)
                continue;
            const double sim = cosine_with_norms(embeddings[i], norms[i], embeddings[j], norms[j]);
            if (sim > config.threshold) {
                weights[i * n + j] = sim;
                weights[j * n + i] = sim;
            }
        }
    }
    return SimilarityGraph::from_weights(n, std::move(weights), config.threshold);
}

RestartWeights bias_weights(const EmbeddingVector &bias_embedding, std::span<const EmbeddingVector> embeddings) {
    if (embeddings.empty())
        throw InvalidArgument("bias_weights: no embeddings");
    require_same_dimension(embeddings, bias_embedding.dimension(), "bias_weights");
    const double bias_norm = bias_embedding.norm();
    if (bias_norm == 0.0)
        throw ZeroNormVector("bias_weights: bias embedding has zero norm");

    std::vector<double> raw(embeddings.size(), 0.0);
    bool any_positive = false;
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
        const double norm = embeddings[i].norm();
        if (norm == 0.0)
            continue;
        raw[i] = std::max(0.0, cosine_with_norms(bias_embedding, bias_norm, embeddings[i], norm));
        any_positive = any_positive || raw[i] > 0.0;
    }
    if (!any_positive)
        return {uniform_bias(embeddings.size()), true};
    return {BiasVector::normalized(std::move(raw)), false};
}

BiasVector uniform_bias(std::size_t n) {
    if (n == 0)
        throw InvalidArgument("uniform_bias: node count must be positive");
    return BiasVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

RankVector rank(const SimilarityGraph &graph, const BiasVector &bias, const RankerConfig &config) {
    config.validate();
    const std::size_t n = graph.size();
    if (n == 0)
        throw InvalidArgument("rank: empty graph");
    if (bias.size() != n)
        throw DimensionMismatch(n, bias.size(), "rank: bias length vs node count");

    const AdjacencyLists adjacency(graph);
    const double d = config.damping;
    const auto b = bias.values();

    RankVector result;
    result.scores.assign(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);

    while (result.iterations < config.max_iterations) {
        double dangling = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (adjacency.out_weight[j] == 0.0)
                dangling += result.scores[j];
        }
        const double restart_scale = (1.0 - d) + d * dangling;
        for (std::size_t i = 0; i < n; ++i)
            next[i] = restart_scale * b[i];

        for (std::size_t j = 0; j < n; ++j) {
            if (adjacency.out_weight[j] == 0.0)
                continue;
            const double share = d * result.scores[j] / adjacency.out_weight[j];
            for (std::size_t e = adjacency.offsets[j]; e < adjacency.offsets[j + 1]; ++e)
                next[adjacency.targets[e]] += share * adjacency.weights[e];
        }

        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(next[i]))
                throw NonFiniteValue("rank: non-finite score at node " + std::to_string(i));
            change += std::abs(next[i] - result.scores[i]);
        }
        result.scores.swap(next);
        ++result.iterations;
        if (change <= config.epsilon) {
            result.converged = true;
            break;
        }
    }
    return result;
}

RankVector textrank(const SimilarityGraph &graph, const RankerConfig &config) {
    if (graph.size() == 0)
        throw InvalidArgument("textrank: empty graph");
    return rank(graph, uniform_bias(graph.size()), config);
}

std::vector<std::size_t> order_by_score(std::span<const double> scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    return order;
}

} // namespace focusrank
