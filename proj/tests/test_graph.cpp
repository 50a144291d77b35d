#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

#include <focusrank/error.hpp>
#include <focusrank/graph.hpp>

#include "oracle.hpp"

using namespace focusrank;

namespace {

std::vector<EmbeddingVector> vectors(std::initializer_list<std::vector<double>> rows) {
    std::vector<EmbeddingVector> out;
    for (const auto &row : rows)
        out.emplace_back(row);
    return out;
}

// Iterates to the fixpoint rather than to the default 1e-6 stopping rule.
RankerConfig tight(double damping = 0.85) {
    RankerConfig config;
    config.damping = damping;
    config.epsilon = 1e-14;
    config.max_iterations = 5000;
    return config;
}

double sum(std::span<const double> values) {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

// Two-colours the graph by BFS; `connected` and `bipartite` describe the result.
struct Shape {
    bool connected = true;
    bool bipartite = true;
};

Shape shape_of(const SimilarityGraph &graph) {
    const std::size_t n = graph.size();
    std::vector<int> colour(n, -1);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    colour[0] = 0;
    std::size_t reached = 1;
    Shape shape;
    while (!frontier.empty()) {
        const auto i = frontier.front();
        frontier.pop();
        for (std::size_t j = 0; j < n; ++j) {
            if (graph.weight(i, j) == 0.0)
                continue;
            if (colour[j] < 0) {
                colour[j] = 1 - colour[i];
                ++reached;
                frontier.push(j);
            } else if (colour[j] == colour[i]) {
                shape.bipartite = false;
            }
        }
    }
    shape.connected = reached == n;
    return shape;
}

} // namespace

TEST_CASE("cosine similarity") {
    CHECK(cosine_similarity(EmbeddingVector({3, 4}), EmbeddingVector({3, 4})) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cosine_similarity(EmbeddingVector({1, 0}), EmbeddingVector({0, 1})) == 0.0);
    CHECK(cosine_similarity(EmbeddingVector({1, 1}), EmbeddingVector({1, 0}))
          == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));

    const EmbeddingVector a({0.3, -1.2, 4.0});
    const EmbeddingVector b({2.0, 0.5, -0.1});
    CHECK(cosine_similarity(a, b) == cosine_similarity(b, a));

    CHECK_THROWS_AS(cosine_similarity(EmbeddingVector({1, 0}), EmbeddingVector({1, 0, 0})), DimensionMismatch);
    CHECK_THROWS_AS(cosine_similarity(EmbeddingVector({0, 0}), EmbeddingVector({1, 0})), ZeroNormVector);
    CHECK_THROWS_AS(cosine_similarity(EmbeddingVector({1, 0}), EmbeddingVector({0, 0})), ZeroNormVector);
}

TEST_CASE("embedding vectors reject empty and non-finite input") {
    CHECK_THROWS_AS(EmbeddingVector(std::vector<double>{}), InvalidArgument);
    CHECK_THROWS_AS(EmbeddingVector({1.0, std::nan("")}), NonFiniteValue);
    CHECK_THROWS_AS(EmbeddingVector({INFINITY}), NonFiniteValue);
}

TEST_CASE("build_graph") {
    RankerConfig config;

    SUBCASE("identical pair linked, orthogonal node isolated") {
        const auto graph = build_graph(vectors({{1, 0}, {1, 0}, {0, 1}}), config);
        REQUIRE(graph.size() == 3);
        CHECK(graph.weight(0, 1) == doctest::Approx(1.0));
        CHECK(graph.weight(1, 0) == doctest::Approx(1.0));
        CHECK(graph.edge_count() == 2);
    }

    SUBCASE("single node has no self loop") {
        const auto graph = build_graph(vectors({{1, 1}}), config);
        CHECK(graph.size() == 1);
        CHECK(graph.weight(0, 0) == 0.0);
    }

    SUBCASE("threshold 0 keeps the full cosine matrix (oracle: tests/oracles/cosine_oracle.py)") {
        config.threshold = 0.0;
        const auto graph = build_graph(vectors({{0.31, 1.2, 0.77, 2.05, 0.44, 0.9, 1.5, 0.03},
                                                {1.1, 0.25, 0.6, 1.8, 0.35, 1.4, 0.05, 0.66},
                                                {0.72, 0.48, 1.9, 0.12, 1.05, 0.58, 0.94, 1.27}}),
                                       config);
        const double expected[3][3] = {
            {0.0, 0.74857033628091108, 0.5535676269356562},
            {0.74857033628091108, 0.0, 0.55281701706095843},
            {0.5535676269356562, 0.55281701706095843, 0.0},
        };
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(graph.weight(i, j) == doctest::Approx(expected[i][j]).epsilon(1e-14));
    }

    SUBCASE("zero vectors become isolated nodes") {
        const auto graph = build_graph(vectors({{1, 0}, {0, 0}, {1, 0}}), config);
        CHECK(graph.weight(0, 2) == doctest::Approx(1.0));
        CHECK(graph.weight(0, 1) == 0.0);
        CHECK(graph.weight(1, 2) == 0.0);
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(build_graph(std::vector<EmbeddingVector>{}, config), InvalidArgument);
        CHECK_THROWS_AS(build_graph(vectors({{1, 0}, {1, 0, 0}}), config), DimensionMismatch);
        config.threshold = 1.0;
        CHECK_THROWS_AS(build_graph(vectors({{1, 0}}), config), InvalidArgument);
    }
}

TEST_CASE("build_graph invariants on random embeddings") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> normal(0.3, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 15;
        const std::size_t dim = 1 + rng() % 10;
        std::vector<EmbeddingVector> embeddings;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> v(dim);
            for (double &x : v)
                x = normal(rng);
            embeddings.emplace_back(v);
        }
        RankerConfig config;
        config.threshold = 0.95 * unit(rng);
        const auto graph = build_graph(embeddings, config);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(graph.weight(i, i) == 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                const double w = graph.weight(i, j);
                CHECK(w == graph.weight(j, i));
                CHECK(std::isfinite(w));
                CHECK((w == 0.0 || w > config.threshold));
                if (i != j) {
                    const double c = cosine_similarity(embeddings[i], embeddings[j]);
                    CHECK(w == (c > config.threshold ? c : 0.0));
                }
            }
        }
    }
}

TEST_CASE("SimilarityGraph::from_weights validates invariants") {
    CHECK_NOTHROW(SimilarityGraph::from_weights(2, {0, 0.7, 0.7, 0}, 0.65));
    CHECK_THROWS_AS(SimilarityGraph::from_weights(2, {0, 0.7, 0.7}, 0.65), InvalidArgument);
    CHECK_THROWS_AS(SimilarityGraph::from_weights(2, {0.7, 0.7, 0.7, 0}, 0.65), InvalidArgument);
    CHECK_THROWS_AS(SimilarityGraph::from_weights(2, {0, 0.7, 0.8, 0}, 0.65), InvalidArgument);
    CHECK_THROWS_AS(SimilarityGraph::from_weights(2, {0, 0.6, 0.6, 0}, 0.65), InvalidArgument);
    CHECK_THROWS_AS(SimilarityGraph::from_weights(2, {0, 0.65, 0.65, 0}, 0.65), InvalidArgument);
    CHECK_THROWS_AS(SimilarityGraph::from_weights(2, {0, NAN, NAN, 0}, 0.65), NonFiniteValue);
    CHECK_THROWS_AS(SimilarityGraph::from_weights(1, {0}, 1.0), InvalidArgument);
}

TEST_CASE("bias_weights") {
    SUBCASE("orthogonal node gets nothing") {
        const auto restart = bias_weights(EmbeddingVector({1, 0}), vectors({{1, 0}, {0, 1}}));
        CHECK(restart.bias[0] == doctest::Approx(1.0));
        CHECK(restart.bias[1] == 0.0);
        CHECK_FALSE(restart.uniform_fallback);
    }
    SUBCASE("symmetric nodes split evenly") {
        const auto restart = bias_weights(EmbeddingVector({1, 1}), vectors({{1, 1}, {1, 1}}));
        CHECK(restart.bias[0] == doctest::Approx(0.5));
        CHECK(restart.bias[1] == doctest::Approx(0.5));
    }
    SUBCASE("normalized cosines") {
        const auto restart = bias_weights(EmbeddingVector({2, 1}), vectors({{1, 0}, {0, 1}, {1, 1}}));
        const double raw[3] = {2.0 / std::sqrt(5.0), 1.0 / std::sqrt(5.0), 3.0 / std::sqrt(10.0)};
        const double total = raw[0] + raw[1] + raw[2];
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(restart.bias[i] == doctest::Approx(raw[i] / total).epsilon(1e-14));
    }
    SUBCASE("negative similarities are clamped") {
        const auto restart = bias_weights(EmbeddingVector({1, 0}), vectors({{1, 0}, {-1, 0}, {1, 1}}));
        CHECK(restart.bias[1] == 0.0);
        CHECK(restart.bias[0] + restart.bias[2] == doctest::Approx(1.0));
        CHECK(restart.bias[0] > restart.bias[2]);
    }
    SUBCASE("all nonpositive falls back to uniform with a flag") {
        const auto restart = bias_weights(EmbeddingVector({1, 0}), vectors({{-1, 0}, {0, 1}, {0, 0}}));
        CHECK(restart.uniform_fallback);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(restart.bias[i] == doctest::Approx(1.0 / 3.0));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(bias_weights(EmbeddingVector({1, 0, 0}), vectors({{1, 0}})), DimensionMismatch);
        CHECK_THROWS_AS(bias_weights(EmbeddingVector({0, 0}), vectors({{1, 0}})), ZeroNormVector);
    }
}

TEST_CASE("uniform_bias") {
    const auto four = uniform_bias(4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(four[i] == 0.25);
    CHECK(uniform_bias(1)[0] == 1.0);
    const auto three = uniform_bias(3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(three[i] == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(uniform_bias(0), InvalidArgument);
}

TEST_CASE("BiasVector validation") {
    CHECK_THROWS_AS(BiasVector({0.5, 0.4}), InvalidArgument);
    CHECK_THROWS_AS(BiasVector({1.5, -0.5}), InvalidArgument);
    CHECK_THROWS_AS(BiasVector({NAN, 1.0}), NonFiniteValue);
    CHECK_THROWS_AS(BiasVector::normalized({0.0, 0.0}), InvalidArgument);
    CHECK(BiasVector::normalized({1.0, 3.0})[1] == 0.75);
}

TEST_CASE("RankerConfig validation") {
    RankerConfig config;
    CHECK_NOTHROW(config.validate());
    CHECK(config.damping == 0.85);
    CHECK(config.threshold == 0.65);
    CHECK(config.epsilon == 1e-6);
    CHECK(config.max_iterations == 100);
    for (double d : {0.0, 1.0, -0.2, 1.5}) {
        RankerConfig bad;
        bad.damping = d;
        CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    }
    for (double t : {-0.1, 1.0}) {
        RankerConfig bad;
        bad.threshold = t;
        CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    }
    RankerConfig bad;
    bad.epsilon = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = RankerConfig{};
    bad.max_iterations = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("rank examples") {
    SUBCASE("symmetric pair") {
        const auto graph = SimilarityGraph::from_weights(2, {0, 0.9, 0.9, 0}, 0.65);
        const auto result = rank(graph, uniform_bias(2), RankerConfig{});
        CHECK(result.scores[0] == doctest::Approx(0.5));
        CHECK(result.scores[1] == doctest::Approx(0.5));
        CHECK(result.converged);
    }
    SUBCASE("edgeless graph returns the bias") {
        const auto graph = SimilarityGraph::from_weights(3, std::vector<double>(9, 0.0), 0.65);
        const BiasVector bias({0.7, 0.2, 0.1});
        for (double d : {0.1, 0.5, 0.85, 0.99}) {
            RankerConfig config;
            config.damping = d;
            const auto result = rank(graph, bias, config);
            CHECK(result.scores[0] == doctest::Approx(0.7).epsilon(1e-12));
            CHECK(result.scores[1] == doctest::Approx(0.2).epsilon(1e-12));
            CHECK(result.scores[2] == doctest::Approx(0.1).epsilon(1e-12));
        }
    }
    SUBCASE("path graph against the dense solve") {
        const auto graph = SimilarityGraph::from_weights(3, {0, 0.8, 0, 0.8, 0, 0.7, 0, 0.7, 0}, 0.65);
        const BiasVector bias({0.6, 0.3, 0.1});
        const auto result = rank(graph, bias, tight());
        const auto expected = oracle::dense_stationary(graph, bias, 0.85);
        CHECK(result.converged);
        CHECK(oracle::max_abs_diff(result.scores, expected) < 1e-8);
    }
    SUBCASE("errors") {
        const auto graph = SimilarityGraph::from_weights(2, {0, 0.9, 0.9, 0}, 0.65);
        CHECK_THROWS_AS(rank(graph, uniform_bias(3), RankerConfig{}), DimensionMismatch);
        RankerConfig bad;
        bad.damping = 1.0;
        CHECK_THROWS_AS(rank(graph, uniform_bias(2), bad), InvalidArgument);
    }
}

TEST_CASE("rank stops at max_iterations and reports it") {
    const auto graph = SimilarityGraph::from_weights(2, {0, 0.9, 0.9, 0}, 0.65);
    RankerConfig config;
    config.max_iterations = 3;
    config.epsilon = 1e-15;
    const auto result = rank(graph, BiasVector({0.9, 0.1}), config);
    CHECK(result.iterations == 3);
    CHECK_FALSE(result.converged);
}

TEST_CASE("textrank") {
    SUBCASE("symmetric pair") {
        const auto graph = SimilarityGraph::from_weights(2, {0, 0.9, 0.9, 0}, 0.65);
        const auto result = textrank(graph, RankerConfig{});
        CHECK(result.scores[0] == doctest::Approx(0.5));
        CHECK(result.scores[1] == doctest::Approx(0.5));
    }
    SUBCASE("5-node random graph against the dense solve") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const std::size_t n = 5;
        std::vector<double> w(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (const double v = unit(rng); v > 0.3)
                    w[i * n + j] = w[j * n + i] = v;
        const auto graph = SimilarityGraph::from_weights(n, w, 0.3);
        const auto result = textrank(graph, tight());
        CHECK(oracle::max_abs_diff(result.scores, oracle::dense_stationary(graph, uniform_bias(n), 0.85)) < 1e-8);
    }
    SUBCASE("equals rank with uniform restart, bit for bit") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            const auto graph = oracle::random_graph(rng);
            const auto a = textrank(graph, RankerConfig{});
            const auto b = rank(graph, uniform_bias(graph.size()), RankerConfig{});
            CHECK(a.scores == b.scores);
            CHECK(a.iterations == b.iterations);
        }
    }
}

TEST_CASE("property: normalization and oracle equivalence") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto graph = oracle::random_graph(rng);
        const auto bias = oracle::random_bias(rng, graph.size());
        const double d = std::array{0.80, 0.85, 0.90}[trial % 3];

        RankerConfig defaults;
        defaults.damping = d;
        const auto quick = rank(graph, bias, defaults);
        CHECK(sum(quick.scores) == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(std::all_of(quick.scores.begin(), quick.scores.end(), [](double s) { return s >= 0.0; }));

        const auto exact = rank(graph, bias, tight(d));
        CHECK(oracle::max_abs_diff(exact.scores, oracle::dense_stationary(graph, bias, d)) < 1e-8);
    }
}

TEST_CASE("property: raising a node's restart weight never lowers its score") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto graph = oracle::random_graph(rng, {10, 0.3});
        const std::size_t n = graph.size();
        const auto bias = oracle::random_bias(rng, n);
        const std::size_t i = rng() % n;
        const double delta = 0.5 * unit(rng);
        std::vector<double> raised(bias.values().begin(), bias.values().end());
        raised[i] += delta;
        const auto bumped = BiasVector::normalized(raised);

        const auto before = oracle::dense_stationary(graph, bias, 0.85);
        const auto after = oracle::dense_stationary(graph, bumped, 0.85);
        CHECK(after[i] >= before[i] - 1e-12);
        const auto ranked_before = rank(graph, bias, tight());
        const auto ranked_after = rank(graph, bumped, tight());
        CHECK(ranked_after.scores[i] >= ranked_before.scores[i] - 1e-12);
    }
}

TEST_CASE("property: relabeling nodes permutes the scores") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto graph = oracle::random_graph(rng);
        const std::size_t n = graph.size();
        const auto bias = oracle::random_bias(rng, n);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);

        // node i of the original becomes node perm[i]
        std::vector<double> w(n * n);
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            b[perm[i]] = bias[i];
            for (std::size_t j = 0; j < n; ++j)
                w[perm[i] * n + perm[j]] = graph.weight(i, j);
        }
        const auto permuted = SimilarityGraph::from_weights(n, w, graph.threshold());
        const auto original = rank(graph, bias, tight());
        const auto relabeled = rank(permuted, BiasVector(b), tight());
        for (std::size_t i = 0; i < n; ++i)
            CHECK(relabeled.scores[perm[i]] == doctest::Approx(original.scores[i]).epsilon(1e-10));
    }
}

TEST_CASE("property: scores are continuous in the damping factor") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto graph = oracle::random_graph(rng);
        const auto bias = oracle::random_bias(rng, graph.size());
        for (double d : {0.5, 0.8, 0.85, 0.9}) {
            const auto a = rank(graph, bias, tight(d));
            const auto b = rank(graph, bias, tight(d + 1e-6));
            CHECK(oracle::l1_diff(a.scores, b.scores) < 1e-4);
        }
    }
}

TEST_CASE("property: connected similarity graphs converge within 100 iterations") {
    std::mt19937_64 rng(404);
    std::normal_distribution<double> normal(0.5, 1.0);
    std::size_t tested = 0;
    std::size_t bipartite = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 3 + rng() % 30;
        std::vector<EmbeddingVector> embeddings;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> v(8);
            for (double &x : v)
                x = normal(rng);
            embeddings.emplace_back(v);
        }
        RankerConfig config;
        config.threshold = 0.1 * static_cast<double>(rng() % 5);
        config.damping = std::array{0.80, 0.85, 0.90}[trial % 3];
        const auto graph = build_graph(embeddings, config);
        const auto shape = shape_of(graph);
        if (!shape.connected)
            continue;
        const auto bias = oracle::random_bias(rng, n);
        if (shape.bipartite) {
            // Eigenvalue -1 of the transition matrix: the change only shrinks
            // by d per step, so only the geometric bound holds.
            ++bipartite;
            config.max_iterations = 1000;
            const auto result = rank(graph, bias, config);
            const double bound = std::ceil(std::log(config.epsilon / 2.0) / std::log(config.damping));
            CHECK(result.converged);
            CHECK(static_cast<double>(result.iterations) <= bound);
            continue;
        }
        ++tested;
        const auto result = rank(graph, bias, config);
        CHECK(result.converged);
        CHECK(result.iterations < 100);
    }
    CHECK(tested > 100);
    CHECK(bipartite > 0);
}

TEST_CASE("bipartite pair with a one-sided bias needs more than 100 steps at d = 0.9") {
    const auto graph = SimilarityGraph::from_weights(2, {0, 0.9, 0.9, 0}, 0.65);
    RankerConfig config;
    config.damping = 0.9;
    config.max_iterations = 1000;
    const auto result = rank(graph, BiasVector({1.0, 0.0}), config);
    CHECK(result.converged);
    CHECK(result.iterations > 100);
    CHECK(oracle::max_abs_diff(result.scores, oracle::dense_stationary(graph, BiasVector({1.0, 0.0}), 0.9)) < 1e-5);
}

TEST_CASE("order_by_score breaks ties by lower index") {
    const std::vector<double> scores{0.2, 0.3, 0.2, 0.3, 0.0};
    CHECK(order_by_score(scores) == std::vector<std::size_t>{1, 3, 0, 2, 4});
}
