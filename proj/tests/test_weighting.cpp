#include <gtest/gtest.h>

#include "oracles.hpp"
#include "udmis/instance_gen.hpp"
#include "udmis/weighting.hpp"

using namespace udmis;

namespace {

Graph make(std::size_t n, std::vector<Edge> e) { return build_graph(n, e); }
Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make(n, e);
}
Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make(n, e);
}
Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make(n, e);
}

WeightScheme scheme(WeightKind k, std::uint64_t seed = 0) { return {k, 1000.0, seed}; }

}  // namespace

TEST(Schemes, NamesRoundTrip) {
    for (auto k : kAllWeightKinds) EXPECT_EQ(parse_weight_kind(to_string(k)), k);
    EXPECT_THROW(parse_weight_kind("bogus"), std::invalid_argument);
}

TEST(Schemes, DegreeCentralityPath) {
    auto g = apply_scheme(path(3), scheme(WeightKind::degree_centrality));
    EXPECT_EQ(g.weights(), (std::vector<double>{501, 1001, 501}));
}

TEST(Schemes, DegreeBasedRegular) {
    auto g = apply_scheme(complete(4), scheme(WeightKind::degree_based));
    EXPECT_EQ(g.weights(), (std::vector<double>(4, 0.1)));
    auto p = apply_scheme(path(3), scheme(WeightKind::degree_based));
    EXPECT_EQ(p.weights(), (std::vector<double>{0.1, 3000, 0.1}));
}

TEST(Schemes, MatchingPath) {
    auto g = apply_scheme(path(3), scheme(WeightKind::matching));
    // Either endpoint pairs with the center; the lone endpoint gets 0.1 * 2.
    auto w = g.weights();
    EXPECT_EQ(w[1], 1.0);
    EXPECT_EQ(std::min(w[0], w[2]), 0.2);
    EXPECT_EQ(std::max(w[0], w[2]), 1.0);
}

TEST(Schemes, UniformRandomRangeAndSeed) {
    auto base = kings_lattice(5, 5).graph;
    auto a = apply_scheme(base, scheme(WeightKind::uniform_random, 3));
    auto b = apply_scheme(base, scheme(WeightKind::uniform_random, 3));
    auto c = apply_scheme(base, scheme(WeightKind::uniform_random, 4));
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    for (double w : a.weights()) {
        EXPECT_GE(w, 0.1);
        EXPECT_LE(w, 1000.0);
    }
    EXPECT_EQ(a.edges(), base.edges());
}

TEST(Schemes, AnnihilationAndClique) {
    Graph star = make(4, {{0, 1}, {0, 2}, {0, 3}});
    auto w = apply_scheme(star, scheme(WeightKind::annihilation)).weights();
    EXPECT_EQ(w, (std::vector<double>{0.1, 1000, 1000, 1000}));
    auto c = apply_scheme(complete(5), scheme(WeightKind::max_clique)).weights();
    EXPECT_EQ(c, (std::vector<double>(5, 1.0)));
}

TEST(Schemes, CentralitySchemes) {
    auto cl = apply_scheme(path(3), scheme(WeightKind::closeness)).weights();
    EXPECT_NEAR(cl[1], 1000.0, 1e-9);
    EXPECT_NEAR(cl[0], 1.0 + 999.0 * 2.0 / 3.0, 1e-9);
    auto bt = apply_scheme(path(3), scheme(WeightKind::betweenness)).weights();
    EXPECT_NEAR(bt[1], 999.1, 1e-9);
    EXPECT_NEAR(bt[0], 0.1, 1e-12);
    auto flat = apply_scheme(complete(4), scheme(WeightKind::betweenness)).weights();
    EXPECT_EQ(flat, (std::vector<double>(4, 0.1)));
}

TEST(Schemes, Errors) {
    Graph one = make(1, {});
    EXPECT_THROW(apply_scheme(one, scheme(WeightKind::degree_centrality)), std::invalid_argument);
    EXPECT_THROW(apply_scheme(one, scheme(WeightKind::closeness)), std::invalid_argument);
    EXPECT_THROW(apply_scheme(make(3, {{0, 1}}), scheme(WeightKind::closeness)), std::invalid_argument);
    EXPECT_THROW(apply_scheme(path(3), {WeightKind::uniform_random, -1.0, 0}), std::invalid_argument);
}

TEST(Annihilation, Examples) {
    EXPECT_EQ(annihilation_number(make(4, {{0, 1}, {0, 2}, {0, 3}})).k, 3u);
    EXPECT_EQ(annihilation_number(make(4, {})).k, 4u);
    EXPECT_EQ(annihilation_number(complete(3)).k, 1u);
}

TEST(Matching, Examples) {
    EXPECT_EQ(maximum_matching(path(3)).size(), 1u);
    EXPECT_EQ(maximum_matching(cycle(4)).size(), 2u);
    EXPECT_EQ(maximum_matching(cycle(5)).size(), 2u);
}

TEST(Matching, AgreesWithEnumeration) {
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = oracle::random_graph(5 + seed % 6, 0.35, seed);
        if (g.num_edges() > 20) continue;
        auto m = maximum_matching(g);
        EXPECT_TRUE(is_matching(g, m));
        EXPECT_EQ(m.size(), oracle::max_matching(g)) << "seed " << seed;
    }
}

TEST(TwoDistanceMatching, Examples) {
    EXPECT_EQ(two_distance_matching(path(4)).size(), 1u);
    EXPECT_EQ(two_distance_matching(make(4, {{0, 1}, {2, 3}})).size(), 2u);
    EXPECT_EQ(two_distance_matching(complete(3)).size(), 1u);
}

TEST(TwoDistanceMatching, AgreesWithEnumeration) {
    for (std::uint32_t seed = 0; seed < 60; ++seed) {
        Graph g = oracle::random_graph(6 + seed % 5, 0.3, seed);
        if (g.num_edges() > 18) continue;
        auto m = two_distance_matching(g);
        EXPECT_TRUE(is_two_distance_matching(g, m));
        EXPECT_EQ(m.size(), oracle::max_two_distance_matching(g)) << "seed " << seed;
    }
}

TEST(MaxClique, Examples) {
    EXPECT_EQ(maximum_clique(complete(5)).size(), 5u);
    EXPECT_EQ(maximum_clique(cycle(5)).size(), 2u);
    auto tri = sample_native_instance(triangular_layout(), 19, 1.0, 0);
    EXPECT_EQ(maximum_clique(tri.graph).size(), 3u);
}

TEST(MaxClique, AgreesWithEnumeration) {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = oracle::random_graph(12, 0.5, seed);
        auto c = maximum_clique(g);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_TRUE(g.adjacent(c[i], c[j]));
        EXPECT_EQ(c.size(), oracle::max_clique(g)) << "seed " << seed;
    }
}

TEST(Closeness, Examples) {
    for (double c : closeness_centrality(complete(3))) EXPECT_DOUBLE_EQ(c, 1.0);
    auto p = closeness_centrality(path(3));
    EXPECT_DOUBLE_EQ(p[1], 1.0);
    EXPECT_DOUBLE_EQ(p[0], 2.0 / 3.0);
    for (double c : closeness_centrality(cycle(4))) EXPECT_DOUBLE_EQ(c, 0.75);
}

TEST(Closeness, AgreesWithDistanceMatrix) {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        Graph g = oracle::random_graph(9, 0.45, seed);
        if (component_stats(g).size() != 1) continue;
        auto d = oracle::distances(g);
        auto c = closeness_centrality(g);
        for (Vertex v = 0; v < g.n(); ++v) {
            double s = 0;
            for (Vertex u = 0; u < g.n(); ++u) s += static_cast<double>(d[v][u]);
            EXPECT_NEAR(c[v], 8.0 / s, 1e-12);
        }
    }
}

TEST(Betweenness, Examples) {
    auto p = betweenness_centrality(path(3));
    EXPECT_DOUBLE_EQ(p[1], 2.0);
    EXPECT_DOUBLE_EQ(p[0], 0.0);
    EXPECT_DOUBLE_EQ(p[2], 0.0);
    for (double b : betweenness_centrality(complete(4))) EXPECT_DOUBLE_EQ(b, 0.0);
}

TEST(Betweenness, AgreesWithPathEnumeration) {
    for (std::uint32_t seed = 0; seed < 30; ++seed) {
        Graph g = oracle::random_graph(8, 0.35, seed);
        auto got = betweenness_centrality(g);
        auto want = oracle::betweenness(g);
        for (Vertex v = 0; v < g.n(); ++v) EXPECT_NEAR(got[v], want[v], 1e-9) << "seed " << seed << " v " << v;
    }
}
