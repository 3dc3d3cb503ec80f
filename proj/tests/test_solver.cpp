#include <gtest/gtest.h>

#include "oracles.hpp"
#include "udmis/instance_gen.hpp"
#include "udmis/solver.hpp"
#include "udmis/weighting.hpp"

using namespace udmis;

namespace {

Graph make(std::size_t n, std::vector<Edge> e, std::optional<std::vector<double>> w = std::nullopt) {
    return build_graph(n, e, std::move(w));
}
Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make(n, e);
}
Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make(n, e);
}

// A width-1 decomposition of a path: bags {i, i+1} chained.
TreeDecomposition path_decomposition(std::size_t n) {
    TreeDecomposition td;
    for (Vertex i = 0; i + 1 < n; ++i) td.bags.push_back({i, i + 1});
    for (std::size_t b = 0; b + 1 < td.bags.size(); ++b) td.tree_edges.emplace_back(b, b + 1);
    td.width = 1;
    return td;
}

SolveOptions variant(BranchRule b, bool domination) {
    SolveOptions o;
    o.branching = b;
    o.domination = domination;
    return o;
}

}  // namespace

TEST(SolveBB, Examples) {
    EXPECT_DOUBLE_EQ(solve_bb(cycle(5)).optimum, 2.0);
    auto k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, std::vector<double>{5, 1, 1, 1});
    auto r = solve_bb(k4);
    EXPECT_DOUBLE_EQ(r.optimum, 5.0);
    EXPECT_EQ(r.solution, (std::vector<Vertex>{0}));
    EXPECT_DOUBLE_EQ(solve_bb(make(6, {})).optimum, 6.0);
    EXPECT_DOUBLE_EQ(solve_bb(make(0, {})).optimum, 0.0);
}

TEST(SolveBB, AllVariantsMatchEnumeration) {
    for (std::uint32_t seed = 0; seed < 80; ++seed) {
        Graph g = oracle::random_graph(8 + seed % 9, 0.1 + 0.05 * (seed % 8), seed, seed % 3 != 0);
        const double want = oracle::mwis(g);
        for (auto b : {BranchRule::cover_order, BranchRule::max_degree})
            for (bool dom : {true, false}) {
                auto r = solve_bb(g, variant(b, dom));
                EXPECT_NEAR(r.optimum, want, 1e-9) << "seed " << seed;
                EXPECT_TRUE(is_independent_set(g, r.solution));
                EXPECT_NEAR(set_weight(g, r.solution), r.optimum, 1e-9);
                EXPECT_TRUE(r.optimal);
            }
    }
}

TEST(SolveBB, ZeroWeightsAndTies) {
    auto g = make(4, {{0, 1}, {2, 3}}, std::vector<double>{0, 0, 3, 3});
    auto r = solve_bb(g);
    EXPECT_DOUBLE_EQ(r.optimum, 3.0);
    EXPECT_TRUE(is_independent_set(g, r.solution));
}

TEST(SolveBB, TicksAreDeterministic) {
    auto inst = sample_native_instance(triangular_layout(), 60, 0.8, 5);
    auto a = solve_bb(inst.graph), b = solve_bb(inst.graph);
    EXPECT_EQ(a.ticks, b.ticks);
    EXPECT_EQ(a.bb_nodes, b.bb_nodes);
    EXPECT_EQ(a.solution, b.solution);
    EXPECT_GT(a.ticks, a.bb_nodes);
}

TEST(SolveBB, BudgetTruncatesWithValidSet) {
    auto inst = sample_native_instance(triangular_layout(), 80, 0.8, 2);
    auto full = solve_bb(inst.graph);
    ASSERT_GT(full.ticks, 50u);
    auto cut = solve_bb(inst.graph, std::optional<std::uint64_t>{50});
    EXPECT_FALSE(cut.optimal);
    EXPECT_TRUE(is_independent_set(inst.graph, cut.solution));
    EXPECT_LE(cut.optimum, full.optimum + 1e-9);
    // A budget above the full run changes nothing.
    auto roomy = solve_bb(inst.graph, std::optional<std::uint64_t>{full.ticks + 1});
    EXPECT_TRUE(roomy.optimal);
    EXPECT_EQ(roomy.ticks, full.ticks);
}

TEST(SolveBB, RejectsNegativeWeights) {
    // build_graph already refuses them; the solver re-checks its input.
    EXPECT_THROW(make(2, {}, std::vector<double>{1, -1}), std::invalid_argument);
}

TEST(BruteForce, Examples) {
    auto c5 = brute_force(cycle(5));
    EXPECT_DOUBLE_EQ(c5.optimum, 2.0);
    EXPECT_EQ(c5.count_of_optima, 5u);
    auto k3 = brute_force(make(3, {{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_DOUBLE_EQ(k3.optimum, 1.0);
    EXPECT_EQ(k3.count_of_optima, 3u);
    auto p3 = brute_force(path(3));
    EXPECT_DOUBLE_EQ(p3.optimum, 2.0);
    EXPECT_EQ(p3.count_of_optima, 1u);
    EXPECT_EQ(p3.witness, (std::vector<Vertex>{0, 2}));
    EXPECT_THROW(brute_force(make(27, {})), std::invalid_argument);
}

TEST(BruteForce, AgreesWithSubsetScan) {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = oracle::random_graph(12, 0.25, seed, true);
        EXPECT_NEAR(brute_force(g).optimum, oracle::mwis(g), 1e-9);
    }
}

TEST(LpRoot, Examples) {
    EXPECT_NEAR(lp_root_relaxation(cycle(5)), 2.5, 1e-9);
    EXPECT_NEAR(lp_root_relaxation(path(3)), 2.0, 1e-9);
    EXPECT_NEAR(lp_root_relaxation(make(1, {}, std::vector<double>{7})), 7.0, 1e-9);
}

TEST(LpRoot, AgreesWithHalfIntegralSearch) {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = oracle::random_graph(4 + seed % 7, 0.35, seed, seed % 2 == 0);
        EXPECT_NEAR(lp_root_relaxation(g), oracle::lp_half_integral(g), 1e-9) << "seed " << seed;
    }
}

TEST(RootGap, Examples) {
    EXPECT_NEAR(root_gap(cycle(5)), 20.0, 1e-9);
    EXPECT_NEAR(root_gap(make(1, {}, std::vector<double>{7})), 0.0, 1e-12);
    EXPECT_THROW(root_gap(make(2, {}, std::vector<double>{0, 0})), std::invalid_argument);
}

TEST(RootGap, BipartiteGraphsHaveNoGap) {
    for (std::uint32_t seed = 0; seed < 20; ++seed) {
        std::mt19937 rng(seed);
        const std::size_t n = 3 + seed % 8;
        std::vector<Edge> e;
        std::vector<double> w(n);
        for (auto &x : w) x = 1.0 + static_cast<double>(rng() % 9);
        for (Vertex v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
        Graph tree = make(n, e, w);
        EXPECT_NEAR(root_gap(tree), 0.0, 1e-9);
        EXPECT_NEAR(lp_root_relaxation(tree), oracle::lp_half_integral(tree), 1e-9);
    }
}

TEST(TreewidthDP, Examples) {
    EXPECT_DOUBLE_EQ(solve_treewidth_dp(path(5), path_decomposition(5)), 3.0);
    auto c6 = cycle(6);
    EXPECT_DOUBLE_EQ(solve_treewidth_dp(c6, minfill_treewidth(c6)), 3.0);
    EXPECT_DOUBLE_EQ(solve_treewidth_dp(make(0, {}), TreeDecomposition{}), 0.0);
}

TEST(TreewidthDP, RejectsInvalidDecomposition) {
    auto td = path_decomposition(5);
    td.bags[1] = {1};
    EXPECT_THROW(solve_treewidth_dp(path(5), td), std::invalid_argument);
}

TEST(TreewidthDP, MatchesSolverOnNativeInstances) {
    auto layout = triangular_layout();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 6 + seed % 13;
        const double rho = 0.1 * static_cast<double>(1 + seed % 10);
        auto inst = sample_native_instance(layout, n, rho, seed);
        Graph g = apply_scheme(inst.graph, {WeightKind::uniform_random, 1000.0, seed});
        EXPECT_NEAR(solve_treewidth_dp(g, minfill_treewidth(g)), solve_bb(g).optimum, 1e-9) << "seed " << seed;
    }
}

TEST(Greedy, Examples) {
    auto p3 = unit_disk_from_points({{0, 0}, {0.9, 0}, {1.8, 0}}, 1.0);
    EXPECT_EQ(greedy_leftmost(p3), (std::vector<Vertex>{0, 2}));
    auto one = unit_disk_from_points({{4, 4}}, 1.0);
    EXPECT_EQ(greedy_leftmost(one), (std::vector<Vertex>{0}));
    Instance bare;
    EXPECT_THROW(greedy_leftmost(bare), std::invalid_argument);
}

TEST(Greedy, ThirdApproximationOnBoxInstances) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 4 + seed % 15;
        auto inst = random_udg_box(n, 0.5 + 0.25 * static_cast<double>(seed % 8), seed);
        auto s = greedy_leftmost(inst);
        ASSERT_TRUE(is_independent_set(inst.graph, s));
        const double opt = brute_force(inst.graph).optimum;
        EXPECT_GE(static_cast<double>(s.size()), std::ceil(opt / 3.0 - 1e-9)) << "seed " << seed;
    }
}

TEST(MaxWeightIndependentSet, ReturnsOptimalSet) {
    Graph g = oracle::random_graph(14, 0.2, 77, true);
    auto s = max_weight_independent_set(g);
    EXPECT_TRUE(is_independent_set(g, s));
    EXPECT_NEAR(set_weight(g, s), oracle::mwis(g), 1e-9);
}
