#include <gtest/gtest.h>

#include <map>
#include <numbers>

#include "oracles.hpp"
#include "udmis/hardness.hpp"
#include "udmis/instance_gen.hpp"

using namespace udmis;

namespace {

Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Instance points(std::vector<Point> p, double r = 1.0) { return unit_disk_from_points(std::move(p), r); }

// Max points per unit slab for one orientation, minimized over a dense
// offset grid plus every projection fraction.
std::size_t slab_oracle(const std::vector<Point> &pts, double theta) {
    std::vector<double> proj;
    for (auto p : pts) proj.push_back(p.x * std::cos(theta) + p.y * std::sin(theta));
    std::vector<double> offsets;
    for (int k = 0; k < 2000; ++k) offsets.push_back(k / 2000.0);
    for (double p : proj) offsets.push_back(p - std::floor(p));
    std::size_t best = pts.size();
    for (double o : offsets) {
        std::map<long long, std::size_t> bins;
        std::size_t worst = 0;
        for (double p : proj) worst = std::max(worst, ++bins[static_cast<long long>(std::floor(p - o))]);
        best = std::min(best, worst);
    }
    return best;
}

}  // namespace

TEST(MinFill, TreesHaveWidthOne) {
    for (std::uint32_t seed = 0; seed < 10; ++seed) {
        std::mt19937 rng(seed);
        const std::size_t n = 2 + seed * 3;
        std::vector<Edge> e;
        for (Vertex v = 1; v < n; ++v) e.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
        Graph t = build_graph(n, e);
        auto td = minfill_treewidth(t);
        EXPECT_EQ(td.width, 1u);
        EXPECT_FALSE(check_tree_decomposition(t, td).has_value());
    }
}

TEST(MinFill, CliqueAndCycle) {
    EXPECT_EQ(minfill_treewidth(complete(5)).width, 4u);
    EXPECT_EQ(minfill_treewidth(cycle(6)).width, 2u);
    EXPECT_EQ(oracle::treewidth(cycle(6)), 2u);
}

TEST(MinFill, UpperBoundsExactTreewidth) {
    std::size_t tight = 0;
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        Graph g = oracle::random_graph(7 + seed % 2, 0.4, seed);
        auto td = minfill_treewidth(g);
        auto err = check_tree_decomposition(g, td);
        ASSERT_FALSE(err.has_value()) << *err;
        const auto exact = oracle::treewidth(g);
        EXPECT_GE(td.width, exact);
        tight += td.width == exact;
    }
    // Min-fill is exact on almost all small graphs.
    EXPECT_GE(tight, 36u);
}

TEST(MinFill, EmptyAndEdgeless) {
    EXPECT_EQ(minfill_treewidth(build_graph(0, std::vector<Edge>{})).width, 0u);
    auto td = minfill_treewidth(build_graph(4, std::vector<Edge>{}));
    EXPECT_EQ(td.width, 0u);
    EXPECT_FALSE(check_tree_decomposition(build_graph(4, std::vector<Edge>{}), td).has_value());
}

TEST(CheckTreeDecomposition, DetectsViolations) {
    Graph g = cycle(4);
    TreeDecomposition bad;
    bad.bags = {{0, 1, 2}, {3}};
    bad.tree_edges = {{0, 1}};
    bad.width = 2;
    EXPECT_TRUE(check_tree_decomposition(g, bad).has_value());
}

TEST(GeometricDensity, Examples) {
    EXPECT_EQ(geometric_density(points({{0, 0}})), 1u);
    EXPECT_EQ(geometric_density(points({{0, 0}, {3, 0}})), 1u);
    // Any orientation admits a cell that holds the whole cluster.
    EXPECT_EQ(geometric_density(points({{0, 0}, {0.4, 0}, {0, 0.4}, {0.4, 0.4}})), 4u);
    Instance no_pos;
    EXPECT_THROW(geometric_density(no_pos), std::invalid_argument);
}

// Max points in one cell of a unit grid rotated by theta, over grid offsets
// taken at every pair of coordinate fractions.
std::size_t grid_oracle(const std::vector<Point> &pts, double theta) {
    std::vector<double> a, b;
    for (auto p : pts) {
        a.push_back(p.x * std::cos(theta) + p.y * std::sin(theta));
        b.push_back(-p.x * std::sin(theta) + p.y * std::cos(theta));
    }
    std::size_t worst = 0;
    for (double ra : a)
        for (double rb : b) {
            const double oa = ra - std::floor(ra), ob = rb - std::floor(rb);
            std::map<std::pair<long long, long long>, std::size_t> cells;
            for (std::size_t i = 0; i < a.size(); ++i) {
                auto key = std::make_pair(static_cast<long long>(std::floor(a[i] - oa)),
                                          static_cast<long long>(std::floor(b[i] - ob)));
                worst = std::max(worst, ++cells[key]);
            }
        }
    return worst;
}

TEST(GeometricDensity, MatchesGridOffsetSearch) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto inst = random_udg_box(30, 3.0, seed);
        const std::size_t k = 6;
        std::size_t best = inst.n();
        for (std::size_t i = 0; i < k; ++i)
            best = std::min(best, grid_oracle(*inst.positions, std::numbers::pi / 2 * static_cast<double>(i) / k));
        EXPECT_EQ(geometric_density(inst, k), best) << "seed " << seed;
    }
}

TEST(GeometricDensity, CollinearPairsPerCell) {
    // Three points at spacing 0.5: an aligned cell holds two, any tilt keeps all three within one cell.
    EXPECT_EQ(geometric_density(points({{0, 0}, {0.5, 0}, {1.0, 0}})), 2u);
}

TEST(HardnessParameters, MonotoneUnderInsertion) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto inst = random_udg_box(20, 2.5, seed);
        std::vector<Point> p;
        std::size_t prev_d = 0, prev_t = 0;
        for (auto q : *inst.positions) {
            p.push_back(q);
            auto partial = points(p, inst.disk_radius);
            const std::size_t d = geometric_density(partial, 24), t = thickness(partial, 24);
            EXPECT_GE(d, prev_d);
            EXPECT_GE(t, prev_t);
            prev_d = d;
            prev_t = t;
        }
    }
}

TEST(Thickness, Examples) {
    EXPECT_EQ(thickness(points({{0, 0}, {0, 2.5}, {0, 5}})), 1u);
    Instance empty = points({});
    EXPECT_EQ(thickness(empty), 0u);
    Instance no_pos;
    EXPECT_THROW(thickness(no_pos), std::invalid_argument);
}

TEST(Thickness, CollinearClosedForm) {
    // n collinear points at spacing 1/m: slabs across the line cut the row
    // into runs of m, the first run free to start anywhere, so the best
    // offset gives min(m, ceil(n/2)). Tilting only shortens the spacing.
    for (std::size_t m : {2u, 3u, 4u})
        for (std::size_t n : {1u, 2u, 3u, 5u, 9u}) {
            const double s = 1.0 / static_cast<double>(m);
            std::vector<Point> p;
            for (std::size_t i = 0; i < n; ++i) p.push_back({s * static_cast<double>(i), 0.0});
            const std::size_t expect = std::min(m, (n + 1) / 2);
            EXPECT_EQ(thickness(points(p)), expect) << "s=" << s << " n=" << n;
        }
}

TEST(Thickness, BreakpointsAreExactPerOrientation) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto inst = random_udg_box(25, 2.0, seed);
        const std::size_t k = 12;
        std::size_t best = inst.n();
        for (std::size_t i = 0; i < k; ++i)
            best = std::min(best, slab_oracle(*inst.positions, std::numbers::pi * static_cast<double>(i) / k));
        EXPECT_EQ(thickness(inst, k), best) << "seed " << seed;
    }
}

TEST(Thickness, ScalesWithRadius) {
    auto a = points({{0, 0}, {0, 1.5}, {0, 3}}, 1.0);
    auto b = points({{0, 0}, {0, 3}, {0, 6}}, 2.0);
    EXPECT_EQ(thickness(a), thickness(b));
}

TEST(ComponentStats, Examples) {
    EXPECT_EQ(component_stats(build_graph(4, std::vector<Edge>{{0, 1}, {1, 2}})), (std::vector<std::size_t>{3, 1}));
    EXPECT_EQ(component_stats(build_graph(5, std::vector<Edge>{})), (std::vector<std::size_t>(5, 1)));
    EXPECT_EQ(component_stats(cycle(5)), (std::vector<std::size_t>{5}));
}

TEST(Leakage, Constants) {
    EXPECT_NEAR(interaction_leakage(LayoutKind::triangular), 1.0 / 27.0, 1e-15);
    EXPECT_NEAR(interaction_leakage(LayoutKind::kings), 8.0 / 125.0, 1e-15);
    EXPECT_NEAR(100 * interaction_leakage(LayoutKind::triangular), 3.70, 0.01);
    EXPECT_NEAR(100 * interaction_leakage(LayoutKind::kings), 6.40, 0.01);
}

TEST(Analyze, ReportsAllFields) {
    auto inst = kings_lattice(4, 4);
    auto r = analyze(inst, 30);
    EXPECT_EQ(r.treewidth_est, 5u);
    ASSERT_TRUE(r.thickness_est.has_value());
    ASSERT_TRUE(r.geometric_density.has_value());
    EXPECT_EQ(r.component_sizes, (std::vector<std::size_t>{16}));
    Instance bare;
    bare.graph = inst.graph;
    auto r2 = analyze(bare);
    EXPECT_FALSE(r2.thickness_est.has_value());
}
