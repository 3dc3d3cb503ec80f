#include <gtest/gtest.h>

#include <set>

#include "udmis/hardness.hpp"
#include "udmis/instance_gen.hpp"

using namespace udmis;

namespace {

double min_pairwise(const std::vector<Point> &p) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) m = std::min(m, distance(p[i], p[j]));
    return m;
}

}  // namespace

TEST(TriangularLayout, SevenTrapsFormHexagon) {
    auto l = triangular_layout(7, 5.0);
    ASSERT_EQ(l.size(), 7u);
    EXPECT_NEAR(l.trap_positions[0].x, 0.0, 1e-12);
    EXPECT_NEAR(l.trap_positions[0].y, 0.0, 1e-12);
    for (std::size_t i = 1; i < 7; ++i) EXPECT_NEAR(distance(l.trap_positions[i], {0, 0}), 5.0, 1e-9);
    EXPECT_NEAR(min_pairwise(l.trap_positions), 5.0, 1e-9);
}

TEST(TriangularLayout, DefaultLayout) {
    auto l = triangular_layout();
    EXPECT_EQ(l.size(), 200u);
    EXPECT_NEAR(min_pairwise(l.trap_positions), 5.0, 1e-9);
    auto one = triangular_layout(1, 5.0);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one.trap_positions[0], (Point{0, 0}));
}

TEST(NativeInstance, CandidateCount) {
    EXPECT_EQ(candidate_trap_count(30, 0.5), 60u);
    EXPECT_EQ(candidate_trap_count(100, 0.3), 333u);
    EXPECT_EQ(candidate_trap_count(30, 30.0 / 61.0), 61u);
    EXPECT_THROW(candidate_trap_count(10, 0.0), std::invalid_argument);
    EXPECT_THROW(candidate_trap_count(10, 1.5), std::invalid_argument);
}

TEST(NativeInstance, SamplesFromCentralTraps) {
    auto layout = triangular_layout();
    auto inst = sample_native_instance(layout, 30, 0.5, 7);
    EXPECT_EQ(inst.n(), 30u);
    EXPECT_TRUE(geometry_consistent(inst));
    // All chosen traps lie within the 60 traps nearest the centroid.
    auto full = sample_native_instance(layout, 60, 1.0, 0);
    std::set<std::pair<double, double>> central;
    for (auto p : *full.positions) central.insert({p.x, p.y});
    for (auto p : *inst.positions) EXPECT_TRUE(central.count({p.x, p.y}));
}

TEST(NativeInstance, FullFillIsSubLattice) {
    auto layout = triangular_layout();
    auto a = sample_native_instance(layout, 19, 1.0, 1);
    auto b = sample_native_instance(layout, 19, 1.0, 2);
    EXPECT_EQ(a.graph, b.graph);
    // Hexagon of radius 2: 19 sites, 42 nearest-neighbor bonds.
    EXPECT_EQ(a.graph.num_edges(), 42u);
}

TEST(NativeInstance, Deterministic) {
    auto layout = triangular_layout();
    auto a = sample_native_instance(layout, 40, 0.6, 99);
    auto b = sample_native_instance(layout, 40, 0.6, 99);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(*a.positions, *b.positions);
    auto c = sample_native_instance(layout, 40, 0.6, 100);
    EXPECT_NE(*a.positions, *c.positions);
}

TEST(NativeInstance, RejectsOversizedRequest) {
    auto layout = triangular_layout();
    try {
        sample_native_instance(layout, 100, 0.3, 0);
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("333"), std::string::npos);
    }
}

TEST(BoxModel, SideAndDensity) {
    EXPECT_DOUBLE_EQ(box_side(100, 1.0), 10.0);
    EXPECT_DOUBLE_EQ(box_side(4, 4.0), 1.0);
    auto inst = random_udg_box(4, 4.0, 3);
    // Four points in a unit box: every pair is within sqrt 2, most within 1.
    EXPECT_GE(inst.graph.num_edges(), 3u);
    for (auto p : *inst.positions) {
        EXPECT_GE(p.x, 0.0);
        EXPECT_LT(p.x, 1.0);
    }
}

TEST(BoxModel, Deterministic) {
    auto a = random_udg_box(50, 1.2, 5), b = random_udg_box(50, 1.2, 5);
    EXPECT_EQ(*a.positions, *b.positions);
    EXPECT_THROW(random_udg_box(0, 1.0, 0), std::invalid_argument);
    EXPECT_THROW(random_udg_box(5, -1.0, 0), std::invalid_argument);
}

TEST(KingsLattice, Examples) {
    auto k4 = kings_lattice(2, 2);
    EXPECT_EQ(k4.graph.num_edges(), 6u);
    auto p3 = kings_lattice(3, 1);
    EXPECT_EQ(p3.graph.num_edges(), 2u);
    EXPECT_FALSE(p3.graph.adjacent(0, 2));
    auto k33 = kings_lattice(3, 3);
    EXPECT_EQ(k33.graph.degree(4), 8u);
}

TEST(KingsLattice, EdgeCountClosedForm) {
    for (std::size_t w = 1; w <= 9; ++w)
        for (std::size_t h = 1; h <= 9; ++h) {
            long long expect = 4LL * w * h - 3LL * w - 3LL * h + 2;
            EXPECT_EQ(static_cast<long long>(kings_lattice(w, h).graph.num_edges()), expect) << w << "x" << h;
        }
}

TEST(Rewire, ZeroFractionIsIdentity) {
    auto g = kings_lattice(6, 6).graph;
    EXPECT_EQ(rewire(g, 0.0, 1), g);
}

TEST(Rewire, FullRewireKeepsEdgeCountAndAvoidsRemoved) {
    auto g = kings_lattice(10, 10).graph;
    auto r = rewire(g, 1.0, 4);
    EXPECT_EQ(r.num_edges(), g.num_edges());
    std::set<Edge> old(g.edges().begin(), g.edges().end());
    for (auto e : r.edges()) EXPECT_FALSE(old.count(e));
}

TEST(Rewire, PartialFraction) {
    auto g = kings_lattice(10, 10).graph;
    auto r = rewire(g, 0.3, 9);
    EXPECT_EQ(r.num_edges(), g.num_edges());
    std::set<Edge> old(g.edges().begin(), g.edges().end());
    std::size_t kept = 0;
    for (auto e : r.edges()) kept += old.count(e);
    const auto k = static_cast<std::size_t>(std::floor(0.3 * static_cast<double>(g.num_edges()) + 0.5));
    EXPECT_EQ(kept, g.num_edges() - k);
    EXPECT_EQ(rewire(g, 0.3, 9), r);
}

TEST(Rewire, CompleteGraphAndBadFractions) {
    // Every non-edge slot of K4 is a removed pair, so the graph comes back unchanged.
    auto k4 = kings_lattice(2, 2).graph;
    EXPECT_EQ(rewire(k4, 0.5, 0), k4);
    EXPECT_THROW(rewire(k4, 1.5, 0), std::invalid_argument);
}
