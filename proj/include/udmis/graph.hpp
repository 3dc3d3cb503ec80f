#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace udmis {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point &, const Point &) = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Absolute slack on the unit-disk distance test. Lattice instances place
// neighbors exactly at the radius, so the comparison is inclusive.
inline constexpr double kDistanceTolerance = 1e-9;

// Undirected simple vertex-weighted graph. Immutable once built: the edge
// list is sorted with i < j, and every vertex carries a neighbor bitmask
// for constant-time conflict tests.
class Graph {
  public:
    Graph() = default;

    std::size_t n() const { return weights_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<double> &weights() const { return weights_; }
    double weight(Vertex v) const { return weights_[v]; }
    const std::vector<Vertex> &neighbors(Vertex v) const { return adj_[v]; }
    const Bitset &neighbor_mask(Vertex v) const { return masks_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return masks_[u].test(v); }

    double max_weight() const {
        double m = 0.0;
        for (double w : weights_) m = std::max(m, w);
        return m;
    }
    double total_weight() const {
        double s = 0.0;
        for (double w : weights_) s += w;
        return s;
    }

    // Same topology, new weights (validated like build_graph).
    Graph with_weights(std::vector<double> weights) const;

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.edges_ == b.edges_ && a.weights_ == b.weights_;
    }

  private:
    friend Graph build_graph(std::size_t n, std::span<const Edge> edges,
                             std::optional<std::vector<double>> weights);

    std::vector<Edge> edges_;
    std::vector<double> weights_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Bitset> masks_;
};

namespace detail {

inline void validate_weights(std::size_t n, const std::vector<double> &weights) {
    if (weights.size() != n)
        throw std::invalid_argument("weights length " + std::to_string(weights.size()) +
                                    " does not match vertex count " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(weights[i]) || weights[i] < 0.0)
            throw std::invalid_argument("invalid weight at vertex " + std::to_string(i) + ": " +
                                        std::to_string(weights[i]));
    }
}

}  // namespace detail

// Validates and canonicalizes: edges sorted, deduplicated, stored as (min,
// max). Missing weights default to 1.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges,
                         std::optional<std::vector<double>> weights = std::nullopt) {
    Graph g;
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n)
            throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") has endpoint out of range for n=" + std::to_string(n));
        if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
        g.edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    if (weights) {
        detail::validate_weights(n, *weights);
        g.weights_ = std::move(*weights);
    } else {
        g.weights_.assign(n, 1.0);
    }

    g.adj_.assign(n, {});
    g.masks_.assign(n, Bitset(n));
    for (auto [a, b] : g.edges_) {
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
        g.masks_[a].set(b);
        g.masks_[b].set(a);
    }
    for (auto &nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

inline Graph build_graph(std::size_t n, const std::vector<Edge> &edges,
                         std::optional<std::vector<double>> weights = std::nullopt) {
    return build_graph(n, std::span<const Edge>(edges), std::move(weights));
}

inline Graph Graph::with_weights(std::vector<double> weights) const {
    detail::validate_weights(n(), weights);
    Graph g = *this;
    g.weights_ = std::move(weights);
    return g;
}

// Subgraph induced by `keep` (in increasing index order); vertex i of the
// result is keep[i].
inline Graph induced_subgraph(const Graph &g, std::span<const Vertex> keep) {
    std::vector<std::size_t> index(g.n(), g.n());
    for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        if (index[a] < g.n() && index[b] < g.n()) edges.emplace_back(index[a], index[b]);
    std::vector<double> w;
    w.reserve(keep.size());
    for (Vertex v : keep) w.push_back(g.weight(v));
    return build_graph(keep.size(), edges, std::move(w));
}

inline Graph complement(const Graph &g) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < g.n(); ++i)
        for (Vertex j = i + 1; j < g.n(); ++j)
            if (!g.adjacent(i, j)) edges.emplace_back(i, j);
    return build_graph(g.n(), edges, g.weights());
}

struct InstanceMeta {
    std::string name;
    std::string generator;
    double rho = 1.0;
    std::uint64_t seed = 0;
    std::string layout;  // trap-layout identifier, empty when not applicable
    std::optional<double> spacing_um;
};

// A graph together with the geometry it was derived from. When positions are
// present the edge set is exactly the pairs within disk_radius.
struct Instance {
    Graph graph;
    std::optional<std::vector<Point>> positions;
    double disk_radius = 1.0;
    InstanceMeta meta;

    std::size_t n() const { return graph.n(); }
    bool has_geometry() const { return positions.has_value(); }
};

// Binary assignment x in {0,1}^n.
using Assignment = std::vector<std::uint8_t>;

inline Assignment indicator(std::size_t n, std::span<const Vertex> set) {
    Assignment x(n, 0);
    for (Vertex v : set) {
        if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        x[v] = 1;
    }
    return x;
}

inline bool is_independent_set(const Graph &g, std::span<const Vertex> set) {
    for (Vertex v : set)
        if (v >= g.n())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for n=" +
                                        std::to_string(g.n()));
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (g.adjacent(set[i], set[j])) return false;
    return true;
}

inline bool is_independent_set(const Graph &g, const Assignment &x) {
    if (x.size() != g.n()) throw std::invalid_argument("assignment length does not match graph");
    for (auto [a, b] : g.edges())
        if (x[a] && x[b]) return false;
    return true;
}

inline double set_weight(const Graph &g, std::span<const Vertex> set) {
    double s = 0.0;
    for (Vertex v : set) s += g.weight(v);
    return s;
}

inline double assignment_weight(const Graph &g, const Assignment &x) {
    double s = 0.0;
    for (Vertex v = 0; v < g.n(); ++v)
        if (x[v]) s += g.weight(v);
    return s;
}

inline double default_penalty(const Graph &g) {
    double m = g.max_weight();
    return m > 0.0 ? 2.0 * m : 2.0;
}

// Minimization form of the penalized MWIS objective:
//   alpha * sum_{(i,j) in E} x_i x_j - sum_i w_i x_i
inline double qubo_cost(const Graph &g, const Assignment &x, double alpha) {
    if (x.size() != g.n())
        throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                    " does not match n=" + std::to_string(g.n()));
    if (!(alpha > 0.0)) throw std::invalid_argument("penalty alpha must be positive");
    double violated = 0.0;
    for (auto [a, b] : g.edges())
        if (x[a] && x[b]) violated += 1.0;
    return alpha * violated - assignment_weight(g, x);
}

// Unit-disk graph on the given points: edge iff distance <= radius.
inline Instance unit_disk_from_points(std::vector<Point> points, double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("disk radius must be positive and finite");
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y))
            throw std::invalid_argument("non-finite coordinate at point " + std::to_string(i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (distance(points[i], points[j]) <= radius + kDistanceTolerance) edges.emplace_back(i, j);
    Instance inst;
    inst.graph = build_graph(points.size(), edges);
    inst.positions = std::move(points);
    inst.disk_radius = radius;
    return inst;
}

// Checks edges <=> distance <= radius. Returns false for instances without
// geometry.
inline bool geometry_consistent(const Instance &inst) {
    if (!inst.positions || inst.positions->size() != inst.n()) return false;
    const auto &p = *inst.positions;
    for (Vertex i = 0; i < inst.n(); ++i)
        for (Vertex j = i + 1; j < inst.n(); ++j) {
            bool close = distance(p[i], p[j]) <= inst.disk_radius + kDistanceTolerance;
            if (close != inst.graph.adjacent(i, j)) return false;
        }
    return true;
}

}  // namespace udmis
