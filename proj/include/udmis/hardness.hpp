#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "instance_gen.hpp"

namespace udmis {

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;  // each bag sorted ascending
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
    std::size_t width = 0;  // max bag size - 1 (0 for an empty graph)
};

// Returns a description of the first violated decomposition axiom, or
// nothing when `td` is a valid tree decomposition of `g`.
inline std::optional<std::string> check_tree_decomposition(const Graph &g, const TreeDecomposition &td) {
    const std::size_t nb = td.bags.size();
    if (g.n() > 0 && nb == 0) return "no bags";
    if (nb > 0 && td.tree_edges.size() != nb - 1) return "tree edge count is not bags - 1";

    std::vector<std::vector<std::size_t>> tadj(nb);
    for (auto [a, b] : td.tree_edges) {
        if (a >= nb || b >= nb || a == b) return "tree edge references an invalid bag";
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    if (nb > 0) {
        std::vector<bool> seen(nb, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto b = stack.back();
            stack.pop_back();
            for (auto c : tadj[b])
                if (!seen[c]) {
                    seen[c] = true;
                    ++reached;
                    stack.push_back(c);
                }
        }
        if (reached != nb) return "bag tree is not connected";
    }

    std::vector<std::vector<std::size_t>> holders(g.n());
    std::vector<Bitset> bag_sets;
    bag_sets.reserve(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        Bitset s(g.n());
        for (Vertex v : td.bags[b]) {
            if (v >= g.n()) return "bag " + std::to_string(b) + " holds out-of-range vertex";
            s.set(v);
            holders[v].push_back(b);
        }
        bag_sets.push_back(std::move(s));
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (holders[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
    for (auto [a, b] : g.edges()) {
        bool covered = false;
        for (auto bag : holders[a])
            if (bag_sets[bag].test(b)) {
                covered = true;
                break;
            }
        if (!covered) return "edge (" + std::to_string(a) + "," + std::to_string(b) + ") is in no bag";
    }
    // Bags holding v must induce a connected subtree.
    std::vector<char> mark(nb, 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        for (auto b : holders[v]) mark[b] = 1;
        std::vector<std::size_t> stack{holders[v][0]};
        mark[holders[v][0]] = 2;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto b = stack.back();
            stack.pop_back();
            for (auto c : tadj[b])
                if (mark[c] == 1) {
                    mark[c] = 2;
                    ++reached;
                    stack.push_back(c);
                }
        }
        for (auto b : holders[v]) mark[b] = 0;
        if (reached != holders[v].size())
            return "bags containing vertex " + std::to_string(v) + " are not connected";
    }
    return std::nullopt;
}

// Greedy min-fill elimination: repeatedly eliminate the vertex whose
// neighborhood needs the fewest fill edges (ties: lowest index). Bag k is
// the eliminated vertex plus its neighbors at elimination time.
inline TreeDecomposition minfill_treewidth(const Graph &g) {
    const std::size_t n = g.n();
    TreeDecomposition td;
    if (n == 0) return td;

    std::vector<Bitset> adj;
    adj.reserve(n);
    for (Vertex v = 0; v < n; ++v) adj.push_back(g.neighbor_mask(v));
    Bitset alive = Bitset::full(n);

    auto fill_of = [&](Vertex v) {
        std::size_t deg = adj[v].count();
        std::size_t inner = 0;  // twice the edges already present in N(v)
        adj[v].for_each([&](Vertex u) { inner += adj[u].intersection_count(adj[v]); });
        return deg * (deg - (deg > 0 ? 1 : 0)) / 2 - inner / 2;
    };

    std::vector<std::size_t> fill(n);
    for (Vertex v = 0; v < n; ++v) fill[v] = fill_of(v);

    std::vector<std::size_t> position(n);
    std::vector<Vertex> order;
    order.reserve(n);
    td.bags.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        alive.for_each([&](Vertex v) {
            if (best == n || fill[v] < fill[best]) best = v;
        });
        const Bitset nb = adj[best];
        std::vector<Vertex> bag = nb.to_vector();
        bag.push_back(best);
        std::sort(bag.begin(), bag.end());
        td.width = std::max(td.width, bag.size() - 1);
        td.bags.push_back(std::move(bag));
        position[best] = step;
        order.push_back(best);

        // Make N(best) a clique, then drop best.
        nb.for_each([&](Vertex u) {
            adj[u] |= nb;
            adj[u].reset(u);
            adj[u].reset(best);
        });
        alive.reset(best);
        adj[best] = Bitset(n);

        // Fill counts can change for N(best) and their neighbors.
        Bitset touched = nb;
        nb.for_each([&](Vertex u) { touched |= adj[u]; });
        touched.for_each([&](Vertex u) { fill[u] = fill_of(u); });
    }

    // Parent of bag k: the bag of its earliest-eliminated other member.
    std::vector<std::size_t> roots;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t parent = n;
        for (Vertex u : td.bags[k])
            if (u != order[k] && (parent == n || position[u] < parent)) parent = position[u];
        if (parent == n)
            roots.push_back(k);
        else
            td.tree_edges.emplace_back(k, parent);
    }
    for (std::size_t r = 1; r < roots.size(); ++r) td.tree_edges.emplace_back(roots[r - 1], roots[r]);
    return td;
}

// Connected component sizes, descending.
inline std::vector<std::size_t> component_stats(const Graph &g) {
    std::vector<bool> seen(g.n(), false);
    std::vector<std::size_t> sizes;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        stack.push_back(s);
        std::size_t size = 0;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

inline constexpr std::size_t kDefaultOrientations = 180;

namespace detail {

inline const std::vector<Point> &require_positions(const Instance &inst, const char *what) {
    if (!inst.positions) throw std::invalid_argument(std::string(what) + " requires vertex positions");
    return *inst.positions;
}

// Offsets at which cell membership along one axis changes: any offset in
// (f_prev, f_k] yields the same binning as f_k.
inline std::vector<double> breakpoints(const std::vector<double> &proj) {
    std::vector<double> fr;
    fr.reserve(proj.size());
    for (double p : proj) fr.push_back(p - std::floor(p));
    std::sort(fr.begin(), fr.end());
    fr.erase(std::unique(fr.begin(), fr.end()), fr.end());
    return fr;
}

// Max points in any unit bin [o+k, o+k+1), giving up once `cutoff` is hit.
inline std::size_t max_bin(const std::vector<double> &proj, double offset, std::size_t cutoff,
                           std::vector<std::size_t> &counts, long long base) {
    std::size_t best = 0;
    std::vector<long long> used;
    for (double p : proj) {
        long long k = static_cast<long long>(std::floor(p - offset)) - base;
        auto &c = counts[static_cast<std::size_t>(k)];
        if (c == 0) used.push_back(k);
        best = std::max(best, ++c);
        if (best >= cutoff) break;
    }
    for (auto k : used) counts[static_cast<std::size_t>(k)] = 0;
    return best;
}

}  // namespace detail

// Min over slab orientations in [0, pi) and slab offsets of the max number
// of points in a unit-width slab, with coordinates scaled so the disk radius
// is 1. Offsets are enumerated at projection breakpoints, so each
// orientation is evaluated exactly.
inline std::size_t thickness(const Instance &inst, std::size_t n_orientations = kDefaultOrientations) {
    const auto &pts = detail::require_positions(inst, "thickness");
    if (pts.empty()) return 0;
    if (n_orientations < 1) throw std::invalid_argument("need at least one orientation");
    const double scale = 1.0 / inst.disk_radius;
    std::size_t best = pts.size();
    std::vector<double> proj(pts.size());
    std::vector<std::size_t> counts;
    for (std::size_t k = 0; k < n_orientations && best > 1; ++k) {
        const double th = std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_orientations);
        const double c = std::cos(th), s = std::sin(th);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            proj[i] = (pts[i].x * c + pts[i].y * s) * scale;
            lo = std::min(lo, proj[i]);
            hi = std::max(hi, proj[i]);
        }
        const long long base = static_cast<long long>(std::floor(lo)) - 1;
        counts.assign(static_cast<std::size_t>(std::floor(hi) - static_cast<double>(base)) + 2, 0);
        for (double o : detail::breakpoints(proj)) best = std::min(best, detail::max_bin(proj, o, best, counts, base));
    }
    return best;
}

// Min over square-grid orientations in [0, pi/2) of the max number of points
// in one half-open unit cell, over every grid offset (disk radius scaled
// to 1). The best cell for an orientation has its lower edges at point
// coordinates, so only those placements are scanned.
inline std::size_t geometric_density(const Instance &inst, std::size_t n_orientations = kDefaultOrientations) {
    const auto &pts = detail::require_positions(inst, "geometric_density");
    if (pts.empty()) return 0;
    if (n_orientations < 1) throw std::invalid_argument("need at least one orientation");
    const double scale = 1.0 / inst.disk_radius;
    const std::size_t n = pts.size();
    std::size_t best = n;
    std::vector<std::pair<double, double>> ab(n);
    std::vector<double> column;
    for (std::size_t k = 0; k < n_orientations && best > 1; ++k) {
        const double th = std::numbers::pi / 2 * static_cast<double>(k) / static_cast<double>(n_orientations);
        const double c = std::cos(th), s = std::sin(th);
        for (std::size_t i = 0; i < n; ++i)
            ab[i] = {(pts[i].x * c + pts[i].y * s) * scale, (-pts[i].x * s + pts[i].y * c) * scale};
        std::sort(ab.begin(), ab.end());
        std::size_t worst = 1;
        for (std::size_t i = 0, j = 0; i < n && worst < best; ++i) {
            if (i > 0 && ab[i].first == ab[i - 1].first) continue;
            j = std::max(j, i);
            while (j < n && ab[j].first < ab[i].first + 1.0) ++j;
            if (j - i <= worst) continue;
            column.clear();
            for (std::size_t t = i; t < j; ++t) column.push_back(ab[t].second);
            std::sort(column.begin(), column.end());
            for (std::size_t lo = 0, hi = 0; lo < column.size(); ++lo) {
                hi = std::max(hi, lo);
                while (hi < column.size() && column[hi] < column[lo] + 1.0) ++hi;
                worst = std::max(worst, hi - lo);
            }
        }
        best = std::min(best, worst);
    }
    return best;
}

// Ratio of the interaction at the closest non-adjacent distance to the
// interaction at the farthest adjacent distance, for U ~ 1/r^6.
inline double interaction_leakage(LayoutKind kind) {
    double edge_max = 0.0, nonedge_min = 0.0;
    switch (kind) {
        case LayoutKind::triangular:
            edge_max = 1.0;
            nonedge_min = std::sqrt(3.0);
            break;
        case LayoutKind::kings:
            edge_max = std::sqrt(2.0);
            nonedge_min = std::sqrt(5.0);
            break;
        default:
            throw std::invalid_argument("unknown layout kind");
    }
    return std::pow(edge_max / nonedge_min, 6);
}

struct HardnessReport {
    double fill_density = 1.0;
    std::optional<std::size_t> geometric_density;
    std::size_t treewidth_est = 0;
    std::optional<std::size_t> thickness_est;
    std::vector<std::size_t> component_sizes;
};

inline HardnessReport analyze(const Instance &inst, std::size_t n_orientations = kDefaultOrientations) {
    HardnessReport r;
    r.fill_density = inst.meta.rho;
    r.treewidth_est = minfill_treewidth(inst.graph).width;
    r.component_sizes = component_stats(inst.graph);
    if (inst.positions) {
        r.geometric_density = geometric_density(inst, n_orientations);
        r.thickness_est = thickness(inst, n_orientations);
    }
    return r;
}

}  // namespace udmis
