#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "hardness.hpp"
#include "random.hpp"
#include "solver.hpp"

namespace udmis {

enum class WeightKind {
    unweighted,
    uniform_random,
    degree_centrality,
    matching,
    two_distance_matching,
    degree_based,
    annihilation,
    max_clique,
    closeness,
    betweenness,
};

inline constexpr std::array<WeightKind, 10> kAllWeightKinds = {
    WeightKind::unweighted,   WeightKind::uniform_random,        WeightKind::degree_centrality,
    WeightKind::matching,     WeightKind::two_distance_matching, WeightKind::degree_based,
    WeightKind::annihilation, WeightKind::max_clique,            WeightKind::closeness,
    WeightKind::betweenness,
};

inline std::string to_string(WeightKind k) {
    switch (k) {
        case WeightKind::unweighted: return "unweighted";
        case WeightKind::uniform_random: return "uniform_random";
        case WeightKind::degree_centrality: return "degree_centrality";
        case WeightKind::matching: return "matching";
        case WeightKind::two_distance_matching: return "two_distance_matching";
        case WeightKind::degree_based: return "degree_based";
        case WeightKind::annihilation: return "annihilation";
        case WeightKind::max_clique: return "max_clique";
        case WeightKind::closeness: return "closeness";
        case WeightKind::betweenness: return "betweenness";
    }
    return "?";
}

inline WeightKind parse_weight_kind(const std::string &s) {
    for (auto k : kAllWeightKinds)
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown weighting scheme '" + s + "'");
}

struct WeightScheme {
    WeightKind kind = WeightKind::unweighted;
    double delta_bar = 1000.0;
    std::uint64_t seed = 0;
};

// Largest k such that the k smallest degrees sum to at most |E|, together
// with those k vertices (ascending (degree, index) order).
struct Annihilation {
    std::size_t k = 0;
    std::vector<Vertex> set;
};

inline Annihilation annihilation_number(const Graph &g) {
    std::vector<Vertex> order(g.n());
    for (Vertex v = 0; v < g.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    Annihilation r;
    std::size_t sum = 0;
    for (Vertex v : order) {
        if (sum + g.degree(v) > g.num_edges()) break;
        sum += g.degree(v);
        r.set.push_back(v);
    }
    r.k = r.set.size();
    return r;
}

// Maximum-cardinality matching on a general graph (Edmonds' blossom
// algorithm, O(V^3)). Edges are returned as (min, max), sorted.
inline std::vector<Edge> maximum_matching(const Graph &g) {
    const std::size_t n = g.n();
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> match(n, none), parent(n), base(n);
    std::vector<bool> used(n), blossom(n);

    auto lca = [&](std::size_t a, std::size_t b) {
        std::vector<bool> seen(n, false);
        while (true) {
            a = base[a];
            seen[a] = true;
            if (match[a] == none) break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    };
    auto mark_path = [&](std::size_t v, std::size_t b, std::size_t child) {
        while (base[v] != b) {
            blossom[base[v]] = blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };
    auto find_path = [&](std::size_t root) -> std::size_t {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), none);
        for (std::size_t i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (Vertex to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != none && parent[match[to]] != none)) {
                    std::size_t cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (std::size_t i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == none) {
                    parent[to] = v;
                    if (match[to] == none) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return none;
    };

    for (std::size_t v = 0; v < n; ++v) {
        if (match[v] != none) continue;
        std::size_t end = find_path(v);
        while (end != none) {
            std::size_t pv = parent[end], ppv = match[pv];
            match[end] = pv;
            match[pv] = end;
            end = ppv;
        }
    }
    std::vector<Edge> out;
    for (std::size_t v = 0; v < n; ++v)
        if (match[v] != none && v < match[v]) out.emplace_back(v, match[v]);
    return out;
}

inline bool is_matching(const Graph &g, const std::vector<Edge> &m) {
    std::vector<bool> hit(g.n(), false);
    for (auto [a, b] : m) {
        if (a >= g.n() || b >= g.n() || !g.adjacent(a, b) || hit[a] || hit[b]) return false;
        hit[a] = hit[b] = true;
    }
    return true;
}

// Two edges conflict in a 2-distance matching when they share an endpoint
// or an edge joins an endpoint of one to an endpoint of the other.
inline bool edges_conflict(const Graph &g, Edge e, Edge f) {
    auto touch = [&](Vertex x, Vertex y) { return x == y || g.adjacent(x, y); };
    return touch(e.first, f.first) || touch(e.first, f.second) || touch(e.second, f.first) ||
           touch(e.second, f.second);
}

inline bool is_two_distance_matching(const Graph &g, const std::vector<Edge> &m) {
    if (!is_matching(g, m)) return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (edges_conflict(g, m[i], m[j])) return false;
    return true;
}

// Maximum 2-distance matching, solved exactly as a maximum independent set
// of the edge-conflict graph with the branch-and-bound solver.
inline std::vector<Edge> two_distance_matching(const Graph &g) {
    const auto &edges = g.edges();
    std::vector<Edge> conflicts;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges_conflict(g, edges[i], edges[j])) conflicts.emplace_back(i, j);
    Graph cg = build_graph(edges.size(), conflicts);
    std::vector<Edge> out;
    for (Vertex e : max_weight_independent_set(cg)) out.push_back(edges[e]);
    if (!is_two_distance_matching(g, out)) throw std::logic_error("two_distance_matching produced an invalid set");
    return out;
}

inline constexpr std::size_t kMaxCliqueMaxN = 500;

// Exact maximum clique as a maximum independent set of the complement.
inline std::vector<Vertex> maximum_clique(const Graph &g) {
    if (g.n() > kMaxCliqueMaxN)
        throw std::invalid_argument("maximum_clique supports n <= " + std::to_string(kMaxCliqueMaxN));
    Graph unit = build_graph(g.n(), g.edges());
    return max_weight_independent_set(complement(unit));
}

namespace detail {

inline std::vector<std::size_t> bfs_distances(const Graph &g, Vertex s) {
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> d(g.n(), inf);
    std::queue<Vertex> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex u : g.neighbors(v))
            if (d[u] == inf) {
                d[u] = d[v] + 1;
                q.push(u);
            }
    }
    return d;
}

}  // namespace detail

// C_C(v) = (n-1) / sum_u d(v,u). Undefined on disconnected graphs.
inline std::vector<double> closeness_centrality(const Graph &g) {
    const std::size_t n = g.n();
    if (n < 2) throw std::invalid_argument("closeness centrality needs at least two vertices");
    std::vector<double> c(n);
    for (Vertex v = 0; v < n; ++v) {
        auto d = detail::bfs_distances(g, v);
        std::size_t sum = 0;
        for (auto x : d) {
            if (x == std::numeric_limits<std::size_t>::max())
                throw std::invalid_argument("closeness centrality undefined: graph is disconnected (" +
                                            std::to_string(component_stats(g).size()) + " components)");
            sum += x;
        }
        c[v] = static_cast<double>(n - 1) / static_cast<double>(sum);
    }
    return c;
}

// Unnormalized betweenness over ordered pairs (s, t), s != v != t
// (Brandes' accumulation from every source).
inline std::vector<double> betweenness_centrality(const Graph &g) {
    const std::size_t n = g.n();
    std::vector<double> cb(n, 0.0);
    std::vector<double> sigma(n), delta(n);
    std::vector<long long> dist(n);
    std::vector<std::vector<Vertex>> pred(n);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        for (auto &p : pred) p.clear();
        stack.clear();
        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            stack.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        while (!stack.empty()) {
            Vertex w = stack.back();
            stack.pop_back();
            for (Vertex v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) cb[w] += delta[w];
        }
    }
    return cb;
}

// Returns a copy of g with weights assigned by `scheme`.
inline Graph apply_scheme(const Graph &g, const WeightScheme &scheme) {
    if (!(scheme.delta_bar > 0.0)) throw std::invalid_argument("delta_bar must be positive");
    const std::size_t n = g.n();
    std::vector<double> w(n, 1.0);
    auto need_two = [&](const char *what) {
        if (n < 2) throw std::invalid_argument(std::string(what) + " weighting needs at least two vertices");
    };

    switch (scheme.kind) {
        case WeightKind::unweighted:
            break;
        case WeightKind::uniform_random: {
            Rng rng(scheme.seed);
            for (auto &x : w) x = rng.uniform(0.1, scheme.delta_bar);
            break;
        }
        case WeightKind::degree_centrality: {
            need_two("degree centrality");
            std::size_t max_deg = 0;
            for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
            // C_D(v) / max C_D = deg(v) / max deg; an edgeless graph keeps weight 1.
            if (max_deg > 0)
                for (Vertex v = 0; v < n; ++v)
                    w[v] = 1.0 + scheme.delta_bar * static_cast<double>(g.degree(v)) / static_cast<double>(max_deg);
            break;
        }
        case WeightKind::matching:
        case WeightKind::two_distance_matching: {
            auto m = scheme.kind == WeightKind::matching ? maximum_matching(g) : two_distance_matching(g);
            std::vector<bool> matched(n, false);
            for (auto [a, b] : m) matched[a] = matched[b] = true;
            for (Vertex v = 0; v < n; ++v)
                w[v] = matched[v] ? 1.0 : 0.1 * static_cast<double>(g.degree(v) + 1);
            break;
        }
        case WeightKind::degree_based: {
            std::size_t min_deg = std::numeric_limits<std::size_t>::max();
            for (Vertex v = 0; v < n; ++v) min_deg = std::min(min_deg, g.degree(v));
            for (Vertex v = 0; v < n; ++v)
                w[v] = g.degree(v) == min_deg ? 0.1 : 1000.0 * static_cast<double>(g.degree(v) + 1);
            break;
        }
        case WeightKind::annihilation: {
            std::fill(w.begin(), w.end(), 0.1);
            for (Vertex v : annihilation_number(g).set) w[v] = 1000.0;
            break;
        }
        case WeightKind::max_clique: {
            std::fill(w.begin(), w.end(), 1000.0);
            for (Vertex v : maximum_clique(g)) w[v] = 1.0;
            break;
        }
        case WeightKind::closeness: {
            need_two("closeness");
            auto c = closeness_centrality(g);
            double mx = *std::max_element(c.begin(), c.end());
            for (Vertex v = 0; v < n; ++v) w[v] = 1.0 + 999.0 * c[v] / mx;
            break;
        }
        case WeightKind::betweenness: {
            need_two("betweenness");
            auto c = betweenness_centrality(g);
            auto [lo, hi] = std::minmax_element(c.begin(), c.end());
            const double range = *hi - *lo;
            for (Vertex v = 0; v < n; ++v) w[v] = range > 0.0 ? 0.1 + 999.0 * (c[v] - *lo) / range : 0.1;
            break;
        }
    }
    return g.with_weights(std::move(w));
}

}  // namespace udmis
