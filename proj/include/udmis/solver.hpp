#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "graph.hpp"
#include "hardness.hpp"

namespace udmis {

// Result of an exact MWIS solve.
//
// Ticks are a deterministic work counter; they are a pure function of the
// graph (including weights and vertex order) and the budget. One tick is
// charged for each
//   - search node expanded,
//   - upper-bound evaluation (one weighted clique cover of a candidate set),
//   - candidate-set update (every derived candidate set: the include and
//     exclude children of a branch, and each connected component split off).
struct SolveReport {
    double optimum = 0.0;
    std::vector<Vertex> solution;  // ascending
    std::uint64_t ticks = 0;
    std::uint64_t bb_nodes = 0;
    double lp_root = 0.0;
    double root_gap_pct = 0.0;
    bool optimal = true;  // false when the tick budget ran out
};

enum class BranchRule { cover_order, max_degree };
enum class CoverOrder { local_degree, static_degree };

struct SolveOptions {
    std::optional<std::uint64_t> budget_ticks;
    bool compute_lp = true;
    BranchRule branching = BranchRule::cover_order;
    CoverOrder cover_order = CoverOrder::local_degree;
    bool domination = true;
};

// --------------------------------------------------------------------------
// LP relaxation of the edge formulation
//   max sum w_i x_i  s.t.  x_i + x_j <= 1 on edges, 0 <= x <= 1.
// Its optimum is half-integral and equals half the MWIS weight of the
// bipartite double cover, which is total weight minus a minimum vertex
// cover, i.e. a min cut. So LP = W - maxflow / 2.

namespace detail {

class MaxFlow {
  public:
    explicit MaxFlow(std::size_t n) : head_(n, npos), level_(n), it_(n) {}

    void add_edge(std::size_t u, std::size_t v, double cap) {
        arcs_.push_back({v, head_[u], cap});
        head_[u] = arcs_.size() - 1;
        arcs_.push_back({u, head_[v], 0.0});
        head_[v] = arcs_.size() - 1;
    }

    double run(std::size_t s, std::size_t t) {
        double flow = 0.0;
        while (bfs(s, t)) {
            it_ = head_;
            while (true) {
                double f = dfs(s, t, std::numeric_limits<double>::infinity());
                if (f <= kEps) break;
                flow += f;
            }
        }
        return flow;
    }

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static constexpr double kEps = 1e-12;
    struct Arc {
        std::size_t to;
        std::size_t next;
        double cap;
    };

    bool bfs(std::size_t s, std::size_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::size_t> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto a = head_[u]; a != npos; a = arcs_[a].next)
                if (arcs_[a].cap > kEps && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[u] + 1;
                    q.push(arcs_[a].to);
                }
        }
        return level_[t] >= 0;
    }

    double dfs(std::size_t u, std::size_t t, double pushed) {
        if (u == t) return pushed;
        for (auto &a = it_[u]; a != npos; a = arcs_[a].next) {
            auto &arc = arcs_[a];
            if (arc.cap > kEps && level_[arc.to] == level_[u] + 1) {
                double f = dfs(arc.to, t, std::min(pushed, arc.cap));
                if (f > kEps) {
                    arc.cap -= f;
                    arcs_[a ^ 1].cap += f;
                    return f;
                }
            }
        }
        return 0.0;
    }

    std::vector<std::size_t> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> it_;
};

}  // namespace detail

inline double lp_root_relaxation(const Graph &g) {
    const std::size_t n = g.n();
    if (n == 0) return 0.0;
    // Nodes: 0..n-1 left copies, n..2n-1 right copies, 2n source, 2n+1 sink.
    const std::size_t s = 2 * n, t = 2 * n + 1;
    const double inf = 2.0 * g.total_weight() + 1.0;
    detail::MaxFlow mf(2 * n + 2);
    for (Vertex v = 0; v < n; ++v) {
        mf.add_edge(s, v, g.weight(v));
        mf.add_edge(n + v, t, g.weight(v));
    }
    for (auto [a, b] : g.edges()) {
        mf.add_edge(a, n + b, inf);
        mf.add_edge(b, n + a, inf);
    }
    double lp = g.total_weight() - mf.run(s, t) / 2.0;
    return std::max(lp, 0.0);
}

// --------------------------------------------------------------------------
// Exhaustive oracle.

struct BruteForceResult {
    double optimum = 0.0;
    std::uint64_t count_of_optima = 0;
    std::vector<Vertex> witness;
};

inline constexpr std::size_t kBruteForceMaxN = 26;

inline bool same_value(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); }

inline BruteForceResult brute_force(const Graph &g) {
    const std::size_t n = g.n();
    if (n > kBruteForceMaxN)
        throw std::invalid_argument("brute_force supports n <= " + std::to_string(kBruteForceMaxN) + ", got " +
                                    std::to_string(n));
    std::vector<std::uint32_t> nb(n, 0);
    for (auto [a, b] : g.edges()) {
        nb[a] |= 1U << b;
        nb[b] |= 1U << a;
    }
    BruteForceResult r;
    std::uint32_t best_mask = 0;
    // Walk every independent set: vertices are decided in index order and a
    // vertex may be added only if no chosen neighbor precedes it.
    auto rec = [&](auto &&self, std::size_t v, std::uint32_t chosen, double weight) -> void {
        if (v == n) {
            if (r.count_of_optima > 0 && same_value(weight, r.optimum)) {
                ++r.count_of_optima;
            } else if (r.count_of_optima == 0 || weight > r.optimum) {
                r.optimum = weight;
                r.count_of_optima = 1;
                best_mask = chosen;
            }
            return;
        }
        self(self, v + 1, chosen, weight);
        if (!(nb[v] & chosen)) self(self, v + 1, chosen | (1U << v), weight + g.weight(v));
    };
    rec(rec, 0, 0U, 0.0);
    for (Vertex v = 0; v < n; ++v)
        if (best_mask >> v & 1U) r.witness.push_back(v);
    return r;
}

// --------------------------------------------------------------------------
// Branch and bound.

namespace detail {

class BranchAndBound {
  public:
    BranchAndBound(const Graph &g, const SolveOptions &opts) : g_(g), opts_(opts) {}

    std::uint64_t ticks() const { return ticks_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

    // Returns an independent subset of `cand` with its weight. If the
    // optimum over `cand` exceeds `lb` the returned set is optimal;
    // otherwise it is merely valid.
    double search(const Bitset &cand, double lb, std::vector<Vertex> &out) {
        ++nodes_;
        tick();
        if (cand.none()) return 0.0;
        if (exhausted_) return greedy(cand, out);
        if (!opts_.domination) return search_reduced(cand, lb, out);
        Bitset reduced = cand;
        reduce_dominated(reduced);
        return search_reduced(reduced, lb, out);
    }

  private:
    double search_reduced(const Bitset &cand, double lb, std::vector<Vertex> &out) {
        if (cand.none()) return 0.0;
        auto comps = components(cand);
        if (comps.size() > 1) return search_components(comps, lb, out);

        if (cand.count() == 1) {
            Vertex v = cand.first();
            out.push_back(v);
            return g_.weight(v);
        }
        return opts_.branching == BranchRule::cover_order ? branch_cover(cand, lb, out)
                                                          : branch_degree(cand, lb, out);
    }

    // Cover the candidates with weighted cliques; prefix[i] bounds any
    // independent set inside order[0..i]. Branch on the last vertices
    // first: including order[i] leaves order[0..i-1] minus its neighbors,
    // then order[i] is dropped for the remaining branches.
    double branch_cover(const Bitset &cand, double lb, std::vector<Vertex> &out) {
        tick();
        std::vector<Vertex> order;
        std::vector<double> prefix;
        clique_cover(cand, order, prefix);
        double best = lb;
        std::vector<Vertex> best_set;
        bool found = false;
        Bitset rest = cand;
        for (std::size_t i = order.size(); i-- > 0;) {
            if (prefix[i] <= best + tolerance(best)) break;
            const Vertex v = order[i];
            rest.reset(v);
            tick();
            Bitset inc = rest;
            inc.subtract(g_.neighbor_mask(v));
            tick();
            std::vector<Vertex> inc_set;
            double val = g_.weight(v) + search(inc, best - g_.weight(v), inc_set);
            if (val > best + tolerance(best)) {
                best = val;
                inc_set.push_back(v);
                best_set = std::move(inc_set);
                found = true;
            }
            if (exhausted_) break;
        }
        if (!found) return exhausted_ ? greedy(cand, out) : 0.0;
        out.insert(out.end(), best_set.begin(), best_set.end());
        return best;
    }

    // Binary branching on the vertex of maximum weighted degree (sum of
    // candidate-neighbor weights, ties to lowest index), include first.
    double branch_degree(const Bitset &cand, double lb, std::vector<Vertex> &out) {
        tick();
        if (clique_cover_bound(cand) <= lb + tolerance(lb)) return 0.0;
        Vertex v = g_.n();
        double best_score = -1.0;
        cand.for_each([&](Vertex u) {
            double sc = 0.0;
            for (Vertex x : g_.neighbors(u))
                if (cand.test(x)) sc += g_.weight(x);
            if (sc > best_score) {
                best_score = sc;
                v = u;
            }
        });

        Bitset inc = cand;
        inc.subtract(g_.neighbor_mask(v));
        inc.reset(v);
        tick();
        std::vector<Vertex> inc_set;
        double inc_val = g_.weight(v) + search(inc, lb - g_.weight(v), inc_set);
        inc_set.push_back(v);

        Bitset exc = cand;
        exc.reset(v);
        tick();
        std::vector<Vertex> exc_set;
        double exc_val = search(exc, std::max(lb, inc_val), exc_set);
        if (exc_val > inc_val + tolerance(inc_val)) {
            out.insert(out.end(), exc_set.begin(), exc_set.end());
            return exc_val;
        }
        out.insert(out.end(), inc_set.begin(), inc_set.end());
        return inc_val;
    }

    static double tolerance(double v) { return 1e-9 * std::max(1.0, std::abs(v)); }

    void tick() {
        ++ticks_;
        if (opts_.budget_ticks && ticks_ >= *opts_.budget_ticks) exhausted_ = true;
    }

    double search_components(const std::vector<Bitset> &comps, double lb, std::vector<Vertex> &out) {
        std::vector<double> bound(comps.size());
        double total_bound = 0.0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            tick();
            bound[i] = clique_cover_bound(comps[i]);
            total_bound += bound[i];
        }
        if (total_bound <= lb + tolerance(lb)) return 0.0;
        // Each component must beat lb minus what the others can contribute;
        // solved components contribute their exact value.
        double rest = total_bound;
        double value = 0.0;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            rest -= bound[i];
            double need = lb - value - rest;
            std::vector<Vertex> part;
            double got = search(comps[i], need, part);
            out.insert(out.end(), part.begin(), part.end());
            value += got;
            // Once a component cannot reach its share, lb is out of reach;
            // the union so far is still a valid independent set.
            if (!(got > need + tolerance(need)) && !exhausted_) return value;
        }
        return value;
    }

    // Drops every v that has a neighbor u with N[u] within N[v] (inside the
    // candidate set) and w(u) >= w(v): swapping v for u in any solution
    // stays independent and loses no weight. Scans repeat until a pass
    // removes nothing.
    void reduce_dominated(Bitset &cand) {
        bool again = true;
        while (again) {
            again = false;
            cand.for_each([&](Vertex v) {
                if (!cand.test(v)) return;
                for (Vertex u : g_.neighbors(v)) {
                    if (!cand.test(u) || g_.weight(u) < g_.weight(v)) continue;
                    if (closed_within(u, v, cand)) {
                        cand.reset(v);
                        tick();
                        again = true;
                        return;
                    }
                }
            });
        }
    }

    // For adjacent u, v: N[u] within N[v], both restricted to cand.
    bool closed_within(Vertex u, Vertex v, const Bitset &cand) const {
        const auto nu = g_.neighbor_mask(u).words(), nv = g_.neighbor_mask(v).words(), c = cand.words();
        const std::size_t vw = v >> 6;
        const std::uint64_t vbit = std::uint64_t{1} << (v & 63);
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::uint64_t extra = nu[i] & c[i] & ~nv[i];
            if (i == vw) extra &= ~vbit;
            if (extra) return false;
        }
        return true;
    }

    // Connected components of the subgraph induced by `cand`, ordered by
    // smallest vertex. Splitting charges one tick per component.
    std::vector<Bitset> components(const Bitset &cand) {
        std::vector<Bitset> out;
        Bitset left = cand;
        while (left.any()) {
            Bitset comp(g_.n());
            Bitset frontier(g_.n());
            frontier.set(left.first());
            while (frontier.any()) {
                comp |= frontier;
                left.subtract(frontier);
                Bitset next(g_.n());
                frontier.for_each([&](Vertex u) { next |= g_.neighbor_mask(u); });
                next &= left;
                frontier = std::move(next);
            }
            out.push_back(std::move(comp));
        }
        if (out.size() > 1)
            for (std::size_t i = 0; i < out.size(); ++i) tick();
        return out;
    }

    // Weighted clique cover. Vertices are taken by weight (descending), then
    // by degree (ascending); each is charged against the cliques it can
    // join in order, and opens a new clique for any residual weight. An
    // independent set meets each clique at most once, so the charges opened
    // up to vertex order[i] bound every independent subset of
    // order[0..i].
    void clique_cover(const Bitset &cand, std::vector<Vertex> &order, std::vector<double> &prefix) {
        order.clear();
        prefix.clear();
        cand.for_each([&](Vertex v) { order.push_back(v); });
        if (local_degree_.size() < g_.n()) local_degree_.resize(g_.n());
        for (Vertex v : order)
            local_degree_[v] = opts_.cover_order == CoverOrder::local_degree
                                   ? g_.neighbor_mask(v).intersection_count(cand)
                                   : g_.degree(v);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            if (g_.weight(a) != g_.weight(b)) return g_.weight(a) > g_.weight(b);
            if (local_degree_[a] != local_degree_[b]) return local_degree_[a] < local_degree_[b];
            return g_.degree(a) < g_.degree(b);
        });
        std::size_t k = 0;
        double bound = 0.0;
        for (Vertex v : order) {
            double residual = g_.weight(v);
            for (std::size_t c = 0; c < k && residual > 0.0; ++c) {
                if (!common_[c].test(v)) continue;
                common_[c] &= g_.neighbor_mask(v);
                residual -= charge_[c];
            }
            if (residual > 0.0) {
                if (k == common_.size()) {
                    common_.emplace_back();
                    charge_.push_back(0.0);
                }
                common_[k] = g_.neighbor_mask(v);
                charge_[k] = residual;
                bound += residual;
                ++k;
            }
            prefix.push_back(bound);
        }
    }

    double clique_cover_bound(const Bitset &cand) {
        std::vector<Vertex> order;
        std::vector<double> prefix;
        clique_cover(cand, order, prefix);
        return prefix.empty() ? 0.0 : prefix.back();
    }

    double greedy(const Bitset &cand, std::vector<Vertex> &out) const {
        Bitset left = cand;
        double value = 0.0;
        while (left.any()) {
            Vertex v = left.first();
            out.push_back(v);
            value += g_.weight(v);
            left.subtract(g_.neighbor_mask(v));
            left.reset(v);
        }
        return value;
    }

    const Graph &g_;
    SolveOptions opts_;
    std::uint64_t ticks_ = 0;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Bitset> common_;
    std::vector<double> charge_;
    std::vector<std::size_t> local_degree_;
};

}  // namespace detail

inline double root_gap_percent(double lp_root, double optimum) {
    if (!(lp_root > 0.0)) throw std::invalid_argument("root gap undefined: LP root value is not positive");
    return std::max(0.0, 100.0 * (lp_root - optimum) / lp_root);
}

inline SolveReport solve_bb(const Graph &g, const SolveOptions &opts = {}) {
    for (double w : g.weights())
        if (!(w >= 0.0)) throw std::invalid_argument("solve_bb requires nonnegative weights");
    detail::BranchAndBound bb(g, opts);
    SolveReport r;
    bb.search(Bitset::full(g.n()), -1.0, r.solution);
    std::sort(r.solution.begin(), r.solution.end());
    r.optimum = set_weight(g, r.solution);
    r.ticks = bb.ticks();
    r.bb_nodes = bb.nodes();
    r.optimal = !bb.exhausted();
    if (opts.compute_lp) {
        r.lp_root = lp_root_relaxation(g);
        r.root_gap_pct = r.lp_root > 0.0 ? root_gap_percent(r.lp_root, r.optimum) : 0.0;
    }
    return r;
}

inline SolveReport solve_bb(const Graph &g, std::optional<std::uint64_t> budget) {
    SolveOptions o;
    o.budget_ticks = budget;
    return solve_bb(g, o);
}

inline double root_gap(const Graph &g) {
    double lp = lp_root_relaxation(g);
    if (!(lp > 0.0)) throw std::invalid_argument("root gap undefined for a graph with zero total weight");
    SolveOptions o;
    o.compute_lp = false;
    return root_gap_percent(lp, solve_bb(g, o).optimum);
}

// Maximum-weight independent set of g as a vertex list (ascending).
inline std::vector<Vertex> max_weight_independent_set(const Graph &g) {
    SolveOptions o;
    o.compute_lp = false;
    return solve_bb(g, o).solution;
}

// --------------------------------------------------------------------------
// Dynamic programming over a tree decomposition.

inline constexpr std::size_t kMaxDpWidth = 25;

namespace detail {

struct BagTable {
    std::vector<Vertex> verts;  // bit i of a mask <-> verts[i]
    std::vector<double> val;    // -inf marks a dependent subset
};

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline void introduce(const Graph &g, BagTable &t, Vertex v) {
    const std::size_t k = t.verts.size();
    std::uint64_t nbmask = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (g.adjacent(v, t.verts[i])) nbmask |= std::uint64_t{1} << i;
    const std::size_t half = std::size_t{1} << k;
    t.val.resize(2 * half);
    for (std::size_t m = 0; m < half; ++m)
        t.val[half + m] = (m & nbmask) || t.val[m] == kNegInf ? kNegInf : t.val[m] + g.weight(v);
    t.verts.push_back(v);
}

inline void forget(BagTable &t, Vertex v) {
    const std::size_t k = t.verts.size();
    const auto p = static_cast<std::size_t>(std::find(t.verts.begin(), t.verts.end(), v) - t.verts.begin());
    const std::size_t low = (std::size_t{1} << p) - 1;
    std::vector<double> out(std::size_t{1} << (k - 1));
    for (std::size_t m = 0; m < out.size(); ++m) {
        std::size_t without = (m & low) | ((m & ~low) << 1);
        out[m] = std::max(t.val[without], t.val[without | (std::size_t{1} << p)]);
    }
    t.val = std::move(out);
    t.verts.erase(t.verts.begin() + static_cast<std::ptrdiff_t>(p));
}

// Reorders the table to follow `target` (a permutation of t.verts).
inline void permute(BagTable &t, const std::vector<Vertex> &target) {
    if (t.verts == target) return;
    const std::size_t k = t.verts.size();
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i)
        pos[i] = static_cast<std::size_t>(std::find(target.begin(), target.end(), t.verts[i]) - target.begin());
    std::vector<double> out(t.val.size());
    for (std::size_t m = 0; m < t.val.size(); ++m) {
        std::size_t nm = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (m >> i & 1U) nm |= std::size_t{1} << pos[i];
        out[nm] = t.val[m];
    }
    t.val = std::move(out);
    t.verts = target;
}

inline void join(const Graph &g, BagTable &a, const BagTable &b) {
    const std::size_t k = a.verts.size();
    for (std::size_t m = 0; m < a.val.size(); ++m) {
        if (a.val[m] == kNegInf || b.val[m] == kNegInf) {
            a.val[m] = kNegInf;
            continue;
        }
        double shared = 0.0;
        for (std::size_t i = 0; i < k; ++i)
            if (m >> i & 1U) shared += g.weight(a.verts[i]);
        a.val[m] = a.val[m] + b.val[m] - shared;
    }
}

}  // namespace detail

// Exact MWIS weight by DP over a nice-decomposition traversal of `td`:
// every tree edge becomes forget steps (child-only vertices) followed by
// introduce steps (parent-only vertices), and siblings are joined.
inline double solve_treewidth_dp(const Graph &g, const TreeDecomposition &td) {
    if (auto bad = check_tree_decomposition(g, td)) throw std::invalid_argument("invalid tree decomposition: " + *bad);
    if (g.n() == 0) return 0.0;
    for (const auto &bag : td.bags)
        if (bag.size() > kMaxDpWidth + 1)
            throw std::invalid_argument("tree decomposition width " + std::to_string(bag.size() - 1) +
                                        " exceeds DP limit " + std::to_string(kMaxDpWidth));

    const std::size_t nb = td.bags.size();
    std::vector<std::vector<std::size_t>> tadj(nb);
    for (auto [a, b] : td.tree_edges) {
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    // Iterative post-order from bag 0.
    std::vector<std::size_t> parent(nb, nb), order;
    std::vector<std::size_t> stack{0};
    parent[0] = 0;
    while (!stack.empty()) {
        auto b = stack.back();
        stack.pop_back();
        order.push_back(b);
        for (auto c : tadj[b])
            if (parent[c] == nb) {
                parent[c] = b;
                stack.push_back(c);
            }
    }

    std::vector<std::optional<detail::BagTable>> tables(nb);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t b = *it;
        const auto &bag = td.bags[b];
        std::optional<detail::BagTable> acc;
        for (auto c : tadj[b]) {
            if (c == 0 || parent[c] != b) continue;
            detail::BagTable t = std::move(*tables[c]);
            tables[c].reset();
            for (Vertex v : std::vector<Vertex>(t.verts))
                if (!std::binary_search(bag.begin(), bag.end(), v)) detail::forget(t, v);
            for (Vertex v : bag)
                if (std::find(t.verts.begin(), t.verts.end(), v) == t.verts.end()) detail::introduce(g, t, v);
            if (!acc) {
                acc = std::move(t);
            } else {
                detail::permute(t, acc->verts);
                detail::join(g, *acc, t);
            }
        }
        if (!acc) {
            acc = detail::BagTable{{}, {0.0}};
            for (Vertex v : bag) detail::introduce(g, *acc, v);
        }
        tables[b] = std::move(acc);
    }
    auto &root = *tables[0];
    double best = 0.0;
    for (double v : root.val) best = std::max(best, v);
    return best;
}

// --------------------------------------------------------------------------
// Greedy leftmost-disk approximation for unit-disk instances: take the
// remaining vertex of minimum x (ties: y, then index) and delete its closed
// neighborhood.
inline std::vector<Vertex> greedy_leftmost(const Instance &inst) {
    if (!inst.positions) throw std::invalid_argument("greedy_leftmost requires vertex positions");
    const auto &p = *inst.positions;
    std::vector<Vertex> order(inst.n());
    for (Vertex v = 0; v < inst.n(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (p[a].x != p[b].x) return p[a].x < p[b].x;
        if (p[a].y != p[b].y) return p[a].y < p[b].y;
        return a < b;
    });
    std::vector<bool> removed(inst.n(), false);
    std::vector<Vertex> out;
    for (Vertex v : order) {
        if (removed[v]) continue;
        out.push_back(v);
        removed[v] = true;
        for (Vertex u : inst.graph.neighbors(v)) removed[u] = true;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace udmis
