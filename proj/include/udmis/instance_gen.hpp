#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "random.hpp"

namespace udmis {

enum class LayoutKind { triangular, kings };

inline std::string to_string(LayoutKind k) { return k == LayoutKind::triangular ? "triangular" : "kings"; }

inline LayoutKind parse_layout_kind(const std::string &s) {
    if (s == "triangular") return LayoutKind::triangular;
    if (s == "kings") return LayoutKind::kings;
    throw std::invalid_argument("unknown layout kind '" + s + "'");
}

struct Layout {
    std::vector<Point> trap_positions;
    double spacing = 5.0;
    LayoutKind kind = LayoutKind::triangular;

    std::size_t size() const { return trap_positions.size(); }
    std::string id() const {
        std::ostringstream os;
        os << to_string(kind) << '-' << size() << '-' << spacing << "um";
        return os.str();
    }
};

inline constexpr std::size_t kDefaultTrapCount = 200;
inline constexpr double kDefaultSpacingUm = 5.0;
// Unit-disk radius relative to lattice spacing for native instances: above
// the nearest-neighbor distance (1) and below the next-nearest (sqrt 3).
inline constexpr double kNativeRadiusFactor = 1.3;

namespace detail {

// Orders lattice sites by (distance, polar angle, index) about `center`.
// Distances and angles are quantized so that symmetric sites compare equal.
inline std::vector<std::size_t> order_about(const std::vector<Point> &pts, Point center) {
    struct Key {
        long long dist;
        long long angle;
        std::size_t index;
        auto operator<=>(const Key &) const = default;
    };
    std::vector<Key> keys;
    keys.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double dx = pts[i].x - center.x, dy = pts[i].y - center.y;
        double a = std::atan2(dy, dx);
        if (a < 0) a += 2 * std::numbers::pi;
        long long qa = std::llround(a * 1e9);
        if (qa >= std::llround(2 * std::numbers::pi * 1e9)) qa = 0;
        keys.push_back({std::llround(std::hypot(dx, dy) * 1e6), qa, i});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<std::size_t> order;
    order.reserve(keys.size());
    for (auto &k : keys) order.push_back(k.index);
    return order;
}

template <class SiteFn>
Layout lattice_layout(std::size_t n_traps, double spacing, LayoutKind kind, SiteFn site) {
    if (n_traps < 1) throw std::invalid_argument("layout needs at least one trap");
    if (!(spacing > 0.0)) throw std::invalid_argument("trap spacing must be positive");
    // A ball of radius R holds ~ pi R^2 / cell_area sites; over-provision.
    long long reach = static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(n_traps)))) + 2;
    std::vector<Point> pts;
    for (long long j = -reach; j <= reach; ++j)
        for (long long i = -reach; i <= reach; ++i) pts.push_back(site(i, j));
    auto order = order_about(pts, Point{0.0, 0.0});
    Layout layout;
    layout.spacing = spacing;
    layout.kind = kind;
    layout.trap_positions.reserve(n_traps);
    for (std::size_t k = 0; k < n_traps; ++k) layout.trap_positions.push_back(pts[order[k]]);
    return layout;
}

}  // namespace detail

// Regular triangular lattice around the origin, traps ordered by distance
// to the origin (ties by polar angle, then generation index).
inline Layout triangular_layout(std::size_t n_traps = kDefaultTrapCount, double spacing = kDefaultSpacingUm) {
    const double h = spacing * std::sqrt(3.0) / 2.0;
    return detail::lattice_layout(n_traps, spacing, LayoutKind::triangular, [&](long long i, long long j) {
        return Point{spacing * (static_cast<double>(i) + 0.5 * static_cast<double>(j)), h * static_cast<double>(j)};
    });
}

inline Layout kings_layout(std::size_t n_traps, double spacing = kDefaultSpacingUm) {
    return detail::lattice_layout(n_traps, spacing, LayoutKind::kings, [&](long long i, long long j) {
        return Point{spacing * static_cast<double>(i), spacing * static_cast<double>(j)};
    });
}

inline Layout make_layout(LayoutKind kind, std::size_t n_traps, double spacing) {
    return kind == LayoutKind::triangular ? triangular_layout(n_traps, spacing) : kings_layout(n_traps, spacing);
}

// Number of central candidate traps for N atoms at fill density rho,
// rounded half-up.
inline std::size_t candidate_trap_count(std::size_t n_atoms, double rho) {
    if (!(rho > 0.0) || rho > 1.0) throw std::invalid_argument("fill density rho must lie in (0, 1]");
    // Guard against N/rho landing a hair below an integer (e.g. 30 / (30/61)).
    double l = static_cast<double>(n_atoms) / rho;
    return static_cast<std::size_t>(std::floor(l + 0.5 + 1e-9));
}

inline std::string format_param(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Samples N atoms uniformly without replacement from the L = round(N/rho)
// traps closest to the layout centroid.
inline Instance sample_native_instance(const Layout &layout, std::size_t n_atoms, double rho, double radius,
                                       std::uint64_t seed) {
    const std::size_t l = candidate_trap_count(n_atoms, rho);
    if (l > layout.size())
        throw std::invalid_argument("native instance with N=" + std::to_string(n_atoms) + ", rho=" + format_param(rho) +
                                    " needs " + std::to_string(l) + " traps; layout has " +
                                    std::to_string(layout.size()));
    if (l < n_atoms) throw std::invalid_argument("candidate trap count below atom count");

    Point c{0.0, 0.0};
    for (auto p : layout.trap_positions) {
        c.x += p.x;
        c.y += p.y;
    }
    if (layout.size()) {
        c.x /= static_cast<double>(layout.size());
        c.y /= static_cast<double>(layout.size());
    }
    auto order = detail::order_about(layout.trap_positions, c);

    Rng rng(seed);
    auto picks = rng.sample_without_replacement(l, n_atoms);
    std::sort(picks.begin(), picks.end());
    std::vector<Point> pts;
    pts.reserve(n_atoms);
    for (auto k : picks) pts.push_back(layout.trap_positions[order[k]]);

    Instance inst = unit_disk_from_points(std::move(pts), radius);
    inst.meta.generator = "native";
    inst.meta.rho = rho;
    inst.meta.seed = seed;
    inst.meta.layout = layout.id();
    inst.meta.spacing_um = layout.spacing;
    inst.meta.name = "native_N" + std::to_string(n_atoms) + "_rho" + format_param(rho) + "_s" + std::to_string(seed);
    return inst;
}

inline Instance sample_native_instance(const Layout &layout, std::size_t n_atoms, double rho, std::uint64_t seed) {
    return sample_native_instance(layout, n_atoms, rho, kNativeRadiusFactor * layout.spacing, seed);
}

inline double box_side(std::size_t n, double rho) { return std::sqrt(static_cast<double>(n) / rho); }

// n uniform points in a square of side sqrt(n/rho), unit-disk radius 1.
inline Instance random_udg_box(std::size_t n, double rho, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("box model needs n >= 1");
    if (!(rho > 0.0) || !std::isfinite(rho)) throw std::invalid_argument("box density rho must be positive");
    const double side = box_side(n, rho);
    Rng rng(seed);
    std::vector<Point> pts(n);
    for (auto &p : pts) {
        p.x = rng.uniform(0.0, side);
        p.y = rng.uniform(0.0, side);
    }
    Instance inst = unit_disk_from_points(std::move(pts), 1.0);
    inst.meta.generator = "box";
    inst.meta.rho = rho;
    inst.meta.seed = seed;
    inst.meta.name = "box_n" + std::to_string(n) + "_rho" + format_param(rho) + "_s" + std::to_string(seed);
    return inst;
}

// King's graph on a width x height grid at unit spacing. Vertex index is
// row * width + column.
inline Instance kings_lattice(std::size_t width, std::size_t height) {
    if (width < 1 || height < 1) throw std::invalid_argument("King's lattice needs width, height >= 1");
    std::vector<Point> pts;
    pts.reserve(width * height);
    for (std::size_t r = 0; r < height; ++r)
        for (std::size_t c = 0; c < width; ++c) pts.push_back({static_cast<double>(c), static_cast<double>(r)});
    Instance inst = unit_disk_from_points(std::move(pts), std::sqrt(2.0));
    inst.meta.generator = "kings";
    inst.meta.rho = 1.0;
    inst.meta.name = "kings_" + std::to_string(width) + "x" + std::to_string(height);
    return inst;
}

// Replaces round(fraction * |E|) randomly chosen edges by uniformly random
// new pairs, keeping |E| fixed. Replacement pairs avoid self-loops, current
// edges, and (when enough room exists) the removed edges themselves.
inline Graph rewire(const Graph &g, double fraction, std::uint64_t seed) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) throw std::invalid_argument("rewire fraction must lie in [0, 1]");
    const std::size_t m = g.num_edges();
    const std::size_t k = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(m) + 0.5));
    if (k == 0) return g;

    const std::size_t n = g.n();
    const std::size_t pairs = n * (n - 1) / 2;
    if (pairs - m < k && pairs - (m - k) < k)
        throw std::invalid_argument("graph too dense to rewire " + std::to_string(k) + " edges");
    // Room to avoid every removed pair as well?
    const bool avoid_removed = pairs - m >= k;

    Rng rng(seed);
    auto chosen = rng.sample_without_replacement(m, k);
    std::vector<bool> removed_flag(m, false);
    for (auto e : chosen) removed_flag[e] = true;

    std::set<Edge> present;
    std::set<Edge> removed;
    for (std::size_t e = 0; e < m; ++e) (removed_flag[e] ? removed : present).insert(g.edges()[e]);

    std::vector<Edge> added;
    added.reserve(k);
    while (added.size() < k) {
        Vertex u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (present.count(e)) continue;
        if (avoid_removed && removed.count(e)) continue;
        present.insert(e);
        added.push_back(e);
    }
    std::vector<Edge> edges(present.begin(), present.end());
    return build_graph(n, edges, g.weights());
}

}  // namespace udmis
