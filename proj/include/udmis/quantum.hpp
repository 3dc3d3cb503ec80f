#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "instance_gen.hpp"
#include "random.hpp"

namespace udmis {

// Piecewise-linear control schedule. Times in microseconds, Omega and delta
// in rad/us (angular frequencies).
struct Schedule {
    double duration_us = 4.0;
    std::vector<std::pair<double, double>> omega;
    std::vector<std::pair<double, double>> delta;

    double omega_at(double t) const { return interpolate(omega, t); }
    double delta_at(double t) const { return interpolate(delta, t); }

    // Same shape stretched to factor * duration.
    Schedule scaled(double factor) const {
        Schedule s = *this;
        s.duration_us *= factor;
        for (auto &p : s.omega) p.first *= factor;
        for (auto &p : s.delta) p.first *= factor;
        return s;
    }

    static double interpolate(const std::vector<std::pair<double, double>> &pts, double t) {
        if (pts.empty()) return 0.0;
        if (t <= pts.front().first) return pts.front().second;
        if (t >= pts.back().first) return pts.back().second;
        auto it = std::upper_bound(pts.begin(), pts.end(), t,
                                   [](double x, const std::pair<double, double> &p) { return x < p.first; });
        const auto &[t1, v1] = *it;
        const auto &[t0, v0] = *(it - 1);
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    }
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Artifact defaults (not taken from any published schedule): Omega ramps
// 0 -> 2*pi*2 MHz over the first 20% and back to 0 over the last 20%;
// delta sweeps linearly from -2*pi*4 MHz to +2*pi*4 MHz.
struct ScheduleDefaults {
    double duration_us = 4.0;
    double omega_max = kTwoPi * 2.0;
    double delta_min = -kTwoPi * 4.0;
    double delta_max = kTwoPi * 4.0;
};

inline Schedule default_schedule(const ScheduleDefaults &d = {}) {
    Schedule s;
    s.duration_us = d.duration_us;
    const double t = d.duration_us;
    s.omega = {{0.0, 0.0}, {0.2 * t, d.omega_max}, {0.8 * t, d.omega_max}, {t, 0.0}};
    s.delta = {{0.0, d.delta_min}, {t, d.delta_max}};
    return s;
}

// Time grid only: both control lists run strictly increasing from 0 to the
// duration with finite values.
inline void validate_schedule_times(const Schedule &s) {
    if (!(s.duration_us > 0.0)) throw std::invalid_argument("schedule duration must be positive");
    auto check = [&](const std::vector<std::pair<double, double>> &pts, const char *name) {
        if (pts.size() < 2) throw std::invalid_argument(std::string(name) + " needs at least two points");
        if (std::abs(pts.front().first) > 1e-12)
            throw std::invalid_argument(std::string(name) + " must start at t = 0");
        if (std::abs(pts.back().first - s.duration_us) > 1e-9 * std::max(1.0, s.duration_us))
            throw std::invalid_argument(std::string(name) + " must end at the schedule duration");
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (!(pts[i].first > pts[i - 1].first))
                throw std::invalid_argument(std::string(name) + " times must be strictly increasing");
        for (auto &p : pts)
            if (!std::isfinite(p.second)) throw std::invalid_argument(std::string(name) + " has a non-finite value");
    };
    check(s.omega, "omega");
    check(s.delta, "delta");
}

// Time grid plus the annealing shape: Omega vanishes at both ends and delta
// sweeps from negative to positive.
inline void validate_schedule(const Schedule &s) {
    validate_schedule_times(s);
    if (s.omega.front().second != 0.0 || s.omega.back().second != 0.0)
        throw std::invalid_argument("omega must vanish at both ends of the schedule");
    if (!(s.delta.front().second < 0.0 && s.delta.back().second > 0.0))
        throw std::invalid_argument("delta must start negative and end positive");
}

// C6 / h for the Rydberg state, in MHz * um^6.
inline constexpr double kC6OverH = 138.0e3;

// Interaction U(d)/hbar in rad/us for a distance in um.
inline double rydberg_interaction(double d_um) { return kTwoPi * kC6OverH / std::pow(d_um, 6); }

inline constexpr std::size_t kMaxStateVectorQubits = 22;

struct HamiltonianSpec {
    std::size_t n = 0;
    std::vector<double> interactions;  // n x n, row-major, symmetric, zero diagonal; rad/us
    std::vector<double> site_weights;  // epsilon_i in [0, 1]
    Schedule schedule;

    double u(std::size_t i, std::size_t j) const { return interactions[i * n + j]; }
};

// Length of one position unit in micrometres. Native instances carry
// positions in um; other generators use abstract units, which are scaled
// so the unit-disk radius matches the native radius at 5 um spacing.
inline double micrometres_per_unit(const Instance &inst) {
    if (inst.meta.spacing_um) return 1.0;
    return kNativeRadiusFactor * kDefaultSpacingUm / inst.disk_radius;
}

// Full pairwise 1/r^6 interactions (all pairs, not only graph edges) and
// site weights normalized by the largest weight.
inline HamiltonianSpec build_hamiltonian(const Instance &inst, const Schedule &schedule) {
    if (!inst.positions) throw std::invalid_argument("build_hamiltonian requires atom positions");
    if (inst.n() > kMaxStateVectorQubits)
        throw std::invalid_argument("state-vector emulation supports at most " +
                                    std::to_string(kMaxStateVectorQubits) + " atoms; instance has " +
                                    std::to_string(inst.n()));
    validate_schedule(schedule);
    HamiltonianSpec h;
    h.n = inst.n();
    h.schedule = schedule;
    h.interactions.assign(h.n * h.n, 0.0);
    const double scale = micrometres_per_unit(inst);
    const auto &p = *inst.positions;
    for (std::size_t i = 0; i < h.n; ++i)
        for (std::size_t j = i + 1; j < h.n; ++j) {
            double d = distance(p[i], p[j]) * scale;
            if (!(d > 0.0)) throw std::invalid_argument("atoms " + std::to_string(i) + " and " + std::to_string(j) +
                                                        " coincide");
            h.interactions[i * h.n + j] = h.interactions[j * h.n + i] = rydberg_interaction(d);
        }
    const double wmax = inst.graph.max_weight();
    h.site_weights.resize(h.n);
    for (std::size_t i = 0; i < h.n; ++i) h.site_weights[i] = wmax > 0.0 ? inst.graph.weight(i) / wmax : 0.0;
    return h;
}

using StateVector = std::vector<std::complex<double>>;

struct EvolveResult {
    StateVector state;
    std::size_t steps = 0;
    double max_norm_drift = 0.0;
};

inline constexpr double kDefaultDtUs = 0.01;
inline constexpr double kNormTolerance = 1e-8;

namespace detail {

// H = (omega/2) sum_i X_i + diag, diag[z] = -delta * eps(z) + u_scale * U(z).
class RydbergOperator {
  public:
    explicit RydbergOperator(const HamiltonianSpec &h) : n_(h.n), dim_(std::size_t{1} << h.n) {
        eps_.assign(dim_, 0.0);
        pair_.assign(dim_, 0.0);
        for (std::size_t z = 1; z < dim_; ++z) {
            const auto b = static_cast<std::size_t>(std::countr_zero(z));
            const std::size_t rest = z & (z - 1);
            eps_[z] = eps_[rest] + h.site_weights[b];
            double add = 0.0;
            for (std::size_t j = 0; j < n_; ++j)
                if (rest >> j & 1U) add += h.u(b, j);
            pair_[z] = pair_[rest] + add;
        }
        diag_.resize(dim_);
    }

    std::size_t dim() const { return dim_; }

    void set(double omega, double delta, double u_scale) {
        omega_ = omega;
        lo_ = std::numeric_limits<double>::infinity();
        hi_ = -lo_;
        for (std::size_t z = 0; z < dim_; ++z) {
            diag_[z] = -delta * eps_[z] + u_scale * pair_[z];
            lo_ = std::min(lo_, diag_[z]);
            hi_ = std::max(hi_, diag_[z]);
        }
    }

    // Spectral enclosure [lo - |omega| n / 2, hi + |omega| n / 2].
    double spectrum_lo() const { return lo_ - std::abs(omega_) * static_cast<double>(n_) / 2.0; }
    double spectrum_hi() const { return hi_ + std::abs(omega_) * static_cast<double>(n_) / 2.0; }

    // out = a * (H psi) + b * psi
    void apply(const StateVector &psi, StateVector &out, double a, double b) const {
        const double half = omega_ / 2.0;
        for (std::size_t z = 0; z < dim_; ++z) {
            std::complex<double> x = 0.0;
            for (std::size_t q = 0; q < n_; ++q) x += psi[z ^ (std::size_t{1} << q)];
            out[z] = a * (half * x + diag_[z] * psi[z]) + b * psi[z];
        }
    }

  private:
    std::size_t n_;
    std::size_t dim_;
    std::vector<double> eps_, pair_, diag_;
    double omega_ = 0.0, lo_ = 0.0, hi_ = 0.0;
};

// psi <- exp(-i tau H) psi by Chebyshev expansion on the spectral
// enclosure; coefficients are Bessel functions J_k(tau * r).
inline void expm_apply(const RydbergOperator &op, double tau, StateVector &psi, StateVector &t0, StateVector &t1,
                       StateVector &t2) {
    const double lo = op.spectrum_lo(), hi = op.spectrum_hi();
    const double c = 0.5 * (hi + lo);
    const double r = std::max(0.5 * (hi - lo), 1e-12);
    const double x = tau * r;
    const std::size_t dim = op.dim();
    const std::complex<double> minus_i(0.0, -1.0);

    // Normalized operator Hn = (H - c) / r, spectrum in [-1, 1].
    t0 = psi;
    op.apply(t0, t1, 1.0 / r, -c / r);
    StateVector acc(dim);
    const double j0 = std::cyl_bessel_j(0.0, x);
    std::complex<double> coef = 2.0 * minus_i * std::cyl_bessel_j(1.0, x);
    for (std::size_t z = 0; z < dim; ++z) acc[z] = j0 * t0[z] + coef * t1[z];

    std::complex<double> phase = minus_i;
    const std::size_t kmax = static_cast<std::size_t>(x) + 60;
    for (std::size_t k = 2; k <= kmax; ++k) {
        // T_k = 2 Hn T_{k-1} - T_{k-2}
        op.apply(t1, t2, 2.0 / r, -2.0 * c / r);
        for (std::size_t z = 0; z < dim; ++z) t2[z] -= t0[z];
        phase *= minus_i;
        const double jk = std::cyl_bessel_j(static_cast<double>(k), x);
        coef = 2.0 * phase * jk;
        for (std::size_t z = 0; z < dim; ++z) acc[z] += coef * t2[z];
        std::swap(t0, t1);
        std::swap(t1, t2);
        if (static_cast<double>(k) > x && std::abs(jk) < 1e-17) break;
    }
    const std::complex<double> global = std::exp(minus_i * tau * c);
    for (std::size_t z = 0; z < dim; ++z) psi[z] = global * acc[z];
}

inline double norm(const StateVector &psi) {
    double s = 0.0;
    for (auto a : psi) s += std::norm(a);
    return std::sqrt(s);
}

}  // namespace detail

// Integrates i d/dt psi = H(t) psi from |0...0> with a fixed-step
// fourth-order commutator-free Magnus scheme: each step applies two
// exponentials of linear combinations of H at the two Gauss points.
inline EvolveResult evolve(const HamiltonianSpec &h, double dt = kDefaultDtUs) {
    if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
    if (h.n > kMaxStateVectorQubits) throw std::invalid_argument("too many atoms for state-vector emulation");
    validate_schedule_times(h.schedule);

    detail::RydbergOperator op(h);
    EvolveResult r;
    r.state.assign(op.dim(), 0.0);
    r.state[0] = 1.0;
    const double total = h.schedule.duration_us;
    r.steps = static_cast<std::size_t>(std::ceil(total / dt - 1e-9));
    const double step = total / static_cast<double>(r.steps);

    const double g1 = 0.5 - std::sqrt(3.0) / 6.0, g2 = 0.5 + std::sqrt(3.0) / 6.0;
    const double a1 = (3.0 - 2.0 * std::sqrt(3.0)) / 12.0, a2 = (3.0 + 2.0 * std::sqrt(3.0)) / 12.0;
    StateVector t0, t1(op.dim()), t2(op.dim());
    for (std::size_t s = 0; s < r.steps; ++s) {
        const double t = step * static_cast<double>(s);
        const double om1 = h.schedule.omega_at(t + g1 * step), om2 = h.schedule.omega_at(t + g2 * step);
        const double de1 = h.schedule.delta_at(t + g1 * step), de2 = h.schedule.delta_at(t + g2 * step);
        // exp(-i dt (a1 H1 + a2 H2)) exp(-i dt (a2 H1 + a1 H2)); the pair
        // term has total coefficient a1 + a2 = 1/2 in each factor.
        op.set(a2 * om1 + a1 * om2, a2 * de1 + a1 * de2, 0.5);
        if (op.spectrum_hi() - op.spectrum_lo() > 0.0 || op.spectrum_lo() != 0.0)
            detail::expm_apply(op, step, r.state, t0, t1, t2);
        op.set(a1 * om1 + a2 * om2, a1 * de1 + a2 * de2, 0.5);
        if (op.spectrum_hi() - op.spectrum_lo() > 0.0 || op.spectrum_lo() != 0.0)
            detail::expm_apply(op, step, r.state, t0, t1, t2);
        r.max_norm_drift = std::max(r.max_norm_drift, std::abs(detail::norm(r.state) - 1.0));
    }
    if (r.max_norm_drift > kNormTolerance)
        throw std::runtime_error("state norm drifted by " + std::to_string(r.max_norm_drift) +
                                 "; use a smaller time step");
    return r;
}

inline std::vector<double> probabilities(const StateVector &psi) {
    std::vector<double> p(psi.size());
    for (std::size_t z = 0; z < psi.size(); ++z) p[z] = std::norm(psi[z]);
    return p;
}

// --------------------------------------------------------------------------
// Bitstrings: character i is qubit/vertex i; basis index bit i is qubit i.

inline std::string to_bitstring(std::size_t z, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if (z >> i & 1U) s[i] = '1';
    return s;
}

inline std::size_t from_bitstring(const std::string &s) {
    std::size_t z = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            z |= std::size_t{1} << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bitstring has a character other than 0/1: '" + s + "'");
    }
    return z;
}

inline Assignment to_assignment(const std::string &s) {
    Assignment x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("invalid bitstring '" + s + "'");
        x[i] = s[i] == '1';
    }
    return x;
}

inline std::string to_bitstring(const Assignment &x) {
    std::string s(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) s[i] = '1';
    return s;
}

// Measured bitstrings with multiplicities.
struct SampleSet {
    std::uint64_t total_shots = 0;
    std::map<std::string, std::uint64_t> counts;
};

// Bitstring -> probability (possibly a mitigated distribution).
using Distribution = std::map<std::string, double>;

inline SampleSet sample(const StateVector &state, std::size_t n_shots, std::uint64_t seed) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < state.size()) ++n;
    std::vector<double> cdf(state.size());
    double acc = 0.0;
    for (std::size_t z = 0; z < state.size(); ++z) cdf[z] = acc += std::norm(state[z]);
    Rng rng(seed);
    std::vector<std::uint64_t> hits(state.size(), 0);
    for (std::size_t s = 0; s < n_shots; ++s) {
        double u = rng.uniform() * acc;
        auto z = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        if (z >= state.size()) z = state.size() - 1;
        // Zero-probability states cannot be drawn (upper_bound skips flat runs).
        ++hits[z];
    }
    SampleSet out;
    out.total_shots = n_shots;
    for (std::size_t z = 0; z < state.size(); ++z)
        if (hits[z]) out.counts[to_bitstring(z, n)] = hits[z];
    return out;
}

// Draws shots from a probability vector over basis indices (used after the
// readout channel has been applied to the exact distribution).
inline SampleSet sample_distribution(const std::vector<double> &dist, std::size_t n, std::size_t n_shots,
                                     std::uint64_t seed) {
    StateVector amp(dist.size());
    for (std::size_t z = 0; z < dist.size(); ++z) amp[z] = std::sqrt(std::max(0.0, dist[z]));
    (void)n;
    return sample(amp, n_shots, seed);
}

// --------------------------------------------------------------------------
// Readout error channel and mitigation.

struct NoiseModel {
    double p = 0.0;  // P(read 1 | atom in 0), false positive
    double q = 0.0;  // P(read 0 | atom in 1), false negative
};

inline void validate_noise(const NoiseModel &nm) {
    if (!(nm.p >= 0.0 && nm.p < 1.0 && nm.q >= 0.0 && nm.q < 1.0))
        throw std::invalid_argument("readout error rates must lie in [0, 1)");
}

namespace detail {

// Applies [[m00, m01], [m10, m11]] to every qubit of a distribution over
// basis indices.
inline std::vector<double> apply_per_qubit(std::vector<double> dist, double m00, double m01, double m10, double m11) {
    const std::size_t dim = dist.size();
    for (std::size_t bit = 1; bit < dim; bit <<= 1)
        for (std::size_t z = 0; z < dim; ++z)
            if (!(z & bit)) {
                const double a = dist[z], b = dist[z | bit];
                dist[z] = m00 * a + m01 * b;
                dist[z | bit] = m10 * a + m11 * b;
            }
    return dist;
}

inline void check_dim(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1))) throw std::invalid_argument("distribution length must be a power of two");
    if (dim > (std::size_t{1} << 20)) throw std::invalid_argument("readout mitigation supports at most 20 qubits");
}

}  // namespace detail

// Independent classical channel per qubit:
//   P'(0) = (1-p) P(0) + q P(1),  P'(1) = p P(0) + (1-q) P(1).
inline std::vector<double> apply_readout_noise(const std::vector<double> &dist, const NoiseModel &nm) {
    validate_noise(nm);
    detail::check_dim(dist.size());
    return detail::apply_per_qubit(dist, 1.0 - nm.p, nm.q, nm.p, 1.0 - nm.q);
}

struct MitigatedDistribution {
    std::vector<double> quasi;    // may contain negative entries
    std::vector<double> clipped;  // negatives set to zero, renormalized
};

// Applies the inverse channel 1/(1-p-q) [[1-q, -q], [-p, 1-p]] per qubit.
inline MitigatedDistribution mitigate_readout(const std::vector<double> &dist, const NoiseModel &nm) {
    validate_noise(nm);
    const double det = 1.0 - nm.p - nm.q;
    if (!(det > 0.0)) throw std::invalid_argument("readout channel is singular (p + q >= 1)");
    detail::check_dim(dist.size());
    MitigatedDistribution out;
    out.quasi = detail::apply_per_qubit(dist, (1.0 - nm.q) / det, -nm.q / det, -nm.p / det, (1.0 - nm.p) / det);
    out.clipped = out.quasi;
    double s = 0.0;
    for (auto &x : out.clipped) {
        x = std::max(0.0, x);
        s += x;
    }
    if (!(s > 0.0)) throw std::runtime_error("mitigated distribution has no positive mass");
    for (auto &x : out.clipped) x /= s;
    return out;
}

inline std::vector<double> empirical_distribution(const SampleSet &s, std::size_t n) {
    if (n > 20) throw std::invalid_argument("dense distributions support at most 20 qubits");
    std::vector<double> d(std::size_t{1} << n, 0.0);
    if (s.total_shots == 0) return d;
    for (const auto &[bits, c] : s.counts) {
        if (bits.size() != n) throw std::invalid_argument("bitstring length does not match qubit count");
        d[from_bitstring(bits)] += static_cast<double>(c) / static_cast<double>(s.total_shots);
    }
    return d;
}

inline Distribution to_distribution(const std::vector<double> &dense, std::size_t n) {
    Distribution d;
    for (std::size_t z = 0; z < dense.size(); ++z)
        if (dense[z] != 0.0) d[to_bitstring(z, n)] = dense[z];
    return d;
}

// --------------------------------------------------------------------------
// Bitstring repair.

// Makes x independent, then maximal. While an edge is violated, removes the
// selected vertex with the most violated incident edges (ties: lowest
// weight, then the highest index, so lower indices are kept). Then adds
// free vertices by weight (descending), index (ascending).
inline Assignment repair_assignment(const Graph &g, Assignment x) {
    if (x.size() != g.n()) throw std::invalid_argument("bitstring length does not match graph");
    const std::size_t n = g.n();
    std::vector<std::size_t> viol(n, 0);
    for (auto [a, b] : g.edges())
        if (x[a] && x[b]) {
            ++viol[a];
            ++viol[b];
        }
    while (true) {
        Vertex pick = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!x[v] || viol[v] == 0) continue;
            if (pick == n || viol[v] > viol[pick] || (viol[v] == viol[pick] && g.weight(v) <= g.weight(pick)))
                pick = v;
        }
        if (pick == n) break;
        x[pick] = 0;
        for (Vertex u : g.neighbors(pick))
            if (x[u]) --viol[u];
        viol[pick] = 0;
    }
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.weight(a) > g.weight(b); });
    for (Vertex v : order) {
        if (x[v]) continue;
        bool free = true;
        for (Vertex u : g.neighbors(v))
            if (x[u]) {
                free = false;
                break;
            }
        if (free) x[v] = 1;
    }
    return x;
}

// Repairs every bitstring of a sample map, merging multiplicities of
// strings that repair to the same result. Works for counts and for
// probabilities alike.
template <class Value>
std::map<std::string, Value> repair_bitstrings(const std::map<std::string, Value> &in, const Graph &g) {
    std::map<std::string, Value> out;
    for (const auto &[bits, v] : in) out[to_bitstring(repair_assignment(g, to_assignment(bits)))] += v;
    return out;
}

inline SampleSet repair_bitstrings(const SampleSet &s, const Graph &g) {
    SampleSet out;
    out.total_shots = s.total_shots;
    out.counts = repair_bitstrings(s.counts, g);
    return out;
}

}  // namespace udmis
