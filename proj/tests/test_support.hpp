#ifndef TRIMDIST_TEST_SUPPORT_HPP
#define TRIMDIST_TEST_SUPPORT_HPP

// Shared test plumbing: a deterministic RNG, random grid-function
// generators, and the independent oracles the suites check against. The
// oracles deliberately avoid the scan/envelope machinery of the library:
// plain quadratic enumeration over candidate points, bisection with interval
// feasibility, and value-level dynamic programming.

#include "trimdist/grid_function.hpp"
#include "trimdist/normal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <utility>
#include <vector>

namespace test_support {

using trimdist::GridFunction;
using trimdist::Interp;

// Absolute-tolerance comparator for CHECK(x == AbsApprox(y, tol)).
struct AbsApprox {
    double value;
    double tol;
    AbsApprox(double v, double t) : value(v), tol(t) {}
};
inline bool operator==(double lhs, const AbsApprox& rhs) {
    return std::fabs(lhs - rhs.value) <= rhs.tol;
}
inline bool operator==(const AbsApprox& lhs, double rhs) { return rhs == lhs; }
inline std::ostream& operator<<(std::ostream& os, const AbsApprox& a) {
    return os << "AbsApprox(" << a.value << " +/- " << a.tol << ")";
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0,1); bit-level construction keeps runs identical across
    // standard library implementations.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    double normal() { return trimdist::normal_quantile(uniform(0.0 + 1e-12, 1.0)); }
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform() * (hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

// m strictly increasing nodes with endpoints 0 and 1.
inline std::vector<double> random_nodes(Rng& rng, std::size_t m) {
    std::vector<double> t(m);
    t.front() = 0.0;
    t.back() = 1.0;
    for (std::size_t i = 1; i + 1 < m; ++i) t[i] = rng.uniform(1e-6, 1.0 - 1e-6);
    std::sort(t.begin(), t.end());
    for (std::size_t i = 1; i < m; ++i)
        if (t[i] <= t[i - 1]) t[i] = std::nextafter(t[i - 1], 2.0);
    t.back() = 1.0;
    return t;
}

// Nondecreasing values in [0,1] (random normalized increments).
inline GridFunction random_nondecreasing(Rng& rng, std::size_t m, Interp interp) {
    std::vector<double> t = random_nodes(rng, m);
    std::vector<double> v(m);
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc += rng.uniform();
        v[i] = acc;
    }
    const double lo = v.front() * (rng.uniform() < 0.3 ? 0.0 : 1.0);
    const double span = v.back() - lo;
    const double target_lo = rng.uniform(0.0, 0.3);
    const double target_hi = rng.uniform(0.7, 1.0);
    for (auto& x : v) x = target_lo + (x - lo) / span * (target_hi - target_lo);
    for (auto& x : v) x = std::clamp(x, 0.0, 1.0);
    for (std::size_t i = 1; i < m; ++i) v[i] = std::max(v[i], v[i - 1]);
    return GridFunction(std::move(t), std::move(v), interp);
}

// General (non-monotone) values in [lo,hi].
inline GridFunction random_general(Rng& rng, std::size_t m, Interp interp, double lo,
                                   double hi) {
    std::vector<double> t = random_nodes(rng, m);
    std::vector<double> v(m);
    double x = rng.uniform(lo, hi);
    for (std::size_t i = 0; i < m; ++i) {
        x += rng.uniform(-1.0, 1.0) * 0.3 * (hi - lo);
        x = std::clamp(x, lo, hi);
        v[i] = x;
    }
    return GridFunction(std::move(t), std::move(v), interp);
}

// Candidate list of a grid function: every node with its value and its right
// limit (the left limit equals the value for both interpolations).
struct Candidate {
    double t;
    double v;
};

inline std::vector<Candidate> candidates(const GridFunction& f) {
    std::vector<Candidate> c;
    const auto& t = f.nodes();
    c.reserve(2 * t.size());
    for (double x : t) {
        c.push_back({x, f(x)});
        const double r = f.right_limit(x);
        if (r != f(x)) c.push_back({x, r});
    }
    return c;
}

// ---- quadratic brute forces over candidates ----

inline double brute_lip_lower_at(const GridFunction& f, double lip, double x) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates(f))
        best = std::min(best, c.v + lip * std::fabs(x - c.t));
    return best;
}

inline double brute_lip_upper_at(const GridFunction& f, double lip, double x) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : candidates(f))
        best = std::max(best, c.v - lip * std::fabs(x - c.t));
    return best;
}

inline double brute_gamma1_at(const GridFunction& f, double lip, double x) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates(f))
        if (c.t <= x) best = std::min(best, c.v - lip * c.t);
    return best;
}

inline double brute_gamma2_at(const GridFunction& f, double lip, double x) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : candidates(f))
        if (c.t >= x) best = std::max(best, c.v - lip * c.t);
    return best;
}

inline double brute_suffix_sup_at(const GridFunction& g, double x) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : candidates(g))
        if (c.t >= x) best = std::max(best, c.v);
    return best;
}

inline double brute_prefix_inf_at(const GridFunction& g, double x) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : candidates(g))
        if (c.t <= x) best = std::min(best, c.v);
    return best;
}

// sup over candidate pairs y <= x of f(x) - f(y) - L (x - y).
inline double brute_pair_sup(const GridFunction& f, double lip) {
    const auto cs = candidates(f);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < cs.size(); ++a)
        for (std::size_t b = a; b < cs.size(); ++b) {
            if (cs[b].t < cs[a].t) continue;
            best = std::max(best, cs[b].v - cs[a].v - lip * (cs[b].t - cs[a].t));
        }
    return best;
}

// ---- classical Kolmogorov-Smirnov statistics, coded independently ----

inline double ks_one_sample(std::vector<double> sample,
                            const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double F = cdf(sample[i]);
        d = std::max(d, std::fabs(F - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - F));
    }
    return d;
}

inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / static_cast<double>(a.size()) -
                                  static_cast<double>(j) / static_cast<double>(b.size())));
    }
    return d;
}

// ---- bisection + greedy feasibility oracle for the pinned Lipschitz
//      problem on a continuous nondecreasing f (independent of the
//      envelope construction) ----

inline double boxlip_oracle_linear(const GridFunction& f, double lip) {
    const auto& t = f.nodes();
    const auto& v = f.values();
    const std::size_t m = t.size();
    auto feasible = [&](double eps) {
        if (v[0] - eps > 0.0) return false;
        double h = 0.0;
        for (std::size_t i = 1; i < m; ++i) {
            h = std::min({h + lip * (t[i] - t[i - 1]), v[i] + eps, 1.0});
            if (h < v[i] - eps) return false;
        }
        return h >= 1.0;
    };
    double lo = 0.0, hi = 1.0;
    if (feasible(lo)) return 0.0;
    for (int k = 0; k < 64; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// ---- bisection + pairwise interval feasibility for the box-constrained
//      monotone problem on continuous g ----

inline double monotone_box_oracle_linear(const GridFunction& g, double box_a,
                                         double box_b) {
    // Feasibility of eps: exists nonincreasing h with values in [A,B] and
    // |h-g| <= eps  <=>  lo(y) <= hi(x) for all x <= y, where
    // lo = max(A, g-eps), hi = min(B, g+eps). Piecewise-linear pieces are
    // compared on a grid refined with the eps-level crossings, so the
    // pairwise check over rows is exact.
    const auto& tn = g.nodes();
    const auto& vn = g.values();
    auto feasible = [&](double eps) {
        std::vector<double> ts(tn.begin(), tn.end());
        for (std::size_t i = 0; i + 1 < tn.size(); ++i) {
            for (double level : {box_a - eps, box_a + eps, box_b - eps, box_b + eps}) {
                if (!std::isfinite(level)) continue;
                const double a = vn[i], b = vn[i + 1];
                if ((a < level && b > level) || (a > level && b < level)) {
                    const double tau =
                        tn[i] + (tn[i + 1] - tn[i]) * ((level - a) / (b - a));
                    if (tau > tn[i] && tau < tn[i + 1]) ts.push_back(tau);
                }
            }
        }
        std::sort(ts.begin(), ts.end());
        std::vector<double> lo(ts.size()), hi(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double gv = g(ts[i]);
            lo[i] = std::max(box_a, gv - eps);
            hi[i] = std::min(box_b, gv + eps);
            if (lo[i] > hi[i]) return false;
        }
        double running_hi = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            running_hi = std::min(running_hi, hi[i]);
            if (lo[i] > running_hi) return false;
        }
        return true;
    };
    double lo_eps = 0.0;
    double hi_eps = 1.0;
    while (!feasible(hi_eps)) hi_eps *= 2.0;
    if (feasible(lo_eps)) return 0.0;
    for (int k = 0; k < 64; ++k) {
        const double mid = 0.5 * (lo_eps + hi_eps);
        if (feasible(mid))
            hi_eps = mid;
        else
            lo_eps = mid;
    }
    return 0.5 * (lo_eps + hi_eps);
}

// ---- value-level dynamic program over nonincreasing step functions.
// Switch points are restricted to a refined time grid, so the value is an
// upper bound of the continuum optimum and approaches it as both grids
// refine. Used as a sandwich bound, not an equality oracle. ----

inline double monotone_box_dp(const GridFunction& g, double box_a, double box_b,
                              std::size_t time_cells, std::size_t levels) {
    // Optimal step values live in the box intersected with g's range.
    const double vlo = std::clamp(g.min_value(), box_a, box_b);
    const double vhi = std::clamp(g.max_value(), box_a, box_b);
    std::vector<double> level(levels);
    for (std::size_t k = 0; k < levels; ++k)
        level[k] = vlo + (vhi - vlo) * static_cast<double>(k) /
                             static_cast<double>(levels - 1);

    // Exact extremes of g over each uniform time cell (nodes inside count).
    const auto& gn = g.nodes();
    std::vector<double> cell_min(time_cells), cell_max(time_cells);
    for (std::size_t c = 0; c < time_cells; ++c) {
        const double t0 = static_cast<double>(c) / static_cast<double>(time_cells);
        const double t1 = static_cast<double>(c + 1) / static_cast<double>(time_cells);
        double mn = std::min(g(t0), g(t1));
        double mx = std::max(g(t0), g(t1));
        const auto lo_it = std::lower_bound(gn.begin(), gn.end(), t0);
        const auto hi_it = std::upper_bound(gn.begin(), gn.end(), t1);
        for (auto it = lo_it; it != hi_it; ++it) {
            const double v = g.values()[static_cast<std::size_t>(it - gn.begin())];
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        cell_min[c] = mn;
        cell_max[c] = mx;
    }

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(levels, 0.0), next(levels, 0.0);
    for (std::size_t c = 0; c < time_cells; ++c) {
        // h nonincreasing: the level index may only go down along cells;
        // dp[k] is the best worst-case deviation ending cell c at level k.
        double best_above = inf;
        for (std::size_t k = levels; k-- > 0;) {
            best_above = std::min(best_above, dp[k]);
            const double cell_cost =
                std::max(std::fabs(cell_max[c] - level[k]),
                         std::fabs(cell_min[c] - level[k]));
            next[k] = std::max(best_above, cell_cost);
        }
        std::swap(dp, next);
    }
    return *std::min_element(dp.begin(), dp.end());
}

} // namespace test_support

#endif
