#include "trimdist/trimming.hpp"

#include "trimdist/envelopes.hpp"
#include "trimdist/errors.hpp"
#include "trimdist/lipschitz_box.hpp"
#include "trimdist/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace trimdist {

using detail::Pw;

namespace {

TrimResult trim_from_gamma(GridFunction gamma, const TrimParams& params,
                           std::size_t grid_size, std::size_t sample_size) {
    const double lip = params.lip;
    BoxLipResult best = best_lipschitz_box(gamma, lip);
    GridFunction h_tilde =
        Pw::from(best.approximant).affine_add(0.0, -lip).to_linear_grid();

    GridFunction g_fun =
        gamma.interp() == Interp::Linear
            ? linear_combination(gamma, 1.0, GridFunction::identity(), -lip)
            : [&] {
                  std::vector<double> t = gamma.nodes();
                  std::vector<double> v = gamma.values();
                  for (std::size_t i = 0; i < t.size(); ++i) v[i] -= lip * t[i];
                  return GridFunction(std::move(t), std::move(v), Interp::StepLeft);
              }();

    return TrimResult{best.distance,
                      std::move(h_tilde),
                      std::move(best.approximant),
                      std::move(g_fun),
                      std::move(gamma),
                      params,
                      grid_size,
                      sample_size};
}

} // namespace

TrimResult trimmed_distance(const DistributionSpec& f0, const DistributionSpec& f,
                            const TrimParams& params, std::size_t grid_size) {
    GridFunction gamma = compose_gamma(f0, f, grid_size);
    const std::size_t n = f.sample_size();
    const std::size_t effective_grid = n > 0 ? n : grid_size;
    return trim_from_gamma(std::move(gamma), params, effective_grid, n);
}

DistributionSpec mixture_cdf(const DistributionSpec& f0, const DistributionSpec& q,
                             double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw InvalidInput("mixture_cdf: alpha must lie in [0,1)");

    const double lo = std::min(f0.support_lo(), q.support_lo());
    const double hi = std::max(f0.support_hi(), q.support_hi());
    auto cdf = [f0, q, alpha](double x) {
        return (1.0 - alpha) * f0.cdf(x) + alpha * q.cdf(x);
    };

    // Supports must chain into one interval for the mixture CDF to stay
    // strictly increasing where it rises.
    const bool strict = f0.strictly_increasing() && q.strictly_increasing() &&
                        std::min(f0.support_hi(), q.support_hi()) >=
                            std::max(f0.support_lo(), q.support_lo());

    auto quantile = [cdf, lo, hi](double t) {
        double a = std::isfinite(lo) ? lo : -1.0;
        double b = std::isfinite(hi) ? hi : 1.0;
        while (cdf(a) >= t) a = a * 2.0 - 1.0;
        while (cdf(b) < t) b = b * 2.0 + 1.0;
        for (int i = 0; i < 200 && b - a > 1e-14 * (1.0 + std::fabs(a)); ++i) {
            const double m = 0.5 * (a + b);
            if (cdf(m) >= t)
                b = m;
            else
                a = m;
        }
        return b;
    };
    return DistributionSpec::analytic(cdf, quantile, strict, lo, hi, "mixture");
}

double oracle_distance(const GridFunction& gamma, const TrimParams& params) {
    if (gamma.interp() != Interp::StepLeft)
        throw InvalidInput("oracle_distance: empirical (StepLeft) gamma required");
    if (!gamma.is_nondecreasing() || gamma.min_value() < 0.0 || gamma.max_value() > 1.0)
        throw InvalidInput("oracle_distance: gamma must be nondecreasing into [0,1]");
    const auto& t = gamma.nodes();
    const auto& v = gamma.values();
    const std::size_t m = t.size();
    const double lip = params.lip;

    // Feasibility of deviation eps: run the pointwise-maximal h forward.
    // Constraints at node t_i: h(t_i) <= v_i + eps (the value) and
    // h(t_i) >= v_{i+1} - eps (the right limit, forced by continuity of h
    // across the next cell). Because gamma is nondecreasing, a binding upper
    // cap never conflicts with an earlier lower requirement, so tracking the
    // capped maximum alone decides feasibility.
    auto feasible = [&](double eps) {
        double h = 0.0;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            if (h < v[i + 1] - eps) return false;
            h = std::min({h + lip * (t[i + 1] - t[i]), v[i + 1] + eps, 1.0});
        }
        return h >= 1.0;
    };

    double lo = 0.0, hi = 1.0;
    if (feasible(lo)) return 0.0;
    for (int i = 0; i < 64; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

AlphaMinResult min_contamination_level(const DistributionSpec& f0,
                                       const DistributionSpec& f, double threshold,
                                       std::size_t grid_size) {
    if (!(threshold >= 0.0))
        throw InvalidInput("min_contamination_level: threshold must be >= 0");

    // Gamma does not depend on alpha; build it once and probe the Lipschitz
    // problem per alpha.
    GridFunction gamma = compose_gamma(f0, f, grid_size);
    int iterations = 0;
    auto dist_at = [&](double alpha) {
        ++iterations;
        return best_lipschitz_box(gamma, TrimParams(alpha).lip).distance;
    };

    if (dist_at(0.0) <= threshold) return AlphaMinResult{0.0, iterations};
    const double alpha_max = 1.0 - 1e-9;
    if (dist_at(alpha_max) > threshold)
        throw NotAttained("min_contamination_level: threshold not attained below 1-1e-9");

    double lo = 0.0, hi = alpha_max;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        if (dist_at(mid) <= threshold)
            hi = mid;
        else
            lo = mid;
    }
    return AlphaMinResult{hi, iterations};
}

} // namespace trimdist
