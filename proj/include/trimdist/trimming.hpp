#ifndef TRIMDIST_TRIMMING_HPP
#define TRIMDIST_TRIMMING_HPP

#include "trimdist/distribution.hpp"
#include "trimdist/grid_function.hpp"

#include <cstddef>

namespace trimdist {

// Result of the trimmed Kolmogorov distance computation.
//
// h_opt is the canonical optimal trimming function (an element of the
// constraint class: nondecreasing, endpoints 0 and 1, Lipschitz bound
// 1/(1-alpha)); h_tilde = h_opt - t/(1-alpha) is its shifted-down form with
// values in [-alpha/(1-alpha), 0]. g_fun holds G(t) = Gamma(t) - t/(1-alpha):
// exact (Linear) when f is analytic; for empirical f it records the values of
// G at the jump points as a StepLeft grid (between jumps the true G has slope
// -1/(1-alpha), which a step grid cannot carry, so the distance is always
// evaluated through h_opt against Gamma, where the step representation is
// exact).
struct TrimResult {
    double distance;
    GridFunction h_tilde;
    GridFunction h_opt;
    GridFunction g_fun;
    GridFunction gamma;
    TrimParams params;
    std::size_t grid_size; // nodes used for Gamma (n for empirical f)
    std::size_t sample_size; // 0 when f is analytic
};

// d_K(F0, R_alpha(F)): minimal Kolmogorov distance between F0 and the
// alpha-trimmings of F. Exact for empirical f (all candidates are the jump
// points with both one-sided limits); grid-accurate for analytic f.
TrimResult trimmed_distance(const DistributionSpec& f0, const DistributionSpec& f,
                            const TrimParams& params, std::size_t grid_size = 100000);

// The contaminated mixture (1-alpha) F0 + alpha Q as an analytic spec; the
// quantile is resolved by bisection on the mixture CDF.
DistributionSpec mixture_cdf(const DistributionSpec& f0, const DistributionSpec& q,
                             double alpha);

// Independent verification oracle for empirical inputs: bisection on the
// deviation level with a greedy feasibility pass over the jump candidates.
// Accepts only StepLeft gamma grids (the output of an empirical
// compose_gamma). Absolute tolerance 1e-12.
double oracle_distance(const GridFunction& gamma, const TrimParams& params);

struct AlphaMinResult {
    double alpha_hat;
    int iterations;
};

// alpha_hat = inf{alpha in [0,1) : trimmed distance <= threshold}, located by
// bisection (the distance is nonincreasing in alpha). Returns 0 when the
// threshold already holds at alpha = 0 and throws NotAttained when it fails
// even at alpha = 1 - 1e-9. Absolute tolerance 1e-6 on alpha.
AlphaMinResult min_contamination_level(const DistributionSpec& f0,
                                       const DistributionSpec& f, double threshold,
                                       std::size_t grid_size = 100000);

} // namespace trimdist

#endif
