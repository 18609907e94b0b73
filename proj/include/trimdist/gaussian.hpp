#ifndef TRIMDIST_GAUSSIAN_HPP
#define TRIMDIST_GAUSSIAN_HPP

#include <optional>

namespace trimdist {

enum class GaussianRegime {
    LocationShift,  // sigma = 1, mu != 0
    ScaleBelowOne,  // mu = 0, sigma < 1
    ScaleInBand,    // mu = 0, 1 <= sigma <= 1/(1-alpha): distance 0
    ScaleAboveBand, // mu = 0, sigma > 1/(1-alpha)
};

struct GaussianCase {
    double mu = 0.0;
    double sigma = 1.0;
    double alpha = 0.0;
    GaussianRegime regime = GaussianRegime::ScaleInBand;
    // Interior extremum locations of G(t) = Gamma(t) - t/(1-alpha) where the
    // regime defines them: for LocationShift t_a is the single extremum; for
    // the scale regimes t_a < t_b bracket the middle monotone piece.
    std::optional<double> t_a;
    std::optional<double> t_b;
    // sqrt of 8 (sigma^2-1) log(sigma (1-alpha)); both factors flip sign
    // together across the scale regimes, so delta^2 >= 0 in each.
    std::optional<double> delta;
};

struct GaussianResult {
    double distance;
    GaussianCase info;
};

// Closed-form trimmed Kolmogorov distance between N(0,1) and the
// alpha-trimmings of N(mu, sigma^2), for the two families with tractable
// formulas: sigma = 1 (location shift) and mu = 0 (pure scale). Other
// parameter pairs throw UnsupportedCase; the variational pipeline still
// handles them numerically.
GaussianResult gaussian_trimmed_distance(double mu, double sigma, double alpha);

const char* to_string(GaussianRegime regime);

} // namespace trimdist

#endif
