#include "trimdist/gaussian.hpp"

#include "trimdist/errors.hpp"
#include "trimdist/normal.hpp"

#include <cmath>

namespace trimdist {

GaussianResult gaussian_trimmed_distance(double mu, double sigma, double alpha) {
    if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mu))
        throw InvalidInput("gaussian_trimmed_distance: need finite mu and sigma > 0");
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw InvalidInput("gaussian_trimmed_distance: alpha must lie in [0,1)");
    if (mu != 0.0 && sigma != 1.0)
        throw UnsupportedCase(
            "gaussian_trimmed_distance: closed forms cover sigma=1 or mu=0 only");

    GaussianCase info;
    info.mu = mu;
    info.sigma = sigma;
    info.alpha = alpha;
    const double one_minus = 1.0 - alpha;

    if (mu != 0.0) {
        info.regime = GaussianRegime::LocationShift;
        const double am = std::fabs(mu);
        const double shift = std::log(one_minus) / am;
        info.t_a = normal_cdf(-mu / 2.0 + std::log(one_minus) / mu);
        const double d =
            normal_cdf(am / 2.0 + shift) - normal_cdf(-am / 2.0 + shift) / one_minus;
        return GaussianResult{d, info};
    }

    if (sigma >= 1.0 && sigma * one_minus <= 1.0) {
        info.regime = GaussianRegime::ScaleInBand;
        return GaussianResult{0.0, info};
    }

    const double delta2 = 8.0 * (sigma * sigma - 1.0) * std::log(sigma * one_minus);
    const double delta = std::sqrt(delta2);
    info.delta = delta;

    if (sigma < 1.0) {
        info.regime = GaussianRegime::ScaleBelowOne;
        const double denom = 1.0 - sigma * sigma;
        const double xa = -delta / (2.0 * denom);
        const double xb = delta / (2.0 * denom);
        info.t_a = normal_cdf(xa);
        info.t_b = normal_cdf(xb);
        const double d = normal_cdf(-sigma * delta / 2.0 / denom) -
                         normal_cdf(-delta / 2.0 / denom) / one_minus;
        return GaussianResult{d, info};
    }

    info.regime = GaussianRegime::ScaleAboveBand;
    const double denom = sigma * sigma - 1.0;
    const double xa = -delta / (2.0 * denom);
    const double xb = delta / (2.0 * denom);
    info.t_a = normal_cdf(xa);
    info.t_b = normal_cdf(xb);
    const double d = normal_cdf(sigma * delta / 2.0 / denom) -
                     (normal_cdf(delta / 2.0 / denom) - alpha / 2.0) / one_minus;
    return GaussianResult{d, info};
}

const char* to_string(GaussianRegime regime) {
    switch (regime) {
    case GaussianRegime::LocationShift: return "LocationShift";
    case GaussianRegime::ScaleBelowOne: return "ScaleBelowOne";
    case GaussianRegime::ScaleInBand: return "ScaleInBand";
    case GaussianRegime::ScaleAboveBand: return "ScaleAboveBand";
    }
    return "unknown";
}

} // namespace trimdist
