#include "trimdist/distribution.hpp"

#include "trimdist/errors.hpp"
#include "trimdist/normal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trimdist {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DistributionSpec DistributionSpec::analytic(std::function<double(double)> cdf,
                                            std::function<double(double)> quantile,
                                            bool strictly_increasing, double support_lo,
                                            double support_hi, std::string name) {
    DistributionSpec d;
    d.kind_ = Kind::Analytic;
    d.cdf_ = std::move(cdf);
    d.quantile_ = std::move(quantile);
    d.strictly_increasing_ = strictly_increasing;
    d.support_lo_ = support_lo;
    d.support_hi_ = support_hi;
    d.name_ = std::move(name);
    return d;
}

DistributionSpec DistributionSpec::normal(double mu, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(mu) || !std::isfinite(sigma))
        throw InvalidInput("normal: sigma must be positive and parameters finite");
    auto cdf = [mu, sigma](double x) {
        if (x == -kInf) return 0.0;
        if (x == kInf) return 1.0;
        return normal_cdf((x - mu) / sigma);
    };
    auto quantile = [mu, sigma](double t) { return mu + sigma * normal_quantile(t); };
    return analytic(cdf, quantile, true, -kInf, kInf, "normal");
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidInput("uniform: need finite a < b");
    auto cdf = [a, b](double x) {
        if (x <= a) return 0.0;
        if (x >= b) return 1.0;
        return (x - a) / (b - a);
    };
    auto quantile = [a, b](double t) { return a + t * (b - a); };
    return analytic(cdf, quantile, true, a, b, "uniform");
}

double DistributionSpec::cdf(double x) const {
    if (std::isnan(x)) throw InvalidInput("cdf: NaN argument");
    if (kind_ == Kind::Analytic) return cdf_(x);
    const auto it = std::upper_bound(sample_.begin(), sample_.end(), x);
    return static_cast<double>(it - sample_.begin()) / static_cast<double>(sample_.size());
}

double DistributionSpec::quantile(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("quantile: t outside [0,1]");
    if (kind_ == Kind::Analytic) {
        if (t == 0.0) return support_lo_;
        if (t == 1.0) return support_hi_;
        return quantile_(t);
    }
    const std::size_t n = sample_.size();
    if (t == 0.0) return sample_.front();
    const auto k = static_cast<std::size_t>(std::ceil(static_cast<double>(n) * t));
    return sample_[std::min(std::max<std::size_t>(k, 1), n) - 1];
}

const std::vector<double>& DistributionSpec::sample() const {
    if (kind_ != Kind::Empirical)
        throw InvalidInput("sample: not an empirical distribution");
    return sample_;
}

std::size_t DistributionSpec::sample_size() const {
    return kind_ == Kind::Empirical ? sample_.size() : 0;
}

DistributionSpec empirical_cdf(std::vector<double> sample) {
    if (sample.empty()) throw InvalidInput("empirical_cdf: empty sample");
    for (double x : sample)
        if (!std::isfinite(x)) throw InvalidInput("empirical_cdf: non-finite sample value");
    std::sort(sample.begin(), sample.end());
    DistributionSpec d;
    d.kind_ = DistributionSpec::Kind::Empirical;
    d.support_lo_ = sample.front();
    d.support_hi_ = sample.back();
    d.sample_ = std::move(sample);
    d.strictly_increasing_ = false;
    d.name_ = "empirical";
    return d;
}

GridFunction compose_gamma(const DistributionSpec& f0, const DistributionSpec& f,
                           std::size_t grid_size) {
    if (f.kind() == DistributionSpec::Kind::Empirical) {
        const auto& xs = f.sample();
        const std::size_t n = xs.size();
        std::vector<double> t(n + 1), v(n + 1);
        t[0] = 0.0;
        v[0] = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            t[i] = static_cast<double>(i) / static_cast<double>(n);
            v[i] = std::clamp(f0.cdf(xs[i - 1]), 0.0, 1.0);
            v[i] = std::max(v[i], v[i - 1]);
        }
        t[n] = 1.0;
        return GridFunction(std::move(t), std::move(v), Interp::StepLeft);
    }

    if (!f.strictly_increasing())
        throw UnsupportedDistribution(
            "compose_gamma: analytic f must be continuous and strictly increasing");
    if (grid_size < 2) throw InvalidInput("compose_gamma: grid_size must be >= 2");

    std::vector<double> t(grid_size), v(grid_size);
    const double h = 1.0 / static_cast<double>(grid_size - 1);
    for (std::size_t i = 0; i < grid_size; ++i) {
        t[i] = static_cast<double>(i) * h;
        v[i] = std::clamp(f0.cdf(f.quantile(t[i])), 0.0, 1.0);
        if (i > 0) v[i] = std::max(v[i], v[i - 1]);
    }
    t.front() = 0.0;
    t.back() = 1.0;
    return GridFunction(std::move(t), std::move(v), Interp::Linear);
}

TrimParams::TrimParams(double alpha_) : alpha(alpha_), lip(1.0 / (1.0 - alpha_)) {
    if (!(alpha_ >= 0.0 && alpha_ < 1.0))
        throw InvalidInput("TrimParams: alpha must lie in [0,1)");
}

} // namespace trimdist
