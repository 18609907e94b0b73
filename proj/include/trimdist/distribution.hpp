#ifndef TRIMDIST_DISTRIBUTION_HPP
#define TRIMDIST_DISTRIBUTION_HPP

#include "trimdist/grid_function.hpp"

#include <functional>
#include <string>
#include <vector>

namespace trimdist {

// A distribution on the real line, given either analytically (CDF + quantile
// callables plus metadata) or empirically (a sorted sample).
//
// The quantile is the left-continuous inverse F^{-1}(t) = inf{x : F(x) >= t}.
// By convention quantile(0)/quantile(1) return the support endpoints (which
// may be infinite) and the CDF accepts +/-infinity.
class DistributionSpec {
public:
    enum class Kind { Analytic, Empirical };

    static DistributionSpec analytic(std::function<double(double)> cdf,
                                     std::function<double(double)> quantile,
                                     bool strictly_increasing, double support_lo,
                                     double support_hi, std::string name = "analytic");
    static DistributionSpec normal(double mu, double sigma);
    static DistributionSpec uniform(double a, double b);

    Kind kind() const { return kind_; }
    bool strictly_increasing() const { return strictly_increasing_; }
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }
    const std::string& name() const { return name_; }

    double cdf(double x) const;
    double quantile(double t) const;

    // Empirical only: the sorted sample.
    const std::vector<double>& sample() const;
    std::size_t sample_size() const;

private:
    friend DistributionSpec empirical_cdf(std::vector<double> sample);
    DistributionSpec() = default;

    Kind kind_ = Kind::Analytic;
    std::function<double(double)> cdf_;
    std::function<double(double)> quantile_;
    std::vector<double> sample_;
    bool strictly_increasing_ = false;
    double support_lo_ = 0.0;
    double support_hi_ = 0.0;
    std::string name_;
};

// Empirical distribution of a sample: right-continuous step CDF with jumps
// 1/n at the order statistics; quantile(t) = x_(ceil(n t)).
DistributionSpec empirical_cdf(std::vector<double> sample);

// Gamma = F0 o F^{-1} on [0,1].
//
// Empirical f with n points: exact StepLeft function on the jump grid {i/n}
// with v_i = F0(x_(i)) and v_0 = 0 (the value on (0,1/n] is F0(x_(1)), which
// is all the distance evaluation ever probes at the left end).
// Analytic f: Linear function sampled on a uniform grid of grid_size nodes;
// requires f to be declared continuous and strictly increasing. Values are
// clamped to [0,1] and forced nondecreasing against rounding.
//
// An empirical f0 is accepted as well; the composition is then exact as long
// as f0 places no atom on a sample point of f.
GridFunction compose_gamma(const DistributionSpec& f0, const DistributionSpec& f,
                           std::size_t grid_size);

// Contamination level alpha in [0,1) and the induced Lipschitz bound
// lip = 1/(1-alpha).
struct TrimParams {
    double alpha;
    double lip;

    explicit TrimParams(double alpha_);
};

} // namespace trimdist

#endif
