#ifndef TRIMDIST_NORMAL_HPP
#define TRIMDIST_NORMAL_HPP

namespace trimdist {

// Standard normal CDF, evaluated through erfc so the lower tail keeps full
// relative accuracy. Accepts +/-infinity.
double normal_cdf(double x);

// Standard normal density.
double normal_pdf(double x);

// Inverse of normal_cdf on [0,1]. p=0 and p=1 map to -inf/+inf. Uses
// Acklam's rational approximation followed by one Halley step against
// normal_cdf, which brings the result to full double precision
// (relative error well below 1e-13, far inside the 1e-10 budget).
double normal_quantile(double p);

} // namespace trimdist

#endif
