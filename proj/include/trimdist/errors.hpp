#ifndef TRIMDIST_ERRORS_HPP
#define TRIMDIST_ERRORS_HPP

#include <stdexcept>

namespace trimdist {

// Rejected argument values: empty samples, NaNs, bad node grids, alpha
// outside [0,1), Lipschitz bounds below the feasible minimum, and so on.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A distribution that does not satisfy the hypotheses an operation needs
// (e.g. an analytic CDF without the strictly-increasing guarantee).
struct UnsupportedDistribution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameter combinations with no implemented closed form.
struct UnsupportedCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A maximizer sits on a clamp boundary (within the requested margin), so the
// directional derivative is not defined by the limit formula.
struct BoundaryDegenerate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All optimizer sets came out empty; no derivative term is available.
struct DegenerateCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bisection target was not reached anywhere in the search interval.
struct NotAttained : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace trimdist

#endif
