#ifndef TRIMDIST_MONOTONE_INTERNAL_HPP
#define TRIMDIST_MONOTONE_INTERNAL_HPP

#include "trimdist/envelopes.hpp"
#include "trimdist/monotone_box.hpp"
#include "trimdist/piecewise.hpp"

#include <limits>
#include <vector>

namespace trimdist::detail {

// Everything the box-constrained monotone approximation produces, re-sampled
// onto one common breakpoint grid (including the box crossing points of the
// averaged envelope, so region boundaries are explicit rows).
struct MonotoneCore {
    Pw g;
    Pw upper;   // suffix sup
    Pw lower;   // prefix inf
    Pw mid;     // (upper + lower)/2
    Pw clamped; // clamp of mid into the box
    double distance = 0.0;
};

MonotoneCore monotone_core(const Pw& g, const BoxBounds& box);

// Candidate-level extraction of the optimizer sets for continuous inputs
// (value fields only). Also returns the per-term suprema over the exact
// feasible sets without the tol widening, which is what rep1's pair form
// reports.
struct ExtractedSets {
    OptimizerSets sets;
    double term1 = -std::numeric_limits<double>::infinity(); // sup (G - B) on {mid >= B}
    double term2 = -std::numeric_limits<double>::infinity(); // sup (A - G) on {mid <= A}
    double term3_env = -std::numeric_limits<double>::infinity();   // sup (U-L)/2 on {A<=mid<=B}
    double term3_pairs = -std::numeric_limits<double>::infinity(); // sup (G(x)-G(y))/2 over T3
};

ExtractedSets extract_sets(const MonotoneCore& core, const BoxBounds& box, double tol);

} // namespace trimdist::detail

#endif
