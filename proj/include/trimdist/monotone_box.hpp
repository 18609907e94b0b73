#ifndef TRIMDIST_MONOTONE_BOX_HPP
#define TRIMDIST_MONOTONE_BOX_HPP

#include "trimdist/envelopes.hpp"
#include "trimdist/grid_function.hpp"

#include <utility>
#include <vector>

namespace trimdist {

// Argmax sets of the three terms behind the box-constrained approximation
// distance. t1 holds maximizers of G - B inside {Gbar >= B}, t2 maximizers of
// A - G inside {Gbar <= A}, t3 pairs (y,x), y <= x, maximizing (G(x)-G(y))/2
// subject to (G(y)+G(x))/2 in [A,B]. Membership tests are exact; tol only
// widens which near-optimal candidates get reported.
struct OptimizerSets {
    std::vector<double> t1;
    std::vector<double> t2;
    std::vector<std::pair<double, double>> t3;
    double tol = 0.0;
};

struct MonotoneBoxResult {
    GridFunction approximant;
    double distance;
};

// Best sup-norm approximation of a bounded g by nonincreasing functions with
// values in the box: clamp of the averaged monotone envelopes.
MonotoneBoxResult best_monotone_box(const GridFunction& g, const BoxBounds& box);

struct Rep1Report {
    double distance;      // sup-norm distance to the best approximant
    double expr_envelope; // max over the three terms, envelope-gap form
    double expr_pairs;    // max over the three terms, optimizer-pair form
    OptimizerSets sets;
};

// The two equivalent closed forms of the distance for continuous g, together
// with the reported optimizer sets. Rejects StepLeft input.
Rep1Report rep1_expressions(const GridFunction& g, const BoxBounds& box,
                            double tol = 1e-8);

} // namespace trimdist

#endif
