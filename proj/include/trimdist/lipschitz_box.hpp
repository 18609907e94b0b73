#ifndef TRIMDIST_LIPSCHITZ_BOX_HPP
#define TRIMDIST_LIPSCHITZ_BOX_HPP

#include "trimdist/grid_function.hpp"
#include "trimdist/monotone_box.hpp"

namespace trimdist {

// Best sup-norm approximation of a nondecreasing f:[0,1]->[0,1] by
// L-Lipschitz functions pinned to h(0)=0 and h(1)=1.
struct BoxLipResult {
    GridFunction approximant; // nondecreasing, L-Lipschitz, endpoints 0 and 1
    double distance;
    GridFunction gamma_mid; // (gamma_1 + gamma_2)/2 of the tilted function
};

// approximant(x) = clamp of (gamma_mid(x) between 1-L and 0) + L x; the
// distance is the sup norm of f - approximant, which coincides with
//   max{ f_{L,2}(0), 1 - f_{L,1}(1), sup_{y<=x} (f(x)-f(y)-L(x-y))/2 }.
// Requires lip >= 1 (otherwise no function meets both endpoint pins).
BoxLipResult best_lipschitz_box(const GridFunction& f, double lip);

struct OptimizerReport {
    OptimizerSets sets;
    double distance;        // sup-norm distance to the best approximant
    double value_minvalue;  // boundary/unrestricted-pair max formula
    double value_alter;     // envelope-gap form over the feasible sets
    double value_alter2;    // pair form over the feasible sets
    double max_discrepancy; // largest pairwise gap between the three values
};

// Optimizer sets for continuous (Linear) nondecreasing f: all candidate
// nodes/pairs achieving the distance within tol inside the feasible sets
// T1 = {gamma_mid >= 0}, T2 = {gamma_mid <= 1-L},
// T3 = {(y,x) : (f(y)+f(x)-L(y+x))/2 in [1-L, 0]}.
OptimizerReport optimizer_sets(const GridFunction& f, double lip, double tol);

} // namespace trimdist

#endif
