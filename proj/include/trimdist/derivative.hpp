#ifndef TRIMDIST_DERIVATIVE_HPP
#define TRIMDIST_DERIVATIVE_HPP

#include "trimdist/envelopes.hpp"
#include "trimdist/grid_function.hpp"
#include "trimdist/monotone_box.hpp"

namespace trimdist {

struct DerivativeResult {
    double value;
    OptimizerSets sets;
};

// Directional derivative of G -> ||G - clamp((U+L)/2)|| along a continuous
// direction j:
//   max( max_{x in T1} J(x), max_{x in T2} -J(x),
//        max_{(y,x) in T3} (J(x)-J(y))/2 ),
// with the max over an empty set absent. The non-degeneracy hypotheses are
// checked with margin tol: no T1 maximizer may sit within tol of the upper
// clamp level, no T2 maximizer within tol of the lower one, and no T3 pair
// midpoint within tol of either; violations throw BoundaryDegenerate. If all
// three sets are empty the derivative is undefined and DegenerateCase is
// thrown. tol also widens which near-optimal candidates enter the sets.
DerivativeResult directional_derivative_monotone(const GridFunction& g,
                                                 const GridFunction& j,
                                                 const BoxBounds& box, double tol = 1e-8);

// Same derivative for the Lipschitz problem with endpoint pins: reduces to
// the monotone case with G(x) = f(x) - L x and box [1-L, 0] (the tilt cancels
// in differences, so the direction passes through unchanged).
DerivativeResult directional_derivative_lipschitz(const GridFunction& f,
                                                  const GridFunction& j, double lip,
                                                  double tol = 1e-8);

} // namespace trimdist

#endif
