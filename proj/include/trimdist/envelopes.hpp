#ifndef TRIMDIST_ENVELOPES_HPP
#define TRIMDIST_ENVELOPES_HPP

#include "trimdist/grid_function.hpp"

#include <limits>
#include <utility>

namespace trimdist {

// Closed value interval [a,b]; either side may be infinite, in which case
// clamping is the identity on that side.
struct BoxBounds {
    double a = -std::numeric_limits<double>::infinity();
    double b = std::numeric_limits<double>::infinity();

    BoxBounds() = default;
    BoxBounds(double a_, double b_);
    static BoxBounds unbounded() { return BoxBounds(); }
};

// Lipschitz envelopes of a function f for constant L:
//   lower(x) = inf_y (f(y) + L|x-y|)   largest L-Lipschitz minorant
//   upper(x) = sup_y (f(y) - L|x-y|)   smallest L-Lipschitz majorant
//   mid      = (lower + upper)/2       best unconstrained L-Lipschitz
//                                      sup-norm approximation of f
struct LipEnvelopes {
    GridFunction lower;
    GridFunction upper;
    GridFunction mid;
    double lip;
};

// Monotone (nonincreasing) envelopes of a bounded g:
//   upper_env(x) = sup_{x<=y<=1} g(y), lower_env(x) = inf_{0<=y<=x} g(y),
//   mid = (upper_env + lower_env)/2, a best nonincreasing approximation.
struct MonotoneEnvelopes {
    GridFunction upper_env;
    GridFunction lower_env;
    GridFunction mid;
};

// Exact envelopes for grid functions. The inf/sup convolutions are evaluated
// over all nodes with both one-sided limits (the inner objective is piecewise
// linear in y between those candidates), and the outputs carry every interior
// kink as an explicit node.
LipEnvelopes pasch_hausdorff(const GridFunction& f, double lip);

// The monotone-case reduction: for nondecreasing f,
//   gamma_1(x) = inf_{y<=x} (f(y) - L y),  gamma_2(x) = sup_{y>=x} (f(y) - L y),
// both nonincreasing, and f_{L,j}(x) = gamma_j(x) + L x reproduces the
// Lipschitz envelopes. Rejects non-monotone input.
std::pair<GridFunction, GridFunction> gamma_envelopes(const GridFunction& f, double lip);

MonotoneEnvelopes ubhaya_envelopes(const GridFunction& g);

// Pointwise clamp into the box; preserves monotonicity and is idempotent.
GridFunction clamp_box(const GridFunction& g, const BoxBounds& box);

} // namespace trimdist

#endif
