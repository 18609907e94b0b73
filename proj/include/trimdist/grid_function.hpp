#ifndef TRIMDIST_GRID_FUNCTION_HPP
#define TRIMDIST_GRID_FUNCTION_HPP

#include <cstddef>
#include <vector>

namespace trimdist {

enum class Interp {
    Linear,   // piecewise-linear interpolation between nodes (continuous)
    StepLeft, // value on (t_{i-1}, t_i] is v_i; value at 0 is v_0
};

// Real-valued function on [0,1] represented on a finite node grid.
//
// Nodes are strictly increasing with t_0 = 0 and t_m = 1. Every quantity in
// this library is evaluated over the "candidate set": all nodes with both
// one-sided limits. Between consecutive nodes both interpolations are linear
// (constants are a special case), so piecewise computations that track the
// candidate values are exact; no tolerance-based jump detection anywhere.
class GridFunction {
public:
    GridFunction(std::vector<double> nodes, std::vector<double> values, Interp interp);

    static GridFunction identity();
    static GridFunction constant(double c);

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }
    Interp interp() const { return interp_; }
    std::size_t size() const { return nodes_.size(); }

    double operator()(double t) const;
    double left_limit(double t) const;  // at t=0 equals the value
    double right_limit(double t) const; // at t=1 equals the value

    bool is_nondecreasing() const;
    double min_value() const;
    double max_value() const;

private:
    std::vector<double> nodes_;
    std::vector<double> values_;
    Interp interp_;

    std::size_t cell_of(double t) const; // index i with t in (t_i, t_{i+1}]
};

// Exact sup norm of |f - g| over [0,1], computed from both one-sided limits
// at every node of the union grid. Exact for any pair of interpolations
// because f - g is linear between consecutive union nodes.
double sup_norm_distance(const GridFunction& f, const GridFunction& g);

// ca*a + cb*b on the union grid. Requires matching interpolation kinds
// (the sum of a step and a non-constant linear part leaves both classes).
GridFunction linear_combination(const GridFunction& a, double ca, const GridFunction& b,
                                double cb);

} // namespace trimdist

#endif
