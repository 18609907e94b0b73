#ifndef TRIMDIST_PIECEWISE_HPP
#define TRIMDIST_PIECEWISE_HPP

#include "trimdist/grid_function.hpp"

#include <vector>

namespace trimdist::detail {

// One breakpoint of a piecewise-linear function that may jump at nodes.
// The function is linear on each open cell (t_i, t_{i+1}), running from
// right_i to left_{i+1}; `value` is the value at t itself. For continuous
// functions left == value == right.
struct PwRow {
    double t;
    double left;
    double value;
    double right;
};

// Piecewise-linear function with jumps on [0,1]. This is the engine behind
// every envelope / clamp / sup-norm computation: operations refine breakpoint
// grids, insert crossing points where min/max switch branches, and keep all
// one-sided limits, so results are exact for inputs drawn from the
// GridFunction interpolation classes.
class Pw {
public:
    Pw() = default;
    explicit Pw(std::vector<PwRow> rows);
    static Pw from(const GridFunction& f);

    const std::vector<PwRow>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }

    double value(double t) const;
    double left(double t) const;
    double right(double t) const;

    // f(t) -> c0 + c1*t + f(t); linear cells stay linear.
    Pw affine_add(double c0, double c1) const;
    Pw scaled(double c) const;
    Pw negated() const { return scaled(-1.0); }

    // t -> 1 - t (reverses orientation; swaps one-sided limits).
    Pw reversed() const;

    std::vector<double> ts() const;
    // Rows re-sampled on a superset grid of breakpoints.
    Pw refined_to(const std::vector<double>& ts) const;

    // Running inf over [0,t] / sup over [t,1], exact including jump cells and
    // infima approached but not attained at open cell ends.
    Pw prefix_inf() const;
    Pw prefix_sup() const { return negated().prefix_inf().negated(); }
    Pw suffix_sup() const { return reversed().prefix_sup().reversed(); }
    Pw suffix_inf() const { return reversed().prefix_inf().reversed(); }

    // Pointwise clamp; +/-infinity bounds are identity on that side.
    Pw clamp(double lo, double hi) const;

    double sup_abs() const;    // sup |f|
    double sup_signed() const; // sup f
    double inf_signed() const; // inf f

    bool is_continuous() const; // exact field comparison
    GridFunction to_linear_grid() const;    // requires continuity
    GridFunction to_stepleft_grid() const;  // requires piecewise-constant cells

    // Linear grid through the node values, for results that are continuous
    // mathematically but whose one-sided fields may disagree by rounding
    // (e.g. after re-tilting scans of a discontinuous input).
    GridFunction to_linear_grid_from_values() const;

    friend Pw pw_binary_min(const Pw& a, const Pw& b);
    friend Pw pw_binary_max(const Pw& a, const Pw& b);
    friend Pw pw_combine(const Pw& a, double ca, const Pw& b, double cb);
    friend Pw pw_sub(const Pw& a, const Pw& b) { return pw_combine(a, 1.0, b, -1.0); }

private:
    std::vector<PwRow> rows_;

    std::size_t cell_of(double t) const;
};

Pw pw_binary_min(const Pw& a, const Pw& b);
Pw pw_binary_max(const Pw& a, const Pw& b);
Pw pw_combine(const Pw& a, double ca, const Pw& b, double cb);

} // namespace trimdist::detail

#endif
