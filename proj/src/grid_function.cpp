#include "trimdist/grid_function.hpp"

#include "trimdist/errors.hpp"
#include "trimdist/piecewise.hpp"

#include <algorithm>
#include <cmath>

namespace trimdist {

GridFunction::GridFunction(std::vector<double> nodes, std::vector<double> values,
                           Interp interp)
    : nodes_(std::move(nodes)), values_(std::move(values)), interp_(interp) {
    if (nodes_.size() < 2) throw InvalidInput("GridFunction: need at least nodes 0 and 1");
    if (nodes_.size() != values_.size())
        throw InvalidInput("GridFunction: nodes/values size mismatch");
    if (nodes_.front() != 0.0 || nodes_.back() != 1.0)
        throw InvalidInput("GridFunction: nodes must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (!(nodes_[i] < nodes_[i + 1]))
            throw InvalidInput("GridFunction: nodes must be strictly increasing");
    for (double v : values_)
        if (!std::isfinite(v)) throw InvalidInput("GridFunction: non-finite value");
}

GridFunction GridFunction::identity() {
    return GridFunction({0.0, 1.0}, {0.0, 1.0}, Interp::Linear);
}

GridFunction GridFunction::constant(double c) {
    return GridFunction({0.0, 1.0}, {c, c}, Interp::Linear);
}

std::size_t GridFunction::cell_of(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("GridFunction: evaluation outside [0,1]");
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
    return static_cast<std::size_t>(it - nodes_.begin()); // nodes_[i] >= t
}

double GridFunction::operator()(double t) const {
    const std::size_t i = cell_of(t);
    if (nodes_[i] == t) return values_[i];
    if (interp_ == Interp::StepLeft) return values_[i];
    const double w = (t - nodes_[i - 1]) / (nodes_[i] - nodes_[i - 1]);
    return values_[i - 1] + (values_[i] - values_[i - 1]) * w;
}

double GridFunction::left_limit(double t) const {
    // Left-continuity holds at every node for both interpolations, and at
    // t=0 the left limit is taken to be the value.
    return (*this)(t);
}

double GridFunction::right_limit(double t) const {
    const std::size_t i = cell_of(t);
    if (interp_ == Interp::Linear) return (*this)(t);
    if (nodes_[i] == t) return i + 1 < nodes_.size() ? values_[i + 1] : values_[i];
    return values_[i];
}

bool GridFunction::is_nondecreasing() const {
    for (std::size_t i = 0; i + 1 < values_.size(); ++i)
        if (values_[i] > values_[i + 1]) return false;
    return true;
}

double GridFunction::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double GridFunction::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

double sup_norm_distance(const GridFunction& f, const GridFunction& g) {
    using detail::Pw;
    return pw_sub(Pw::from(f), Pw::from(g)).sup_abs();
}

GridFunction linear_combination(const GridFunction& a, double ca, const GridFunction& b,
                                double cb) {
    if (a.interp() != b.interp())
        throw InvalidInput("linear_combination: mixed interpolation kinds");
    using detail::Pw;
    const Pw c = pw_combine(Pw::from(a), ca, Pw::from(b), cb);
    return a.interp() == Interp::Linear ? c.to_linear_grid() : c.to_stepleft_grid();
}

} // namespace trimdist
