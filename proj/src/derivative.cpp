#include "trimdist/derivative.hpp"

#include "monotone_internal.hpp"
#include "trimdist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace trimdist {

using detail::Pw;

namespace {

DerivativeResult derivative_from_core(const detail::MonotoneCore& core,
                                      const BoxBounds& box, const GridFunction& j,
                                      double tol) {
    auto ex = detail::extract_sets(core, box, tol);
    const auto& sets = ex.sets;

    for (double t : sets.t1)
        if (core.mid.value(t) - box.b <= tol)
            throw BoundaryDegenerate("derivative: T1 maximizer on the upper clamp level");
    for (double t : sets.t2)
        if (box.a - core.mid.value(t) <= tol)
            throw BoundaryDegenerate("derivative: T2 maximizer on the lower clamp level");
    for (const auto& [y, x] : sets.t3) {
        const double s = 0.5 * (core.g.value(y) + core.g.value(x));
        if ((std::isfinite(box.a) && std::fabs(s - box.a) <= tol) ||
            (std::isfinite(box.b) && std::fabs(s - box.b) <= tol))
            throw BoundaryDegenerate("derivative: T3 pair midpoint on a clamp level");
    }

    if (sets.t1.empty() && sets.t2.empty() && sets.t3.empty())
        throw DegenerateCase("derivative: all optimizer sets are empty");

    double value = -std::numeric_limits<double>::infinity();
    for (double t : sets.t1) value = std::max(value, j(t));
    for (double t : sets.t2) value = std::max(value, -j(t));
    for (const auto& [y, x] : sets.t3) value = std::max(value, 0.5 * (j(x) - j(y)));
    return DerivativeResult{value, std::move(ex.sets)};
}

void validate_continuous(const GridFunction& g, const GridFunction& j, double tol) {
    if (g.interp() != Interp::Linear || j.interp() != Interp::Linear)
        throw InvalidInput("derivative: continuous (Linear) inputs required");
    if (!(tol > 0.0)) throw InvalidInput("derivative: tol must be positive");
}

} // namespace

DerivativeResult directional_derivative_monotone(const GridFunction& g,
                                                 const GridFunction& j,
                                                 const BoxBounds& box, double tol) {
    validate_continuous(g, j, tol);
    const auto core = detail::monotone_core(Pw::from(g), box);
    return derivative_from_core(core, box, j, tol);
}

DerivativeResult directional_derivative_lipschitz(const GridFunction& f,
                                                  const GridFunction& j, double lip,
                                                  double tol) {
    validate_continuous(f, j, tol);
    if (!(lip >= 1.0)) throw InvalidInput("derivative: lip must be >= 1");
    if (!f.is_nondecreasing()) throw InvalidInput("derivative: f must be nondecreasing");
    const BoxBounds box(1.0 - lip, 0.0);
    const auto core = detail::monotone_core(Pw::from(f).affine_add(0.0, -lip), box);
    return derivative_from_core(core, box, j, tol);
}

} // namespace trimdist
