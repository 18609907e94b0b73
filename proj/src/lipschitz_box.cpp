#include "trimdist/lipschitz_box.hpp"

#include "monotone_internal.hpp"
#include "trimdist/errors.hpp"

#include <algorithm>
#include <cmath>

namespace trimdist {

using detail::Pw;

namespace {

void validate_input(const GridFunction& f, double lip) {
    if (!(lip >= 1.0))
        throw InvalidInput("lipschitz_box: lip must be >= 1 for the endpoint pins");
    if (!f.is_nondecreasing()) throw InvalidInput("lipschitz_box: f must be nondecreasing");
    if (f.min_value() < 0.0 || f.max_value() > 1.0)
        throw InvalidInput("lipschitz_box: f must map into [0,1]");
}

} // namespace

BoxLipResult best_lipschitz_box(const GridFunction& f, double lip) {
    validate_input(f, lip);
    const Pw tilted = Pw::from(f).affine_add(0.0, -lip);
    const Pw gamma1 = tilted.prefix_inf();
    const Pw gamma2 = tilted.suffix_sup();
    const Pw gamma_mid = pw_combine(gamma1, 0.5, gamma2, 0.5);
    const Pw approx = gamma_mid.clamp(1.0 - lip, 0.0).affine_add(0.0, lip);
    const double dist = pw_sub(Pw::from(f), approx).sup_abs();
    return BoxLipResult{approx.to_linear_grid(), dist, gamma_mid.to_linear_grid()};
}

OptimizerReport optimizer_sets(const GridFunction& f, double lip, double tol) {
    validate_input(f, lip);
    if (f.interp() != Interp::Linear)
        throw InvalidInput("optimizer_sets: continuous (Linear) input required");
    if (!(tol > 0.0)) throw InvalidInput("optimizer_sets: tol must be positive");

    const BoxBounds box(1.0 - lip, 0.0);
    const auto core = detail::monotone_core(Pw::from(f).affine_add(0.0, -lip), box);
    auto ex = detail::extract_sets(core, box, tol);

    // Unrestricted boundary/pair formula.
    const double f_l2_at_0 = core.upper.rows().front().value;
    const double f_l1_at_1 = core.lower.rows().back().value + lip;
    const double half_gap = 0.5 * pw_sub(core.upper, core.lower).sup_signed();
    const double minvalue = std::max({f_l2_at_0, 1.0 - f_l1_at_1, half_gap});

    const double alter = std::max({ex.term1, ex.term2, ex.term3_env});
    const double alter2 = std::max({ex.term1, ex.term2, ex.term3_pairs});
    const double discrepancy =
        std::max({std::fabs(minvalue - alter), std::fabs(minvalue - alter2),
                  std::fabs(alter - alter2)});

    return OptimizerReport{std::move(ex.sets), core.distance, minvalue, alter, alter2,
                           discrepancy};
}

} // namespace trimdist
