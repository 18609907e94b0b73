#include "trimdist/envelopes.hpp"

#include "trimdist/errors.hpp"
#include "trimdist/piecewise.hpp"

#include <cmath>

namespace trimdist {

using detail::Pw;

BoxBounds::BoxBounds(double a_, double b_) : a(a_), b(b_) {
    if (std::isnan(a) || std::isnan(b) || !(a <= b))
        throw InvalidInput("BoxBounds: need a <= b");
}

LipEnvelopes pasch_hausdorff(const GridFunction& f, double lip) {
    if (!(lip >= 0.0)) throw InvalidInput("pasch_hausdorff: lip must be >= 0");

    if (f.is_nondecreasing()) {
        // Monotone reduction: f_{L,j}(x) = gamma_j(x) + L x. The scans stay
        // exact (including at jump nodes of a StepLeft input) and the tilt is
        // added back to all one-sided fields alike, so the outputs convert
        // to Linear grids without any rounding slack.
        const Pw tilted = Pw::from(f).affine_add(0.0, -lip);
        const Pw lower = tilted.prefix_inf().affine_add(0.0, lip);
        const Pw upper = tilted.suffix_sup().affine_add(0.0, lip);
        const Pw mid = pw_combine(lower, 0.5, upper, 0.5);
        return LipEnvelopes{lower.to_linear_grid(), upper.to_linear_grid(),
                            mid.to_linear_grid(), lip};
    }

    const Pw pf = Pw::from(f);

    // lower(x) = min( L x + prefix_inf(f - L y),  -L x + suffix_inf(f + L y) )
    const Pw fwd = pf.affine_add(0.0, -lip).prefix_inf().affine_add(0.0, lip);
    const Pw bwd = pf.affine_add(0.0, lip).suffix_inf().affine_add(0.0, -lip);
    const Pw lower = pw_binary_min(fwd, bwd);

    // upper(x) = max( -L x + prefix_sup(f + L y),  L x + suffix_sup(f - L y) )
    const Pw fwd2 = pf.affine_add(0.0, lip).prefix_sup().affine_add(0.0, -lip);
    const Pw bwd2 = pf.affine_add(0.0, -lip).suffix_sup().affine_add(0.0, lip);
    const Pw upper = pw_binary_max(fwd2, bwd2);

    // The envelopes are L-Lipschitz, hence continuous; the one-sided fields
    // of the min/max can disagree by rounding where the inputs jump, so the
    // conversion goes through the node values.
    const Pw mid = pw_combine(lower, 0.5, upper, 0.5);
    return LipEnvelopes{lower.to_linear_grid_from_values(),
                        upper.to_linear_grid_from_values(),
                        mid.to_linear_grid_from_values(), lip};
}

std::pair<GridFunction, GridFunction> gamma_envelopes(const GridFunction& f, double lip) {
    if (!(lip >= 0.0)) throw InvalidInput("gamma_envelopes: lip must be >= 0");
    if (!f.is_nondecreasing())
        throw InvalidInput("gamma_envelopes: f must be nondecreasing");
    const Pw tilted = Pw::from(f).affine_add(0.0, -lip);
    return {tilted.prefix_inf().to_linear_grid(), tilted.suffix_sup().to_linear_grid()};
}

MonotoneEnvelopes ubhaya_envelopes(const GridFunction& g) {
    const Pw pg = Pw::from(g);
    const Pw upper = pg.suffix_sup();
    const Pw lower = pg.prefix_inf();
    const Pw mid = pw_combine(upper, 0.5, lower, 0.5);
    if (g.interp() == Interp::Linear)
        return MonotoneEnvelopes{upper.to_linear_grid(), lower.to_linear_grid(),
                                 mid.to_linear_grid()};
    return MonotoneEnvelopes{upper.to_stepleft_grid(), lower.to_stepleft_grid(),
                             mid.to_stepleft_grid()};
}

GridFunction clamp_box(const GridFunction& g, const BoxBounds& box) {
    const Pw out = Pw::from(g).clamp(box.a, box.b);
    return g.interp() == Interp::Linear ? out.to_linear_grid() : out.to_stepleft_grid();
}

} // namespace trimdist
