#include "trimdist/monotone_box.hpp"

#include "monotone_internal.hpp"
#include "trimdist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace trimdist {

using detail::Pw;

namespace detail {

MonotoneCore monotone_core(const Pw& g, const BoxBounds& box) {
    MonotoneCore core;
    const Pw upper = g.suffix_sup();
    const Pw lower = g.prefix_inf();
    const Pw mid = pw_combine(upper, 0.5, lower, 0.5);
    const Pw clamped = mid.clamp(box.a, box.b);

    // One common grid: the clamp inserts the mid/box crossing rows, and mid's
    // grid already contains every breakpoint of g, upper and lower.
    const std::vector<double> ts = clamped.ts();
    core.g = g.refined_to(ts);
    core.upper = upper.refined_to(ts);
    core.lower = lower.refined_to(ts);
    core.mid = mid.refined_to(ts);
    core.clamped = clamped;
    core.distance = pw_sub(core.g, core.clamped).sup_abs();
    return core;
}

ExtractedSets extract_sets(const MonotoneCore& core, const BoxBounds& box, double tol) {
    ExtractedSets out;
    out.sets.tol = tol;
    const auto& rg = core.g.rows();
    const auto& rm = core.mid.rows();
    const auto& ru = core.upper.rows();
    const auto& rl = core.lower.rows();
    const double dist = core.distance;
    const double threshold = dist - tol;

    for (std::size_t i = 0; i < rg.size(); ++i) {
        const double gv = rg[i].value;
        const double mv = rm[i].value;
        if (mv >= box.b) {
            out.term1 = std::max(out.term1, gv - box.b);
            if (gv - box.b >= threshold) out.sets.t1.push_back(rg[i].t);
        }
        if (mv <= box.a) {
            out.term2 = std::max(out.term2, box.a - gv);
            if (box.a - gv >= threshold) out.sets.t2.push_back(rg[i].t);
        }
        if (mv >= box.a && mv <= box.b)
            out.term3_env = std::max(out.term3_env, 0.5 * (ru[i].value - rl[i].value));
    }

    // Pairs (y,x) with y <= x and (G(y)+G(x))/2 in [A,B]. Candidates y <= x
    // are kept in a value-ordered map; the window is prefiltered with a small
    // slack and every hit is re-tested with the exact membership comparison.
    const double slack = 1e-12 * (1.0 + std::fabs(dist));
    std::multimap<double, double> seen; // G(y) -> y
    for (std::size_t i = 0; i < rg.size(); ++i) {
        const double gx = rg[i].value;
        const double tx = rg[i].t;
        seen.emplace(gx, tx);

        const double lo = std::isfinite(box.a)
                              ? 2.0 * box.a - gx - slack
                              : -std::numeric_limits<double>::infinity();
        // Best feasible pair for this x: the smallest admissible G(y).
        for (auto it = seen.lower_bound(lo); it != seen.end(); ++it) {
            const double s = 0.5 * (it->first + gx);
            if (s > box.b) break;
            if (s >= box.a) {
                out.term3_pairs = std::max(out.term3_pairs, 0.5 * (gx - it->first));
                break;
            }
        }
        // All near-optimal feasible pairs for this x.
        const double hi = gx - 2.0 * threshold + slack;
        for (auto it = seen.lower_bound(lo); it != seen.end() && it->first <= hi; ++it) {
            const double s = 0.5 * (it->first + gx);
            if (s < box.a || s > box.b) continue;
            if (0.5 * (gx - it->first) >= threshold)
                out.sets.t3.emplace_back(it->second, tx);
        }
    }
    std::sort(out.sets.t3.begin(), out.sets.t3.end());
    return out;
}

} // namespace detail

MonotoneBoxResult best_monotone_box(const GridFunction& g, const BoxBounds& box) {
    const Pw pg = Pw::from(g);
    const Pw mid = pw_combine(pg.suffix_sup(), 0.5, pg.prefix_inf(), 0.5);
    const Pw clamped = mid.clamp(box.a, box.b);
    const double dist = pw_sub(pg, clamped).sup_abs();
    GridFunction approx = g.interp() == Interp::Linear ? clamped.to_linear_grid()
                                                       : clamped.to_stepleft_grid();
    return MonotoneBoxResult{std::move(approx), dist};
}

Rep1Report rep1_expressions(const GridFunction& g, const BoxBounds& box, double tol) {
    if (g.interp() != Interp::Linear)
        throw InvalidInput("rep1_expressions: continuous (Linear) input required");
    if (!(tol > 0.0)) throw InvalidInput("rep1_expressions: tol must be positive");

    const auto core = detail::monotone_core(Pw::from(g), box);
    auto ex = detail::extract_sets(core, box, tol);

    const double neg_inf = -std::numeric_limits<double>::infinity();
    double env = std::max({ex.term1, ex.term2, ex.term3_env});
    double pairs = std::max({ex.term1, ex.term2, ex.term3_pairs});
    if (env == neg_inf || pairs == neg_inf)
        throw DegenerateCase("rep1_expressions: every feasible set is empty");
    return Rep1Report{core.distance, env, pairs, std::move(ex.sets)};
}

} // namespace trimdist
