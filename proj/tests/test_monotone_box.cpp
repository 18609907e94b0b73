#include "trimdist/monotone_box.hpp"

#include "test_support.hpp"
#include "trimdist/errors.hpp"
#include "trimdist/lipschitz_box.hpp"

#include <doctest.h>

#include <cmath>

using namespace trimdist;
using test_support::Rng;

namespace {

GridFunction random_nonincreasing_in_box(Rng& rng, std::size_t m, double a, double b) {
    std::vector<double> t = test_support::random_nodes(rng, m);
    std::vector<double> v(m);
    double x = rng.uniform(0.5 * (a + b), b);
    for (std::size_t i = 0; i < m; ++i) {
        v[i] = x;
        x -= rng.uniform() * (x - a) * 0.3;
    }
    return GridFunction(std::move(t), std::move(v), Interp::Linear);
}

} // namespace

TEST_CASE("best_monotone_box leaves a feasible g unchanged") {
    Rng rng(5150);
    const BoxBounds box(-0.5, 0.75);
    const GridFunction g = random_nonincreasing_in_box(rng, 15, box.a, box.b);
    const auto r = best_monotone_box(g, box);
    CHECK(r.distance == test_support::AbsApprox(0.0, 1e-15));
    CHECK(sup_norm_distance(r.approximant, g) < 1e-14);
}

TEST_CASE("best_monotone_box of the identity with an unbounded box") {
    const auto r = best_monotone_box(GridFunction::identity(), BoxBounds::unbounded());
    CHECK(r.distance == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(sup_norm_distance(r.approximant, GridFunction::constant(0.5)) < 1e-14);
}

TEST_CASE("best_monotone_box matches the bisection feasibility oracle") {
    Rng rng(31337);
    for (int rep = 0; rep < 25; ++rep) {
        const GridFunction g =
            test_support::random_general(rng, rng.uniform_int(10, 60), Interp::Linear,
                                         -0.6, 0.6);
        const BoxBounds box(-0.3, 0.2);
        const auto r = best_monotone_box(g, box);
        const double oracle = test_support::monotone_box_oracle_linear(g, box.a, box.b);
        CHECK(r.distance == test_support::AbsApprox(oracle, 1e-10));
    }
    // unbounded boxes reduce to plain monotone approximation
    for (int rep = 0; rep < 10; ++rep) {
        const GridFunction g =
            test_support::random_general(rng, 30, Interp::Linear, -1.0, 1.0);
        const auto r = best_monotone_box(g, BoxBounds::unbounded());
        const double oracle = test_support::monotone_box_oracle_linear(
            g, -std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity());
        CHECK(r.distance == test_support::AbsApprox(oracle, 1e-10));
    }
}

TEST_CASE("value-level DP sandwich bound") {
    Rng rng(8080);
    for (int rep = 0; rep < 5; ++rep) {
        const GridFunction g =
            test_support::random_general(rng, 25, Interp::Linear, -0.6, 0.6);
        const BoxBounds box(-0.3, 0.2);
        const auto r = best_monotone_box(g, box);
        const std::size_t cells = 2000, levels = 1500;
        const double dp = test_support::monotone_box_dp(g, box.a, box.b, cells, levels);
        // steps on a grid cannot beat the continuum optimum
        CHECK(dp >= r.distance - 1e-9);
        double max_slope = 0.0;
        for (std::size_t i = 0; i + 1 < g.nodes().size(); ++i)
            max_slope = std::max(max_slope,
                                 std::fabs(g.values()[i + 1] - g.values()[i]) /
                                     (g.nodes()[i + 1] - g.nodes()[i]));
        const double quant = (g.max_value() - g.min_value()) / (levels - 1);
        CHECK(dp <= r.distance + quant + max_slope / cells + 1e-9);
    }
}

TEST_CASE("optimality against random feasible competitors") {
    Rng rng(424242);
    for (int rep = 0; rep < 20; ++rep) {
        const GridFunction g =
            test_support::random_general(rng, 40, Interp::Linear, -1.0, 1.0);
        const BoxBounds box(-0.4, 0.55);
        const auto r = best_monotone_box(g, box);
        for (int k = 0; k < 50; ++k) {
            const GridFunction h = random_nonincreasing_in_box(rng, 20, box.a, box.b);
            CHECK(sup_norm_distance(g, h) >= r.distance - 1e-12);
        }
    }
}

TEST_CASE("rep1 expressions: trivial cases") {
    Rng rng(77);
    const BoxBounds box(-0.5, 0.75);
    const GridFunction feasible = random_nonincreasing_in_box(rng, 12, box.a, box.b);
    const auto rep = rep1_expressions(feasible, box);
    CHECK(rep.distance == test_support::AbsApprox(0.0, 1e-15));
    CHECK(rep.expr_envelope == test_support::AbsApprox(0.0, 1e-14));
    CHECK(rep.expr_pairs == test_support::AbsApprox(0.0, 1e-14));

    // g(t) = t with an unbounded box: both region terms are empty and the
    // pair term reaches 1/2 at the endpoints.
    const auto rep2 = rep1_expressions(GridFunction::identity(), BoxBounds::unbounded());
    CHECK(rep2.sets.t1.empty());
    CHECK(rep2.sets.t2.empty());
    CHECK(rep2.expr_pairs == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(rep2.expr_envelope == doctest::Approx(0.5).epsilon(1e-14));
    REQUIRE(!rep2.sets.t3.empty());
    CHECK(rep2.sets.t3.front().first == 0.0);
    CHECK(rep2.sets.t3.front().second == 1.0);

    CHECK_THROWS_AS(
        rep1_expressions(GridFunction({0.0, 1.0}, {0.0, 1.0}, Interp::StepLeft), box),
        InvalidInput);
}

TEST_CASE("rep1 expressions agree with each other and the distance") {
    Rng rng(60601);
    for (int rep = 0; rep < 40; ++rep) {
        const GridFunction g =
            test_support::random_general(rng, rng.uniform_int(8, 80), Interp::Linear,
                                         -0.8, 0.8);
        const bool bounded = rep % 3 != 0;
        const BoxBounds box = bounded ? BoxBounds(rng.uniform(-0.6, -0.1),
                                                  rng.uniform(0.0, 0.6))
                                      : BoxBounds::unbounded();
        const auto r = rep1_expressions(g, box);
        CHECK(r.expr_envelope == test_support::AbsApprox(r.expr_pairs, 1e-10));
        CHECK(r.expr_envelope == test_support::AbsApprox(r.distance, 1e-10));
    }
}

TEST_CASE("reported optimizers have the local-extremum structure") {
    Rng rng(13131);
    int found_t3 = 0;
    for (int rep = 0; rep < 30; ++rep) {
        const GridFunction g =
            test_support::random_general(rng, 30, Interp::Linear, -0.8, 0.8);
        const BoxBounds box(-0.35, 0.3);
        const auto r = rep1_expressions(g, box, 1e-9);
        const double eps = 1e-7;
        auto local_max = [&](double t) {
            const double v = g(t);
            const double l = t > eps ? g(t - eps) : v;
            const double rr = t < 1.0 - eps ? g(t + eps) : v;
            return v >= l - 1e-12 && v >= rr - 1e-12;
        };
        auto local_min = [&](double t) {
            const double v = g(t);
            const double l = t > eps ? g(t - eps) : v;
            const double rr = t < 1.0 - eps ? g(t + eps) : v;
            return v <= l + 1e-12 && v <= rr + 1e-12;
        };
        for (double t : r.sets.t1) CHECK(local_max(t));
        for (double t : r.sets.t2) CHECK(local_min(t));
        for (const auto& [y, x] : r.sets.t3) {
            CHECK(y <= x);
            CHECK(local_min(y));
            CHECK(local_max(x));
            ++found_t3;
        }
    }
    CHECK(found_t3 > 0);
}

TEST_CASE("reduction consistency with the pinned Lipschitz problem") {
    Rng rng(271828);
    for (int rep = 0; rep < 20; ++rep) {
        const GridFunction f = test_support::random_nondecreasing(rng, 25, Interp::Linear);
        const double lip = rng.uniform(1.0, 3.0);
        const GridFunction g = linear_combination(f, 1.0, GridFunction::identity(), -lip);
        const auto mono = best_monotone_box(g, BoxBounds(1.0 - lip, 0.0));
        const auto box = best_lipschitz_box(f, lip);
        CHECK(mono.distance == test_support::AbsApprox(box.distance, 1e-12));
        const GridFunction lifted =
            linear_combination(mono.approximant, 1.0, GridFunction::identity(), lip);
        CHECK(sup_norm_distance(lifted, box.approximant) < 1e-12);
    }
}
