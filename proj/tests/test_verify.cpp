#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polyeff/verify.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace polyeff;

TEST_CASE("geometric grid covers the range with bounded ratio") {
    const std::vector<std::int64_t> grid = geometric_grid(3, 1000000);
    REQUIRE(grid.front() == 3);
    REQUIRE(grid.back() == 1000000);
    REQUIRE(grid.size() >= 50);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        REQUIRE(grid[i] > grid[i - 1]);
        if (grid[i - 1] >= 100) {
            REQUIRE(static_cast<double>(grid[i]) / static_cast<double>(grid[i - 1]) <= 1.16);
        }
    }

    // 200 requested points dedup to fewer after integer rounding at the
    // small-n end, but never more, and the endpoints survive
    const std::vector<std::int64_t> wide = geometric_grid(3, 1000000, 200);
    REQUIRE(wide.size() >= 180);
    REQUIRE(wide.size() <= 200);
    REQUIRE(wide.front() == 3);
    REQUIRE(wide.back() == 1000000);

    const std::vector<std::int64_t> dense = geometric_grid(3, 10);
    REQUIRE(dense == std::vector<std::int64_t>{3, 4, 5, 6, 7, 8, 9, 10});

    REQUIRE(geometric_grid(5, 5) == std::vector<std::int64_t>{5});

    REQUIRE_THROWS_AS(geometric_grid(10, 3), std::domain_error);
    REQUIRE_THROWS_AS(geometric_grid(2, 10), std::domain_error);
    REQUIRE_THROWS_AS(geometric_grid(3, 10, 1), std::domain_error);
}

TEST_CASE("sweep emits one row per step and always lands on n_max") {
    const std::vector<SweepRow> rows = sweep(3, 6, SweepStep::linear(1), 4.0);
    REQUIRE(rows.size() == 4);
    REQUIRE(rows[1].n == 4);
    REQUIRE(rows[1].p == 4.0);
    REQUIRE_THAT(rows[1].polygon_area, WithinRel(1.0, 1e-14));
    REQUIRE_THAT(rows[1].wasted_exact, WithinRel(0.2732395447351627, 1e-13));
    REQUIRE_THAT(rows[1].metrics[static_cast<std::size_t>(MetricId::kAngleTrianglePacking)],
                 WithinRel(0.7853981633974483, 1e-14));
    REQUIRE(rows[1].metrics[static_cast<std::size_t>(MetricId::kSmoothness)] == smoothness(4));
    REQUIRE(rows[1].bound_value == wasted_area_bound(4, 4.0).value);

    REQUIRE(sweep(3, 12, SweepStep::linear(1), 1.0).size() == 10);

    const std::vector<SweepRow> geo = sweep(4, 4096, SweepStep::geometric(2.0), 1.0);
    REQUIRE(geo.size() == 11);
    for (std::size_t i = 0; i < geo.size(); ++i) {
        REQUIRE(geo[i].n == (std::int64_t{4} << i));
    }

    const std::vector<SweepRow> strided = sweep(5, 9, SweepStep::linear(3), 1.0);
    REQUIRE(strided.size() == 3);
    REQUIRE(strided[0].n == 5);
    REQUIRE(strided[1].n == 8);
    REQUIRE(strided[2].n == 9);

    // a ratio barely above 1 must still advance one step at a time
    const std::vector<SweepRow> crawl = sweep(3, 10, SweepStep::geometric(1.01), 1.0);
    REQUIRE(crawl.size() == 8);

    REQUIRE_THROWS_AS(sweep(6, 6, SweepStep::linear(1), 1.0), std::domain_error);
    REQUIRE_THROWS_AS(sweep(6, 3, SweepStep::linear(1), 1.0), std::domain_error);
    REQUIRE_THROWS_AS(sweep(3, 6, SweepStep::linear(1), 0.0), std::domain_error);
    REQUIRE_THROWS_AS(SweepStep::linear(0), std::domain_error);
    REQUIRE_THROWS_AS(SweepStep::geometric(1.0), std::domain_error);
    REQUIRE_THROWS_AS(SweepStep::geometric(0.5), std::domain_error);
}

TEST_CASE("convergence fit recovers exact power laws") {
    std::vector<std::pair<std::int64_t, double>> quad;
    std::vector<std::pair<std::int64_t, double>> growth;
    for (std::int64_t n = 10; n <= 10240; n *= 2) {
        quad.emplace_back(n, 5.5 / (static_cast<double>(n) * static_cast<double>(n)));
        growth.emplace_back(n, 7.0 * std::pow(static_cast<double>(n), 1.5));
    }
    const ConvergenceFit f1 = fit_convergence_order(quad);
    REQUIRE_THAT(f1.slope, WithinAbs(-2.0, 1e-12));
    REQUIRE_THAT(f1.r_squared, WithinAbs(1.0, 1e-12));
    REQUIRE(f1.conclusive());
    REQUIRE_THAT(std::exp(f1.intercept), WithinRel(5.5, 1e-10));
    REQUIRE(f1.n_min == 10);
    REQUIRE(f1.n_max == 10240);

    const ConvergenceFit f2 = fit_convergence_order(growth);
    REQUIRE_THAT(f2.slope, WithinAbs(1.5, 1e-12));
    REQUIRE(f2.conclusive());
}

TEST_CASE("convergence fit pins the wasted-area decay") {
    std::vector<std::pair<std::int64_t, double>> series;
    for (std::int64_t n = 64; n <= 4096; n *= 2) {
        series.emplace_back(n, wasted_area(n, 1.0));
    }
    const ConvergenceFit fit = fit_convergence_order(series);
    REQUIRE_THAT(fit.slope, WithinAbs(-2.0, 0.005));
    REQUIRE(fit.conclusive());
    REQUIRE_THAT(std::exp(fit.intercept), WithinRel(kPi / 12.0, 0.01));
}

TEST_CASE("convergence fit rejects malformed series") {
    std::vector<std::pair<std::int64_t, double>> three = {{3, 1.0}, {4, 0.5}, {5, 0.25}};
    REQUIRE_THROWS_WITH(fit_convergence_order(three),
                        ContainsSubstring("at least 4 points"));

    std::vector<std::pair<std::int64_t, double>> unordered = {
        {3, 1.0}, {5, 0.5}, {5, 0.25}, {9, 0.125}};
    REQUIRE_THROWS_WITH(fit_convergence_order(unordered),
                        ContainsSubstring("violated at index 2"));

    std::vector<std::pair<std::int64_t, double>> negative = {
        {3, 1.0}, {5, 0.5}, {7, -0.25}, {9, 0.125}};
    REQUIRE_THROWS_WITH(fit_convergence_order(negative),
                        ContainsSubstring("violated at index 2"));
}

TEST_CASE("bound classification adjudicates claims against samples") {
    const SeriesFn wasted = [](std::int64_t n) { return wasted_area(n, 1.0); };
    const SeriesFn bound = [](std::int64_t n) { return wasted_area_bound(n, 1.0).value; };

    const BoundClassification as_upper =
        classify_bound(wasted, bound, 3, 1000000, BoundDirection::kUpper);
    REQUIRE(as_upper.claimed == BoundDirection::kUpper);
    REQUIRE(as_upper.observed == ObservedDirection::kLower);
    REQUIRE(as_upper.first_violation_n.has_value());
    REQUIRE(*as_upper.first_violation_n == 3);
    REQUIRE_THAT(as_upper.max_gap,
                 WithinRel(wasted_area(3, 1.0) - wasted_area_bound(3, 1.0).value, 1e-12));

    const BoundClassification as_lower =
        classify_bound(wasted, bound, 3, 1000000, BoundDirection::kLower);
    REQUIRE(as_lower.observed == ObservedDirection::kLower);
    REQUIRE(!as_lower.first_violation_n.has_value());

    const SeriesFn area = [](std::int64_t n) {
        return area_apothem(RegularPolygonSpec(n, 1.0));
    };
    const SeriesFn circle = [](std::int64_t) { return circle_area(1.0); };
    const BoundClassification circle_above =
        classify_bound(area, circle, 3, 1000000, BoundDirection::kUpper);
    REQUIRE(circle_above.observed == ObservedDirection::kUpper);
    REQUIRE(!circle_above.first_violation_n.has_value());

    // a synthetic crossing is reported as such regardless of grid density
    const SeriesFn parabola = [](std::int64_t n) {
        return static_cast<double>(n) * static_cast<double>(n);
    };
    const SeriesFn line = [](std::int64_t n) { return 1000.0 * static_cast<double>(n); };
    const BoundClassification crossing =
        classify_bound(parabola, line, 3, 1000000, BoundDirection::kUpper);
    REQUIRE(crossing.observed == ObservedDirection::kCrossing);
    REQUIRE(crossing.first_violation_n.has_value());
    REQUIRE(*crossing.first_violation_n > 1000);
    const BoundClassification denser =
        classify_bound(parabola, line, 3, 1000000, BoundDirection::kUpper, 300);
    REQUIRE(denser.observed == ObservedDirection::kCrossing);

    // a bound equal to its target at every sample is consistent with either claim
    const BoundClassification equal =
        classify_bound(line, line, 3, 1000, BoundDirection::kLower);
    REQUIRE(equal.observed == ObservedDirection::kLower);
    REQUIRE(equal.max_gap == 0.0);
}

TEST_CASE("monotone checks walk exhaustively or by grid") {
    const MonotoneCheck smooth =
        check_monotone([](std::int64_t n) { return smoothness(n); }, 3, 1000,
                       Direction::kIncreasing);
    REQUIRE(smooth.passed);
    REQUIRE(!smooth.counterexample_n.has_value());

    const MonotoneCheck wasted =
        check_monotone([](std::int64_t n) { return wasted_area(n, 1.0); }, 3, 2000,
                       Direction::kDecreasing);
    REQUIRE(wasted.passed);

    const MonotoneCheck tan_margin = check_monotone(
        [](std::int64_t n) {
            return static_cast<double>(n) * std::tan(kPi / static_cast<double>(n));
        },
        3, 10000, Direction::kDecreasing);
    REQUIRE(tan_margin.passed);

    // angle_area decreases, so claiming increase fails at the very first pair
    const MonotoneCheck wrong =
        check_monotone([](std::int64_t n) { return angle_area_unbounded(n); }, 3, 10000,
                       Direction::kIncreasing);
    REQUIRE(!wrong.passed);
    REQUIRE(wrong.counterexample_n.has_value());
    REQUIRE(*wrong.counterexample_n == 3);

    // spans beyond 1e5 switch to the sampled walk and still catch reversals
    const MonotoneCheck sampled =
        check_monotone([](std::int64_t n) { return side_apothem(n); }, 3, 1000000,
                       Direction::kIncreasing);
    REQUIRE(sampled.passed);

    const MonotoneCheck sampled_wrong =
        check_monotone([](std::int64_t n) { return 1.0 / static_cast<double>(n); }, 3,
                       1000000, Direction::kIncreasing);
    REQUIRE(!sampled_wrong.passed);
    REQUIRE(*sampled_wrong.counterexample_n == 3);

    REQUIRE_THROWS_AS(check_monotone([](std::int64_t n) { return static_cast<double>(n); },
                                     5, 5, Direction::kIncreasing),
                      std::domain_error);
}

TEST_CASE("identity audit passes across perimeter scales") {
    const char* expected_names[] = {
        "area_formulas_agree",
        "sector_fill_is_chord_arc_times_smoothness",
        "packing_is_area_over_circle",
        "half_angle_tangent_is_packing_of_2n",
        "slope_metrics_alias",
    };
    for (double p : {0.1, 1.0, 1000.0}) {
        const std::vector<IdentityResult> results = identity_audit(p);
        REQUIRE(results.size() == 5);
        for (std::size_t i = 0; i < results.size(); ++i) {
            REQUIRE(results[i].name == expected_names[i]);
            REQUIRE(results[i].threshold == 1e-11);
            REQUIRE(results[i].max_relative_deviation <= results[i].threshold);
            REQUIRE(results[i].passed);
        }
    }
    REQUIRE_THROWS_AS(identity_audit(0.0), std::domain_error);
}
