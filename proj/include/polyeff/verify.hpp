#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyeff/isoperimetric.hpp"
#include "polyeff/metrics.hpp"
#include "polyeff/regular_geometry.hpp"

namespace polyeff {

// Integer n grid spaced geometrically over [n_min, n_max], endpoints always
// present, duplicates from rounding collapsed. Ratio tops out at 1.15 so long
// ranges stay densely sampled; min_points keeps short ranges honest.
inline std::vector<std::int64_t> geometric_grid(std::int64_t n_min, std::int64_t n_max,
                                                std::size_t min_points = 50) {
    require_side_count(n_min);
    require_side_count(n_max);
    if (n_min > n_max) throw std::domain_error("grid needs n_min <= n_max");
    if (min_points < 2) throw std::domain_error("grid needs at least 2 points");
    if (n_min == n_max) return {n_min};

    const double span = std::log(static_cast<double>(n_max) / static_cast<double>(n_min));
    const std::size_t from_ratio = static_cast<std::size_t>(std::ceil(span / std::log(1.15))) + 1;
    const std::size_t count = std::max(min_points, from_ratio);

    std::vector<std::int64_t> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        const auto n = static_cast<std::int64_t>(std::llround(n_min * std::exp(span * t)));
        const std::int64_t clamped = std::min(std::max(n, n_min), n_max);
        if (grid.empty() || clamped > grid.back()) grid.push_back(clamped);
    }
    if (grid.back() != n_max) grid.push_back(n_max);
    return grid;
}

struct SweepStep {
    enum class Kind { kLinear, kGeometric };

    Kind kind = Kind::kLinear;
    std::int64_t stride = 1;
    double ratio = 2.0;

    static SweepStep linear(std::int64_t stride) {
        if (stride < 1) throw std::domain_error("linear stride must be >= 1");
        SweepStep s;
        s.kind = Kind::kLinear;
        s.stride = stride;
        return s;
    }

    static SweepStep geometric(double ratio) {
        if (!std::isfinite(ratio) || ratio <= 1.0) {
            throw std::domain_error("geometric ratio must be finite and > 1");
        }
        SweepStep s;
        s.kind = Kind::kGeometric;
        s.ratio = ratio;
        return s;
    }
};

struct SweepRow {
    std::int64_t n;
    double p;
    std::array<double, kMetricCount> metrics;  // registry order
    double polygon_area;
    double wasted_exact;
    double wasted_asymptotic;
    double bound_value;
};

// One row per n. Geometric stepping multiplies then rounds to the nearest
// integer, advancing by at least 1 so ratios near 1 cannot stall; n_max is
// always emitted as the final row.
inline std::vector<SweepRow> sweep(std::int64_t n_min, std::int64_t n_max, SweepStep step,
                                   double p, SlopeParam slope = SlopeParam()) {
    require_side_count(n_min);
    require_side_count(n_max);
    if (n_min >= n_max) throw std::domain_error("sweep needs n_min < n_max");
    require_positive_finite(p, "perimeter");

    std::vector<std::int64_t> ns;
    if (step.kind == SweepStep::Kind::kLinear) {
        for (std::int64_t n = n_min; n <= n_max; n += step.stride) ns.push_back(n);
    } else {
        for (std::int64_t n = n_min; n <= n_max;) {
            ns.push_back(n);
            const auto next = static_cast<std::int64_t>(
                std::llround(static_cast<double>(n) * step.ratio));
            n = std::max(next, n + 1);
        }
    }
    if (ns.back() != n_max) ns.push_back(n_max);

    std::vector<SweepRow> rows;
    rows.reserve(ns.size());
    for (std::int64_t n : ns) {
        SweepRow row{};
        row.n = n;
        row.p = p;
        const std::vector<MetricValue> values = evaluate_all(n, p, slope);
        for (int i = 0; i < kMetricCount; ++i) row.metrics[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(i)].value;
        row.polygon_area = area_apothem(RegularPolygonSpec(n, p));
        row.wasted_exact = wasted_area(n, p);
        row.wasted_asymptotic = wasted_area_asymptotic(n, p);
        row.bound_value = wasted_area_bound(n, p).value;
        rows.push_back(row);
    }
    return rows;
}

struct ConvergenceFit {
    double slope;
    double intercept;  // of log(value) against log(n)
    double r_squared;
    std::int64_t n_min;
    std::int64_t n_max;

    bool conclusive() const { return r_squared >= 0.999; }
};

// Least-squares power-law fit in log-log space. The series must be positive
// (log of the value is taken), at least 4 points long and strictly increasing
// in n; violations name the offending index.
inline ConvergenceFit fit_convergence_order(
    const std::vector<std::pair<std::int64_t, double>>& series) {
    if (series.size() < 4) {
        throw std::domain_error("fit needs at least 4 points, got " +
                                std::to_string(series.size()));
    }
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i > 0 && series[i].first <= series[i - 1].first) {
            throw std::domain_error("fit needs strictly increasing n, violated at index " +
                                    std::to_string(i));
        }
        if (!(series[i].second > 0.0) || !std::isfinite(series[i].second)) {
            throw std::domain_error("fit needs positive finite values, violated at index " +
                                    std::to_string(i));
        }
    }

    const auto count = static_cast<double>(series.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [n, v] : series) {
        mean_x += std::log(static_cast<double>(n));
        mean_y += std::log(v);
    }
    mean_x /= count;
    mean_y /= count;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [n, v] : series) {
        const double dx = std::log(static_cast<double>(n)) - mean_x;
        const double dy = std::log(v) - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    double ss_res = 0.0;
    for (const auto& [n, v] : series) {
        const double r = std::log(v) - (intercept + slope * std::log(static_cast<double>(n)));
        ss_res += r * r;
    }
    const double r2 = syy > 0.0 ? 1.0 - ss_res / syy : (ss_res == 0.0 ? 1.0 : 0.0);
    return ConvergenceFit{slope, intercept, r2, series.front().first, series.back().first};
}

using SeriesFn = std::function<double(std::int64_t)>;

enum class ObservedDirection { kUpper, kLower, kCrossing };

inline const char* to_string(ObservedDirection d) {
    switch (d) {
        case ObservedDirection::kUpper: return "upper";
        case ObservedDirection::kLower: return "lower";
        default: return "crossing";
    }
}

struct BoundClassification {
    BoundDirection claimed;
    ObservedDirection observed;
    std::optional<std::int64_t> first_violation_n;  // first grid n where the claim fails
    double max_gap;                                 // max |bound - target| on the grid
    std::int64_t n_min;
    std::int64_t n_max;
};

// Samples bound against target on the geometric grid and reports which side
// the bound actually sits on. "crossing" means the sign of (bound - target)
// changes inside the range; a denser grid can only keep or expose a crossing,
// never hide one that sampled points already witnessed.
inline BoundClassification classify_bound(const SeriesFn& target, const SeriesFn& bound,
                                          std::int64_t n_min, std::int64_t n_max,
                                          BoundDirection claimed, std::size_t min_points = 50) {
    const std::vector<std::int64_t> grid = geometric_grid(n_min, n_max, min_points);

    bool above = false, below = false;
    std::optional<std::int64_t> first_violation;
    double max_gap = 0.0;
    for (std::int64_t n : grid) {
        const double diff = bound(n) - target(n);
        max_gap = std::max(max_gap, std::abs(diff));
        if (diff > 0.0) above = true;
        if (diff < 0.0) below = true;
        const bool violated = claimed == BoundDirection::kUpper ? diff < 0.0 : diff > 0.0;
        if (violated && !first_violation) first_violation = n;
    }

    ObservedDirection observed;
    if (above && below) {
        observed = ObservedDirection::kCrossing;
    } else if (below) {
        observed = ObservedDirection::kLower;
    } else if (above) {
        observed = ObservedDirection::kUpper;
    } else {
        // bound == target at every sample; consistent with the claim
        observed = claimed == BoundDirection::kUpper ? ObservedDirection::kUpper
                                                     : ObservedDirection::kLower;
    }
    return BoundClassification{claimed, observed, first_violation, max_gap, n_min, n_max};
}

enum class Direction { kIncreasing, kDecreasing };

struct MonotoneCheck {
    bool passed;
    std::optional<std::int64_t> counterexample_n;  // first n with v(n+1) on the wrong side
};

// Strict monotonicity. Ranges spanning up to 1e5 are checked pair by pair;
// beyond that, geometric samples are checked against both the next sample and
// their immediate neighbour, catching local and global reversals.
inline MonotoneCheck check_monotone(const SeriesFn& series, std::int64_t n_min,
                                    std::int64_t n_max, Direction direction) {
    require_side_count(n_min);
    require_side_count(n_max);
    if (n_min >= n_max) throw std::domain_error("monotone check needs n_min < n_max");

    const auto ordered = [&](double lo_value, double hi_value) {
        return direction == Direction::kIncreasing ? hi_value > lo_value : hi_value < lo_value;
    };

    if (n_max - n_min <= 100000) {
        double prev = series(n_min);
        for (std::int64_t n = n_min + 1; n <= n_max; ++n) {
            const double cur = series(n);
            if (!ordered(prev, cur)) return MonotoneCheck{false, n - 1};
            prev = cur;
        }
        return MonotoneCheck{true, std::nullopt};
    }

    const std::vector<std::int64_t> grid = geometric_grid(n_min, n_max);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::int64_t n = grid[i];
        if (n < n_max && !ordered(series(n), series(n + 1))) return MonotoneCheck{false, n};
        if (i + 1 < grid.size() && !ordered(series(n), series(grid[i + 1]))) {
            return MonotoneCheck{false, n};
        }
    }
    return MonotoneCheck{true, std::nullopt};
}

struct IdentityResult {
    std::string name;
    double max_relative_deviation;
    double threshold;
    bool passed;
};

// Cross-checks among quantities that are algebraically equal but computed
// through different expressions. Deviations are measured over a geometric
// grid on [3, 1e4]; anything past 1e-11 relative means a formula went wrong,
// not that rounding piled up.
inline std::vector<IdentityResult> identity_audit(double p) {
    require_positive_finite(p, "perimeter");
    constexpr double kThreshold = 1e-11;
    const std::vector<std::int64_t> grid = geometric_grid(3, 10000);

    const auto rel_dev = [](double a, double b) {
        return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
    };

    double d_area = 0.0, d_fill = 0.0, d_pack = 0.0, d_half = 0.0, d_slope = 0.0;
    for (std::int64_t n : grid) {
        const RegularPolygonSpec spec(n, p);
        d_area = std::max(d_area, rel_dev(area_apothem(spec), area_circumradius(spec)));
        d_fill = std::max(d_fill, rel_dev(sector_fill(n), chord_arc(n) * smoothness(n)));
        d_pack = std::max(d_pack,
                          rel_dev(angle_triangle_packing(n), area_apothem(spec) / circle_area(p)));
        if (2 * n <= kMaxSides) {
            d_half = std::max(d_half, rel_dev(half_angle_tangent(n), angle_triangle_packing(2 * n)));
        }
        const double a = derive(spec).apothem;
        for (const double m : {0.0, 1.0, std::tan(kPi / static_cast<double>(n))}) {
            const SlopeParam slope(m);
            d_slope = std::max(d_slope, rel_dev(perimeter_slope_efficiency(p, a, slope),
                                                slant_angle_index(p, a, slope)));
        }
    }

    const auto result = [&](const char* name, double dev) {
        return IdentityResult{name, dev, kThreshold, dev <= kThreshold};
    };
    return {
        result("area_formulas_agree", d_area),
        result("sector_fill_is_chord_arc_times_smoothness", d_fill),
        result("packing_is_area_over_circle", d_pack),
        result("half_angle_tangent_is_packing_of_2n", d_half),
        result("slope_metrics_alias", d_slope),
    };
}

}  // namespace polyeff
