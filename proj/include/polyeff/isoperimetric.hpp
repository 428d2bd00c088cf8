#pragma once

#include <cstdint>

#include "polyeff/math_util.hpp"
#include "polyeff/regular_geometry.hpp"

namespace polyeff {

enum class BoundDirection { kLower, kUpper };

inline const char* to_string(BoundDirection d) {
    return d == BoundDirection::kLower ? "lower" : "upper";
}

// Area of the circle with circumference p.
inline double circle_area(double p) {
    require_positive_finite(p, "perimeter");
    return p * p / (4.0 * kPi);
}

// Area given up by the regular n-gon relative to the circle of the same
// perimeter: (p^2/4) (1/pi - 1/(n tan(pi/n))). Positive for every finite n.
// Evaluated as (p^2 / 4 pi) (tan x - x) / tan x with x = pi/n, which is the
// same quantity but keeps full relative precision; the difference form has a
// fixed absolute noise floor that swamps the value's gap over the comparison
// bound beyond n ~ 1e4.
inline double wasted_area(std::int64_t n, double p) {
    require_side_count(n);
    require_positive_finite(p, "perimeter");
    const double x = kPi / static_cast<double>(n);
    return 0.25 * p * p / kPi * (tan_minus_arg(x) / std::tan(x));
}

// Leading term of the wasted area for large n: pi p^2 / (12 n^2).
inline double wasted_area_asymptotic(std::int64_t n, double p) {
    require_side_count(n);
    require_positive_finite(p, "perimeter");
    const double nd = static_cast<double>(n);
    return kPi * p * p / (12.0 * nd * nd);
}

struct BoundValue {
    double value;
    BoundDirection direction;
};

// Closed-form comparison value pi p^2 / (4 (3 n^2 + pi^2)). Despite being
// quoted as an upper bound in the source section it sits BELOW the exact
// wasted area for every n >= 3, so the direction tag says lower; the verify
// layer re-derives this empirically.
inline BoundValue wasted_area_bound(std::int64_t n, double p) {
    require_side_count(n);
    require_positive_finite(p, "perimeter");
    const double nd = static_cast<double>(n);
    return BoundValue{kPi * p * p / (4.0 * (3.0 * nd * nd + kPi * kPi)), BoundDirection::kLower};
}

// n tan(pi/n) - pi. Strictly positive and strictly decreasing in n; the
// margin by which polygon perimeter-for-area loses to the circle. Written
// as pi (tan x - x) / x, x = pi/n, to keep relative precision at large n.
inline double elementary_inequality_margin(std::int64_t n) {
    require_side_count(n);
    const double x = kPi / static_cast<double>(n);
    return kPi * tan_minus_arg(x) / x;
}

struct WastedAreaReport {
    std::int64_t n;
    double p;
    double circle_area;
    double polygon_area;
    double wasted_exact;
    double wasted_asymptotic;
    double bound_value;
    BoundDirection bound_direction;
};

inline WastedAreaReport wasted_report(std::int64_t n, double p) {
    const RegularPolygonSpec spec(n, p);
    const BoundValue bound = wasted_area_bound(n, p);
    return WastedAreaReport{
        n,
        p,
        circle_area(p),
        area_apothem(spec),
        wasted_area(n, p),
        wasted_area_asymptotic(n, p),
        bound.value,
        bound.direction,
    };
}

}  // namespace polyeff
