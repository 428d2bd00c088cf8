#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "polyeff/math_util.hpp"
#include "polyeff/regular_geometry.hpp"

namespace polyeff {

// Catalogued efficiency indices, one entry per source section. Order here is
// the canonical output order everywhere (tables, sweeps, JSON records).
enum class MetricId : int {
    kSmoothness = 0,        // cos(pi/n)
    kPerimeterSlope,        // p / hypot(p, 2 a m)
    kSlantAngle,            // 1 / sqrt(1 + D^2), D = 2 a m / p
    kIsoSlope,              // A / ((p/2n)^2 + a^2)
    kIsoSlopeNormalized,    // iso slope / pi
    kApothemAngle,          // E/(1+E), E = 1 / (2 tan(pi/n)(1 - cos(pi/n)))
    kRadialPacking,         // alias of sector fill
    kAngleAreaUnbounded,    // sector fill / (n - 2)
    kSectorFill,            // n sin(2 pi/n) / (2 pi)
    kChordArc,              // n sin(pi/n) / pi
    kApothemHypotenuse,     // sqrt(2) cos(pi/n) / sqrt(1 + cos^2(pi/n))
    kSlantCurvature,        // 2A / (R p sqrt(1 + (2 a m / p)^2))
    kAngleHypotenuse,       // alias of sector fill
    kAngleTrianglePacking,  // pi / (n tan(pi/n))
    kHalfAngleTangent,      // x / tan(x), x = pi/(2n)
    kSideApothem,           // 1 / (1 + tan(pi/n))
};

inline constexpr int kMetricCount = 16;

enum class Monotonicity { kIncreasing, kDecreasing, kNotMonotone, kNotApplicable };

inline const char* to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::kIncreasing: return "increasing";
        case Monotonicity::kDecreasing: return "decreasing";
        case Monotonicity::kNotMonotone: return "not-monotone";
        default: return "n/a";
    }
}

// Slope of the half-side segment against the apothem axis, m >= 0. Kept as a
// distinct type so a bare perimeter can't be passed where a slope belongs.
struct SlopeParam {
    double m = 0.0;

    SlopeParam() = default;
    explicit SlopeParam(double slope) : m(slope) { require_nonnegative_finite(m, "slope m"); }

    // The side-slope convention m = tan(pi/n); callers that want the slope of
    // the actual half-side edge use this instead of picking m by hand.
    static SlopeParam geometric(std::int64_t n) {
        require_side_count(n);
        return SlopeParam(std::tan(kPi / static_cast<double>(n)));
    }
};

struct MetricDescriptor {
    MetricId id;
    const char* name;
    const char* section;       // catalogue label of the defining section
    bool requires_slope;       // value depends on the slope parameter m
    bool bounded01;            // actual range is strictly inside (0,1)
    double limit_at_infinity;  // n -> infinity limit (m = 0 for slope metrics); NaN = diverges
    Monotonicity monotonic_in_n;
    const char* erratum_note;  // where the catalogued claim disagrees with the formula
    MetricId evaluated_as;     // alias-group members share one evaluation
};

struct MetricValue {
    MetricId id;
    std::int64_t n;
    double value;
};

inline double smoothness(std::int64_t n) {
    require_side_count(n);
    return std::cos(kPi / static_cast<double>(n));
}

// E = p / sqrt(p^2 + (2 a m)^2), evaluated through hypot so extreme slopes
// can't overflow the square.
inline double perimeter_slope_efficiency(double p, double apothem, SlopeParam slope) {
    require_positive_finite(p, "perimeter");
    require_positive_finite(apothem, "apothem");
    return p / std::hypot(p, 2.0 * apothem * slope.m);
}

// Same quantity through the normalized form 1 / sqrt(1 + D^2); the registry
// keeps both entries and the verify layer holds them to each other.
inline double slant_angle_index(double p, double apothem, SlopeParam slope) {
    require_positive_finite(p, "perimeter");
    require_positive_finite(apothem, "apothem");
    const double d = 2.0 * apothem * slope.m / p;
    return 1.0 / std::sqrt(1.0 + d * d);
}

// A / ((p/2n)^2 + a^2). Increases with n and tends to pi, not to a finite
// bound below 1 as the catalogue claims; scale-invariant in p.
inline double iso_slope_index(std::int64_t n, double p) {
    const RegularPolygonSpec spec(n, p);
    const DerivedGeometry g = derive(spec);
    const double half_side = 0.5 * g.side;
    return area_apothem(spec) / (half_side * half_side + g.apothem * g.apothem);
}

inline double iso_slope_normalized(std::int64_t n, double p) {
    return iso_slope_index(n, p) / kPi;
}

// Raw index E = 1 / (2 tan(pi/n) (1 - cos(pi/n))) mapped through E/(1+E).
// 1 - cos is evaluated as 2 sin^2(x/2); the raw index grows like n^3/pi^3, so
// once it passes 2^53 (n >= pi * 2^(53/3), about 6.6e5) the sum 1 + E rounds
// back to E and the normalized value is exactly 1.0 in double precision.
inline double apothem_angle_index(std::int64_t n) {
    require_side_count(n);
    const double half = kPi / static_cast<double>(n);
    const double raw = 1.0 / (2.0 * std::tan(half) * one_minus_cos(half));
    return raw / (1.0 + raw);
}

// n sin(2 pi/n) / (2 pi): polygon area as a fraction of the circumscribed
// circle. Shared evaluation for the radial-packing and angle-hypotenuse
// entries, which reduce to the same expression.
inline double sector_fill(std::int64_t n) {
    require_side_count(n);
    const double nd = static_cast<double>(n);
    return nd * std::sin(kTwoPi / nd) / kTwoPi;
}

// sector_fill / (n - 2); the catalogue's unnormalized variant. Decreases to 0,
// not to the claimed limit of 1.
inline double angle_area_unbounded(std::int64_t n) {
    require_side_count(n);
    return sector_fill(n) / static_cast<double>(n - 2);
}

// n sin(pi/n) / pi: perimeter of the inscribed polygon against the circle.
// One entry serves both chord-arc sections, which print the same formula.
inline double chord_arc(std::int64_t n) {
    require_side_count(n);
    const double nd = static_cast<double>(n);
    return nd * std::sin(kPi / nd) / kPi;
}

inline double apothem_hypotenuse(std::int64_t n) {
    require_side_count(n);
    const double c = std::cos(kPi / static_cast<double>(n));
    return std::sqrt(2.0) * c / std::sqrt(1.0 + c * c);
}

// 2A / (R p sqrt(1 + (2 a m / p)^2)). At m = 0 this collapses to a/R, i.e. to
// the smoothness value.
inline double slant_curvature(std::int64_t n, double p, SlopeParam slope) {
    const RegularPolygonSpec spec(n, p);
    const DerivedGeometry g = derive(spec);
    const double d = 2.0 * g.apothem * slope.m / p;
    return 2.0 * area_apothem(spec) / (g.circumradius * p * std::sqrt(1.0 + d * d));
}

// pi / (n tan(pi/n)); identical to the polygon/circle area ratio at equal
// perimeter.
inline double angle_triangle_packing(std::int64_t n) {
    require_side_count(n);
    const double nd = static_cast<double>(n);
    return kPi / (nd * std::tan(kPi / nd));
}

// x / tan(x) at x = pi/(2n). Tends to 1; also equal to
// angle_triangle_packing(2n), which the verify layer checks.
inline double half_angle_tangent(std::int64_t n) {
    require_side_count(n);
    const double x = kPi / (2.0 * static_cast<double>(n));
    return x / std::tan(x);
}

inline double side_apothem(std::int64_t n) {
    require_side_count(n);
    return 1.0 / (1.0 + std::tan(kPi / static_cast<double>(n)));
}

// Six entries carry a non-empty erratum note; each records the spot where the
// catalogued claim and the formula part ways, with the formula winning.
inline const std::array<MetricDescriptor, kMetricCount>& metric_registry() {
    static const std::array<MetricDescriptor, kMetricCount> registry = {{
        {MetricId::kSmoothness, "smoothness", "§4.1", false, true, 1.0,
         Monotonicity::kIncreasing,
         "derivation inverts tan/sin midway; the stated result cos(pi/n) is what the algebra gives",
         MetricId::kSmoothness},
        {MetricId::kPerimeterSlope, "perimeter_slope", "§4.2", true, false, 1.0,
         Monotonicity::kNotApplicable,
         "stated m->infinity limit is infinity; the formula forces 0",
         MetricId::kPerimeterSlope},
        {MetricId::kSlantAngle, "slant_angle", "§4.3", true, false, 1.0,
         Monotonicity::kNotApplicable, "", MetricId::kSlantAngle},
        {MetricId::kIsoSlope, "iso_slope", "§4.4", false, false, kPi,
         Monotonicity::kIncreasing,
         "stated bounded below 1 and decreasing; actually increasing with limit pi",
         MetricId::kIsoSlope},
        {MetricId::kIsoSlopeNormalized, "iso_slope_normalized", "§4.4 (normalized)", false,
         true, 1.0, Monotonicity::kIncreasing, "", MetricId::kIsoSlopeNormalized},
        {MetricId::kApothemAngle, "apothem_angle", "§4.5", false, true, 1.0,
         Monotonicity::kIncreasing,
         "printed normalization is garbled; the raw index is mapped through x/(1+x)",
         MetricId::kApothemAngle},
        {MetricId::kRadialPacking, "radial_packing", "§4.6", false, true, 1.0,
         Monotonicity::kIncreasing, "", MetricId::kSectorFill},
        {MetricId::kAngleAreaUnbounded, "angle_area_unbounded", "§4.7", false, false, 0.0,
         Monotonicity::kDecreasing,
         "stated limit 1; true limit 0; kept as the unnormalized variant",
         MetricId::kAngleAreaUnbounded},
        {MetricId::kSectorFill, "sector_fill", "§4.7", false, true, 1.0,
         Monotonicity::kIncreasing, "", MetricId::kSectorFill},
        {MetricId::kChordArc, "chord_arc", "§4.7/§4.13", false, true, 1.0,
         Monotonicity::kIncreasing, "", MetricId::kChordArc},
        {MetricId::kApothemHypotenuse, "apothem_hypotenuse", "§4.8", false, true, 1.0,
         Monotonicity::kIncreasing, "", MetricId::kApothemHypotenuse},
        {MetricId::kSlantCurvature, "slant_curvature", "§4.9", true, true, 1.0,
         Monotonicity::kIncreasing, "", MetricId::kSlantCurvature},
        {MetricId::kAngleHypotenuse, "angle_hypotenuse", "§4.10", false, true, 1.0,
         Monotonicity::kIncreasing, "", MetricId::kSectorFill},
        {MetricId::kAngleTrianglePacking, "angle_triangle_packing", "§4.11", false, true, 1.0,
         Monotonicity::kIncreasing, "", MetricId::kAngleTrianglePacking},
        {MetricId::kHalfAngleTangent, "half_angle_tangent", "§4.12 (i)", false, true, 1.0,
         Monotonicity::kIncreasing,
         "stated limit infinity; the formula forces 1",
         MetricId::kHalfAngleTangent},
        {MetricId::kSideApothem, "side_apothem", "§4.12 (ii)", false, true, 1.0,
         Monotonicity::kIncreasing, "", MetricId::kSideApothem},
    }};
    return registry;
}

inline const MetricDescriptor& descriptor(MetricId id) {
    return metric_registry()[static_cast<std::size_t>(id)];
}

inline const char* metric_name(MetricId id) { return descriptor(id).name; }

// All sixteen values at (n, p, m), in registry order. Alias-group members are
// evaluated once and fanned out, so radial_packing, sector_fill and
// angle_hypotenuse compare bit-identical. The slope metrics default to m = 0
// (edge viewed flat), at which both slope entries are exactly 1.
inline std::vector<MetricValue> evaluate_all(std::int64_t n, double p,
                                             SlopeParam slope = SlopeParam()) {
    const RegularPolygonSpec spec(n, p);
    const DerivedGeometry g = derive(spec);
    const double fill = sector_fill(n);

    std::vector<MetricValue> out;
    out.reserve(kMetricCount);
    auto push = [&](MetricId id, double value) { out.push_back(MetricValue{id, n, value}); };

    push(MetricId::kSmoothness, smoothness(n));
    push(MetricId::kPerimeterSlope, perimeter_slope_efficiency(p, g.apothem, slope));
    push(MetricId::kSlantAngle, slant_angle_index(p, g.apothem, slope));
    push(MetricId::kIsoSlope, iso_slope_index(n, p));
    push(MetricId::kIsoSlopeNormalized, iso_slope_normalized(n, p));
    push(MetricId::kApothemAngle, apothem_angle_index(n));
    push(MetricId::kRadialPacking, fill);
    push(MetricId::kAngleAreaUnbounded, angle_area_unbounded(n));
    push(MetricId::kSectorFill, fill);
    push(MetricId::kChordArc, chord_arc(n));
    push(MetricId::kApothemHypotenuse, apothem_hypotenuse(n));
    push(MetricId::kSlantCurvature, slant_curvature(n, p, slope));
    push(MetricId::kAngleHypotenuse, fill);
    push(MetricId::kAngleTrianglePacking, angle_triangle_packing(n));
    push(MetricId::kHalfAngleTangent, half_angle_tangent(n));
    push(MetricId::kSideApothem, side_apothem(n));
    return out;
}

}  // namespace polyeff
