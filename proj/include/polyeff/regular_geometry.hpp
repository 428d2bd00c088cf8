#pragma once

#include <cstdint>
#include <vector>

#include "polyeff/math_util.hpp"

namespace polyeff {

// A regular n-gon identified by side count and total perimeter. Every closed
// form downstream is a function of these two numbers alone.
struct RegularPolygonSpec {
    std::int64_t sides;
    double perimeter;

    RegularPolygonSpec(std::int64_t n, double p) : sides(n), perimeter(p) {
        require_side_count(n);
        require_positive_finite(p, "perimeter");
    }
};

struct DerivedGeometry {
    double side;           // p / n
    double apothem;        // p / (2 n tan(pi/n))
    double circumradius;   // p / (2 n sin(pi/n))
    double central_angle;  // 2 pi / n
    double half_angle;     // pi / n

    // Centre-to-vertex distance; the hypotenuse of the half-side right
    // triangle, identical to the circumradius.
    double hypotenuse() const { return circumradius; }
};

// Vertices in counter-clockwise order, centred at the origin.
using VertexSet = std::vector<Point>;

inline DerivedGeometry derive(const RegularPolygonSpec& spec) {
    const double n = static_cast<double>(spec.sides);
    const double p = spec.perimeter;
    const double half = kPi / n;
    return DerivedGeometry{
        p / n,
        p / (2.0 * n * std::tan(half)),
        p / (2.0 * n * std::sin(half)),
        kTwoPi / n,
        half,
    };
}

// Area via the apothem route: p^2 / (4 n tan(pi/n)).
inline double area_apothem(const RegularPolygonSpec& spec) {
    const double n = static_cast<double>(spec.sides);
    const double p = spec.perimeter;
    return p * p / (4.0 * n * std::tan(kPi / n));
}

// Area via the circumradius route: (n/2) R^2 sin(2 pi/n). Algebraically equal
// to area_apothem; kept as a separately evaluated expression so the two can
// cross-check each other.
inline double area_circumradius(const RegularPolygonSpec& spec) {
    const double n = static_cast<double>(spec.sides);
    const double r = derive(spec).circumradius;
    return 0.5 * n * r * r * std::sin(kTwoPi / n);
}

// Explicit vertex coordinates, vertex 0 at angle `rotation`. Angles accumulate
// in long double so consecutive edge lengths stay equal to the side length at
// the 1e-12 relative level even for large n; callers use these as a
// brute-force oracle against the closed forms.
inline VertexSet vertices(const RegularPolygonSpec& spec, double rotation = 0.0) {
    require_finite(rotation, "rotation");
    constexpr long double kPiL = 3.141592653589793238462643383279502884L;
    const double r = derive(spec).circumradius;
    const long double step = 2.0L * kPiL / static_cast<long double>(spec.sides);
    const long double rot = rotation;

    VertexSet out;
    out.reserve(static_cast<std::size_t>(spec.sides));
    for (std::int64_t k = 0; k < spec.sides; ++k) {
        const long double angle = rot + step * static_cast<long double>(k);
        out.push_back(Point{static_cast<double>(r * std::cos(angle)),
                            static_cast<double>(r * std::sin(angle))});
    }
    return out;
}

}  // namespace polyeff
