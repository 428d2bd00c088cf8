#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "polyeff/math_util.hpp"

// Helpers shared by the test binaries. The geometry here is written from
// scratch, independent of the library, so it can serve as an oracle.
namespace testsupport {

inline double signed_area(const std::vector<polyeff::Point>& vs) {
    double acc = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const polyeff::Point& a = vs[i];
        const polyeff::Point& b = vs[(i + 1) % vs.size()];
        acc += a.x * b.y - a.y * b.x;
    }
    return 0.5 * acc;
}

inline double shoelace(const std::vector<polyeff::Point>& vs) {
    return std::abs(signed_area(vs));
}

// Monotone-chain hull keeping strict turns only, so the output is strictly
// convex with no collinear triples. Counter-clockwise order.
inline std::vector<polyeff::Point> convex_hull(std::vector<polyeff::Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const polyeff::Point& a, const polyeff::Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    const auto cross = [](const polyeff::Point& o, const polyeff::Point& a,
                          const polyeff::Point& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<polyeff::Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower_end = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower_end && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

// Hull of a uniform point cloud in [-5, 5]^2: a strictly convex polygon with
// a handful to a dozen or so vertices.
inline std::vector<polyeff::Point> random_convex_polygon(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(6, 48);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    while (true) {
        std::vector<polyeff::Point> cloud(static_cast<std::size_t>(count(rng)));
        for (polyeff::Point& pt : cloud) pt = polyeff::Point{coord(rng), coord(rng)};
        std::vector<polyeff::Point> hull = convex_hull(std::move(cloud));
        if (hull.size() >= 3) return hull;
    }
}

}  // namespace testsupport
