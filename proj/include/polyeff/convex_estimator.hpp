#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyeff/math_util.hpp"

namespace polyeff {

// Violated polygon invariant, with the vertex it was detected at (kNoVertex
// when the failure is not tied to one vertex).
class PolygonError : public std::runtime_error {
  public:
    static constexpr std::size_t kNoVertex = static_cast<std::size_t>(-1);

    PolygonError(std::string invariant, std::size_t vertex, const std::string& message)
        : std::runtime_error(message), invariant_(std::move(invariant)), vertex_(vertex) {}

    const std::string& invariant() const { return invariant_; }
    std::size_t vertex() const { return vertex_; }

  private:
    std::string invariant_;
    std::size_t vertex_;
};

namespace detail {

inline double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double signed_area_twice(const std::vector<Point>& vs) {
    double acc = 0.0;
    const std::size_t k = vs.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % k];
        acc += a.x * b.y - a.y * b.x;
    }
    return acc;
}

}  // namespace detail

// Strictly convex polygon, counter-clockwise after construction. Clockwise
// input is accepted and reversed (recorded via orientation_flipped) since the
// geometry is orientation-free; everything else throws PolygonError.
class ConvexPolygon {
  public:
    static ConvexPolygon from_vertices(std::vector<Point> vs) {
        const std::size_t k = vs.size();
        if (k < 3) {
            throw PolygonError("vertex_count", PolygonError::kNoVertex,
                               "polygon needs at least 3 vertices, got " + std::to_string(k));
        }
        double scale = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (!std::isfinite(vs[i].x) || !std::isfinite(vs[i].y)) {
                throw PolygonError("finite_coordinates", i,
                                   "vertex " + std::to_string(i) + " has a non-finite coordinate");
            }
            scale = std::max({scale, std::abs(vs[i].x), std::abs(vs[i].y)});
        }

        const double edge_tol = 1e-12 * scale;
        for (std::size_t i = 0; i < k; ++i) {
            const Point& a = vs[i];
            const Point& b = vs[(i + 1) % k];
            if (std::hypot(b.x - a.x, b.y - a.y) <= edge_tol) {
                throw PolygonError("repeated_vertex", i,
                                   "vertices " + std::to_string(i) + " and " +
                                       std::to_string((i + 1) % k) + " coincide");
            }
        }

        bool flipped = false;
        if (detail::signed_area_twice(vs) < 0.0) {
            std::reverse(vs.begin(), vs.end());
            flipped = true;
        }

        // Strict convexity: every consecutive-edge cross product clearly
        // positive at the coordinate scale. Near-zero means a collinear
        // triple, which is rejected separately from a genuine reflex turn.
        const double cross_tol = 1e-12 * scale * scale;
        for (std::size_t i = 0; i < k; ++i) {
            const Point& a = vs[i];
            const Point& b = vs[(i + 1) % k];
            const Point& c = vs[(i + 2) % k];
            const double turn = detail::cross(a, b, c);
            if (turn < -cross_tol) {
                throw PolygonError("convexity", (i + 1) % k,
                                   "reflex turn at vertex " + std::to_string((i + 1) % k));
            }
            if (turn <= cross_tol) {
                throw PolygonError("collinear_vertices", (i + 1) % k,
                                   "collinear triple at vertex " + std::to_string((i + 1) % k));
            }
        }

        // All-positive turns alone admit self-crossing equiangular stars
        // (winding number 2 or more), so the total turning must come out as
        // one full revolution.
        double turning = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            const Point& a = vs[i];
            const Point& b = vs[(i + 1) % k];
            const Point& c = vs[(i + 2) % k];
            const double ex0 = b.x - a.x, ey0 = b.y - a.y;
            const double ex1 = c.x - b.x, ey1 = c.y - b.y;
            turning += std::atan2(ex0 * ey1 - ey0 * ex1, ex0 * ex1 + ey0 * ey1);
        }
        if (std::abs(turning - kTwoPi) > 1e-6) {
            throw PolygonError("convexity", PolygonError::kNoVertex,
                               "edges wind around the interior more than once");
        }

        return ConvexPolygon(std::move(vs), flipped);
    }

    const std::vector<Point>& vertices() const { return vertices_; }
    bool orientation_flipped() const { return flipped_; }

  private:
    ConvexPolygon(std::vector<Point> vs, bool flipped)
        : vertices_(std::move(vs)), flipped_(flipped) {}

    std::vector<Point> vertices_;
    bool flipped_;
};

enum class ApothemWeighting { kUnweighted, kLengthWeighted };

inline double shoelace_area(const ConvexPolygon& poly) {
    return 0.5 * detail::signed_area_twice(poly.vertices());
}

inline double perimeter(const ConvexPolygon& poly) {
    const std::vector<Point>& vs = poly.vertices();
    double acc = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % vs.size()];
        acc += std::hypot(b.x - a.x, b.y - a.y);
    }
    return acc;
}

// Area centroid (not the vertex mean); guaranteed interior for a convex
// polygon, which keeps every side distance below positive.
inline Point centroid(const ConvexPolygon& poly) {
    const std::vector<Point>& vs = poly.vertices();
    double cx = 0.0, cy = 0.0, twice_area = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % vs.size()];
        const double w = a.x * b.y - a.y * b.x;
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
        twice_area += w;
    }
    return Point{cx / (3.0 * twice_area), cy / (3.0 * twice_area)};
}

// Mean perpendicular distance from the centroid to the side lines. The
// length-weighted mean equals 2A/p exactly (fan triangulation from any
// interior point), which is what makes the weighted estimate exact.
inline double average_apothem(const ConvexPolygon& poly, ApothemWeighting weighting) {
    const std::vector<Point>& vs = poly.vertices();
    const Point c = centroid(poly);
    double sum = 0.0, weight_sum = 0.0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point& a = vs[i];
        const Point& b = vs[(i + 1) % vs.size()];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        const double dist = detail::cross(a, b, c) / len;
        if (weighting == ApothemWeighting::kLengthWeighted) {
            sum += len * dist;
            weight_sum += len;
        } else {
            sum += dist;
            weight_sum += 1.0;
        }
    }
    return sum / weight_sum;
}

inline double average_circumradius(const ConvexPolygon& poly) {
    const std::vector<Point>& vs = poly.vertices();
    const Point c = centroid(poly);
    double acc = 0.0;
    for (const Point& v : vs) {
        acc += std::hypot(v.x - c.x, v.y - c.y);
    }
    return acc / static_cast<double>(vs.size());
}

struct EstimateReport {
    double exact_area;
    double perimeter;
    double avg_apothem_unweighted;
    double avg_apothem_weighted;
    double avg_circumradius;  // reported for context, not used by the estimates
    double estimate_unweighted;
    double estimate_weighted;
    double relative_error_unweighted;
    bool orientation_flipped;
};

// Both estimates are (1/2) p a-bar, differing only in how the side distances
// are averaged. The unweighted variant is the fallible one under test; its
// relative error is the headline number.
inline EstimateReport estimate(const ConvexPolygon& poly) {
    const double exact = shoelace_area(poly);
    const double p = perimeter(poly);
    const double a_u = average_apothem(poly, ApothemWeighting::kUnweighted);
    const double a_w = average_apothem(poly, ApothemWeighting::kLengthWeighted);
    const double est_u = 0.5 * p * a_u;
    const double est_w = 0.5 * p * a_w;
    return EstimateReport{
        exact,
        p,
        a_u,
        a_w,
        average_circumradius(poly),
        est_u,
        est_w,
        std::abs(est_u - exact) / exact,
        poly.orientation_flipped(),
    };
}

}  // namespace polyeff
