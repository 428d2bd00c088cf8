// Minimal library walkthrough: how fast regular polygons close in on the
// circle, and what the average-apothem shortcut does on a stretched box.

#include <cstdio>

#include "polyeff/convex_estimator.hpp"
#include "polyeff/isoperimetric.hpp"
#include "polyeff/metrics.hpp"

int main() {
    std::printf("%4s  %12s  %12s  %12s\n", "n", "area/circle", "wasted", "sector fill");
    for (std::int64_t n : {3, 4, 5, 6, 8, 12, 24, 96}) {
        std::printf("%4lld  %12.8f  %12.8f  %12.8f\n", static_cast<long long>(n),
                    polyeff::angle_triangle_packing(n), polyeff::wasted_area(n, 1.0),
                    polyeff::sector_fill(n));
    }

    const polyeff::ConvexPolygon box = polyeff::ConvexPolygon::from_vertices(
        {{0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {0.0, 1.0}});
    const polyeff::EstimateReport report = polyeff::estimate(box);
    std::printf("\n2x1 box: exact %.6f, unweighted estimate %.6f (rel err %.6f), "
                "weighted estimate %.6f\n",
                report.exact_area, report.estimate_unweighted,
                report.relative_error_unweighted, report.estimate_weighted);
    return 0;
}
