#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyeff {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Above this the interior angle deficit drops below double-precision
// resolution and the closed forms stop being distinguishable from the
// circle limit, so side counts are capped rather than silently degrading.
inline constexpr std::int64_t kMaxSides = 1'000'000'000;

struct Point {
    double x;
    double y;
};

// 1 - cos(x) without cancellation near x = 0.
inline double one_minus_cos(double x) {
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s;
}

// tan(x) - x to full relative precision on (0, pi/2). The direct
// subtraction loses its leading digits like x^2/3, so small arguments
// take the series; the worst case sits at the 0.1 seam and stays
// below 2e-14 relative.
inline double tan_minus_arg(double x) {
    if (x < 0.1) {
        const double x2 = x * x;
        return x * x2 *
               (1.0 / 3.0 +
                x2 * (2.0 / 15.0 +
                      x2 * (17.0 / 315.0 +
                            x2 * (62.0 / 2835.0 +
                                  x2 * (1382.0 / 155925.0 + x2 * (21844.0 / 6081075.0))))));
    }
    return std::tan(x) - x;
}

inline void require_side_count(std::int64_t n) {
    if (n < 3) {
        throw std::domain_error("side count must be >= 3, got " + std::to_string(n));
    }
    if (n > kMaxSides) {
        throw std::domain_error("side count must be <= " + std::to_string(kMaxSides) +
                                ", got " + std::to_string(n));
    }
}

inline void require_positive_finite(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::domain_error(std::string(name) + " must be finite and > 0");
    }
}

inline void require_nonnegative_finite(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::domain_error(std::string(name) + " must be finite and >= 0");
    }
}

inline void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw std::domain_error(std::string(name) + " must be finite");
    }
}

}  // namespace polyeff
