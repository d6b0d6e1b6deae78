#pragma once

#include <cmath>

namespace wbasn {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

inline double distance(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Clamp a point into the simulation square [0, side] x [0, side].
inline Vec2 clamp_to_square(Vec2 p, double side) {
    p.x = std::min(std::max(p.x, 0.0), side);
    p.y = std::min(std::max(p.y, 0.0), side);
    return p;
}

} // namespace wbasn
