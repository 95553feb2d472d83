#include "pwb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pwb/quadrature.hpp"

namespace pwb {

namespace {

constexpr double kNoRoot = std::numeric_limits<double>::infinity();

// Smallest root of A t^2 + B t + C = 0 with t > tmin (infinity if none).
double smallest_root_above(double A, double B, double C, double tmin) {
    double best = kNoRoot;
    auto consider = [&](double t) {
        if (t > tmin && t < best) best = t;
    };
    // Degenerate-to-linear when the quadratic coefficient underflows the
    // problem scale.
    const double scale = std::abs(B) + std::abs(C) + 1.0;
    if (std::abs(A) < 1e-300 * scale) {
        if (B != 0.0) consider(-C / B);
        return best;
    }
    const double disc = B * B - 4.0 * A * C;
    if (disc < 0.0) return best;
    const double s = std::sqrt(disc);
    const double q = -0.5 * (B + std::copysign(s, B));
    if (q != 0.0) {
        consider(q / A);
        consider(C / q);
    } else {
        consider(0.0); // double root at the origin
    }
    return best;
}

double corner_overlap_area(const BilliardShape& s) {
    const CornerRegion r = corner_region(s);
    if (r.empty) return 0.0;
    auto depth = [&](double x) {
        return std::max(0.0, s.height - corner_lower_y(s, x));
    };
    double a = 0.0;
    if (r.x_split > r.x_begin) a += gl_integrate(depth, r.x_begin, r.x_split, 64);
    if (r.x_end > r.x_split) a += gl_integrate(depth, r.x_split, r.x_end, 64);
    return a;
}

bool nearly_equal(double a, double b, double scale) {
    return std::abs(a - b) <= 1e-12 * scale;
}

} // namespace

// Lower y-edge of the corner overlap at abscissa x: the larger of the top
// wall and the y>offset1 branch of the right wall's inverse.
double corner_lower_y(const BilliardShape& s, double x) {
    const double g2 = s.height - s.curvature2 * (x - s.offset2) * (x - s.offset2);
    double h1 = s.height;
    if (s.curvature1 > 0.0 && x <= s.width)
        h1 = s.offset1 + std::sqrt((s.width - x) / s.curvature1);
    return std::max(g2, std::min(h1, s.height));
}

CornerRegion corner_region(const BilliardShape& s) {
    CornerRegion r;
    if (s.curvature1 <= 0.0 || s.curvature2 <= 0.0) return r;
    const double dh = s.height - s.offset1;
    double x_begin = s.width - s.curvature1 * dh * dh;
    x_begin = std::clamp(x_begin, 0.0, s.width);
    if (x_begin >= s.width) return r;
    r.empty = false;
    r.x_begin = x_begin;
    r.x_end = s.width;

    auto branch_gap = [&](double x) {
        const double h1 = s.offset1 + std::sqrt(std::max(0.0, s.width - x) / s.curvature1);
        const double g2 = s.height - s.curvature2 * (x - s.offset2) * (x - s.offset2);
        return h1 - g2;
    };
    double lo = x_begin, hi = s.width;
    if (branch_gap(lo) <= 0.0) {
        r.x_split = lo;
    } else if (branch_gap(hi) >= 0.0) {
        r.x_split = hi;
    } else {
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (branch_gap(mid) > 0.0 ? lo : hi) = mid;
        }
        r.x_split = 0.5 * (lo + hi);
    }
    return r;
}

const char* wall_name(Wall w) {
    switch (w) {
        case Wall::Left: return "left";
        case Wall::Bottom: return "bottom";
        case Wall::ParabolaRight: return "parabola-right";
        case Wall::ParabolaTop: return "parabola-top";
    }
    return "?";
}

double right_wall_x(const BilliardShape& s, double y) {
    const double d = y - s.offset1;
    return std::max(0.0, s.width - s.curvature1 * d * d);
}

double top_wall_y(const BilliardShape& s, double x) {
    const double d = x - s.offset2;
    return std::max(0.0, s.height - s.curvature2 * d * d);
}

std::vector<std::string> shape_violations(const BilliardShape& s, bool test_mode) {
    std::vector<std::string> v;
    auto add = [&](const std::string& msg) { v.push_back(msg); };

    if (!(s.width > 0.0)) add("width must be positive");
    if (!(s.height > 0.0)) add("height must be positive");
    if (s.curvature1 < 0.0) add("curvature1 must be non-negative");
    if (s.curvature2 < 0.0) add("curvature2 must be non-negative");
    if (!v.empty()) return v;

    const double scale = std::max(s.width, s.height);
    const bool degenerate = s.curvature1 == 0.0 && s.curvature2 == 0.0;
    if (!test_mode) {
        if (s.curvature1 <= 0.0) add("curvature1 must be positive (zero-curvature shapes are test-only)");
        if (s.curvature2 <= 0.0) add("curvature2 must be positive (zero-curvature shapes are test-only)");
        if (nearly_equal(s.curvature1, s.curvature2, std::max(s.curvature1, s.curvature2) + 1.0))
            add("curvature1 must differ from curvature2 (equal curvatures restore a symmetry)");
        if (nearly_equal(s.offset1, 0.5 * s.height, scale))
            add("offset1 must differ from height/2 (centered vertex restores a reflection symmetry)");
        if (nearly_equal(s.offset2, 0.5 * s.width, scale))
            add("offset2 must differ from width/2 (centered vertex restores a reflection symmetry)");
    }

    if (s.curvature1 > 0.0 && !(s.offset1 > 0.0 && s.offset1 < s.height))
        add("offset1 must lie strictly inside (0, height)");
    if (s.curvature2 > 0.0 && !(s.offset2 > 0.0 && s.offset2 < s.width))
        add("offset2 must lie strictly inside (0, width)");

    // Cut-depth bounds keep each wall inside its half of the rectangle, so
    // the domain stays connected and the two cuts cannot swallow each other.
    const double depth1 = s.curvature1 * std::pow(std::max(s.offset1, s.height - s.offset1), 2);
    const double depth2 = s.curvature2 * std::pow(std::max(s.offset2, s.width - s.offset2), 2);
    if (depth1 >= 0.5 * s.width)
        add("right parabolic cut reaches past width/2 (cut too deep)");
    if (depth2 >= 0.5 * s.height)
        add("top parabolic cut reaches past height/2 (cut too deep)");
    if (s.curvature1 > 0.0 && s.curvature2 > 0.0) {
        if (s.height - depth2 <= s.offset1)
            add("top cut reaches the right parabola's vertex height (cuts overlap)");
        if (s.width - depth1 <= s.offset2)
            add("right cut reaches the top parabola's vertex abscissa (cuts overlap)");
    }

    if (v.empty() && !degenerate) {
        if (area(s) < 0.5 * s.width * s.height)
            add("parabolic cuts exclude more than half the rectangle area");
    }
    return v;
}

void validate_shape(const BilliardShape& s, bool test_mode) {
    const auto v = shape_violations(s, test_mode);
    if (v.empty()) return;
    std::ostringstream os;
    os << "invalid billiard shape:";
    for (const auto& msg : v) os << "\n  - " << msg;
    throw geometry_error(os.str());
}

bool contains(const BilliardShape& s, const Vec2& p) {
    const double x = p.x(), y = p.y();
    if (!(x > 0.0 && y > 0.0)) return false;
    const double d1 = y - s.offset1;
    if (!(x < s.width - s.curvature1 * d1 * d1)) return false;
    const double d2 = x - s.offset2;
    return y < s.height - s.curvature2 * d2 * d2;
}

WallHit boundary_distance(const BilliardShape& s, const Vec2& point,
                          const Vec2& direction) {
    const double x0 = point.x(), y0 = point.y();
    const double dx = direction.x(), dy = direction.y();
    const double tmin = 1e-12 * (s.width + s.height);

    WallHit best{kNoRoot, Wall::Left};
    auto consider = [&](double t, Wall w) {
        if (t > tmin && t < best.time) best = {t, w};
    };

    if (dx < 0.0) consider(-x0 / dx, Wall::Left);
    if (dy < 0.0) consider(-y0 / dy, Wall::Bottom);

    // x(t) = width - c1 (y(t) - a1)^2
    {
        const double u = y0 - s.offset1;
        consider(smallest_root_above(s.curvature1 * dy * dy,
                                     dx + 2.0 * s.curvature1 * dy * u,
                                     x0 - s.width + s.curvature1 * u * u, tmin),
                 Wall::ParabolaRight);
    }
    // y(t) = height - c2 (x(t) - a2)^2
    {
        const double u = x0 - s.offset2;
        consider(smallest_root_above(s.curvature2 * dx * dx,
                                     dy + 2.0 * s.curvature2 * dx * u,
                                     y0 - s.height + s.curvature2 * u * u, tmin),
                 Wall::ParabolaTop);
    }

    if (!std::isfinite(best.time))
        throw collision_error("boundary_distance: ray found no wall (point outside domain?)");
    return best;
}

Vec2 boundary_normal(const BilliardShape& s, Wall wall, const Vec2& p, double tol) {
    if (tol < 0.0) tol = 1e-7 * (s.width + s.height);

    Vec2 grad;      // gradient of the wall's implicit function F (F<0 inside)
    double f = 0.0; // F at the query point
    switch (wall) {
        case Wall::Left:
            grad = {-1.0, 0.0};
            f = -p.x();
            break;
        case Wall::Bottom:
            grad = {0.0, -1.0};
            f = -p.y();
            break;
        case Wall::ParabolaRight: {
            const double u = p.y() - s.offset1;
            grad = {1.0, 2.0 * s.curvature1 * u};
            f = p.x() - s.width + s.curvature1 * u * u;
            break;
        }
        case Wall::ParabolaTop: {
            const double u = p.x() - s.offset2;
            grad = {2.0 * s.curvature2 * u, 1.0};
            f = p.y() - s.height + s.curvature2 * u * u;
            break;
        }
    }
    const double gnorm = grad.norm();
    if (std::abs(f) / gnorm > tol)
        throw geometry_error(std::string("boundary_normal: point is off wall ") + wall_name(wall));
    return -grad / gnorm;
}

Vec2 snap_to_wall(const BilliardShape& s, Wall wall, const Vec2& p) {
    switch (wall) {
        case Wall::Left: return {0.0, p.y()};
        case Wall::Bottom: return {p.x(), 0.0};
        case Wall::ParabolaRight: {
            const double u = p.y() - s.offset1;
            return {s.width - s.curvature1 * u * u, p.y()};
        }
        case Wall::ParabolaTop: {
            const double u = p.x() - s.offset2;
            return {p.x(), s.height - s.curvature2 * u * u};
        }
    }
    return p;
}

double area(const BilliardShape& s) {
    // Parabolic-segment integrals in closed form; valid while the cut depth
    // stays below the rectangle extent (enforced by validation).
    const double d1a = s.offset1, d1b = s.height - s.offset1;
    const double d2a = s.offset2, d2b = s.width - s.offset2;
    const double cut1 = s.curvature1 * (d1a * d1a * d1a + d1b * d1b * d1b) / 3.0;
    const double cut2 = s.curvature2 * (d2a * d2a * d2a + d2b * d2b * d2b) / 3.0;
    return s.width * s.height - cut1 - cut2 + corner_overlap_area(s);
}

} // namespace pwb
