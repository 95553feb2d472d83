#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "pwb/errors.hpp"

namespace pwb {

using Vec2 = Eigen::Vector2d;

/// Billiard domain: a rectangle [0,W]x[0,H] whose right and top walls are
/// replaced by parabolas bulging into the interior,
///
///   right wall:  x = width  - curvature1 * (y - offset1)^2
///   top wall:    y = height - curvature2 * (x - offset2)^2
///
/// Distinct curvatures and off-center vertex offsets remove all reflection
/// and rotation symmetries; the inward bulges make the boundary dispersing.
struct BilliardShape {
    double width = 1.0;
    double height = 1.0;
    double curvature1 = 0.0; ///< right parabola curvature (1/length)
    double offset1 = 0.0;    ///< right parabola vertex y
    double curvature2 = 0.0; ///< top parabola curvature (1/length)
    double offset2 = 0.0;    ///< top parabola vertex x
};

enum class Wall { Left, Bottom, ParabolaRight, ParabolaTop };

const char* wall_name(Wall w);

/// Collects invariant violations; empty means the shape is valid.
/// In test mode zero curvatures (integrable references) are permitted and
/// the asymmetry requirements are waived for them.
std::vector<std::string> shape_violations(const BilliardShape& shape,
                                          bool test_mode = false);

/// Throws geometry_error listing every violation.
void validate_shape(const BilliardShape& shape, bool test_mode = false);

/// x-extent of the domain at height y (right parabolic wall), clamped to >= 0.
double right_wall_x(const BilliardShape& shape, double y);

/// y-extent of the domain at abscissa x (top parabolic wall), clamped to >= 0.
double top_wall_y(const BilliardShape& shape, double x);

/// Strict interior test; boundary points count as outside.
bool contains(const BilliardShape& shape, const Vec2& point);

struct WallHit {
    double time = 0.0; ///< ray parameter at the wall (length for unit direction)
    Wall wall = Wall::Left;
};

/// First exit of the ray point + t*direction from the domain, t > 0.
/// Parabolic walls are quadratic root problems; the smallest positive root
/// wins. Roots below a tiny threshold are ignored so that a point sitting on
/// a wall (fresh reflection) is not re-detected.
/// Throws collision_error if no wall is hit (numerical failure; the domain
/// is bounded so a hit must exist).
WallHit boundary_distance(const BilliardShape& shape, const Vec2& point,
                          const Vec2& direction);

/// Inward-pointing unit normal of `wall` at `point`.
/// Throws geometry_error if the point is farther from the wall than tol
/// (defaulted to 1e-7 * (width + height)).
Vec2 boundary_normal(const BilliardShape& shape, Wall wall, const Vec2& point,
                     double tol = -1.0);

/// Projects a point onto the named wall (used to keep collision points on
/// the boundary to machine precision).
Vec2 snap_to_wall(const BilliardShape& shape, Wall wall, const Vec2& point);

/// Exact domain area: width*height minus the two parabolic-segment integrals
/// (closed form), with the corner region excluded by both cuts added back
/// once via one-dimensional quadrature.
double area(const BilliardShape& shape);

/// Region excluded by both parabolic cuts (near the top-right corner),
/// described as an x-interval split at the point where the lower edge
/// switches between the right-wall branch and the top wall. Consumed by
/// area() and by Hamiltonian assembly.
struct CornerRegion {
    bool empty = true;
    double x_begin = 0.0;
    double x_split = 0.0;
    double x_end = 0.0;
};

CornerRegion corner_region(const BilliardShape& shape);

/// Lower y-edge of the corner overlap at abscissa x (clamped to the height).
double corner_lower_y(const BilliardShape& shape, double x);

} // namespace pwb
