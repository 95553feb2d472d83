#pragma once

#include <random>
#include <vector>

#include "pwb/geometry.hpp"

namespace pwb {

/// Phase-space point of the classical billiard flow. Units follow the
/// project convention m = 1/2, so H = p^2 and the velocity is 2p.
struct TrajectoryState {
    Vec2 position{0.0, 0.0};
    Vec2 momentum{0.0, 0.0};
    double elapsed = 0.0;
    long collisions = 0;
};

struct CollisionEvent {
    TrajectoryState state; ///< post-reflection state at the wall
    Wall wall = Wall::Left;
};

struct LyapunovEstimate {
    double exponent = 0.0;       ///< largest exponent, 1/time
    double per_collision = 0.0;  ///< exponent * mean free time
    long horizon = 0;            ///< collisions used
    double mean_free_time = 0.0;
    std::vector<double> convergence_trace; ///< running exponent after each horizon doubling
    bool accepted = false;       ///< final two trace entries within 10% (or both ~0)
};

/// Advances one collision: free flight to the nearest wall, then specular
/// reflection p' = p - 2 (p.n) n. The returned position is snapped onto the
/// wall curve.
CollisionEvent step(const BilliardShape& shape, const TrajectoryState& state);

/// Straight-line flight for time dt (no wall checks).
TrajectoryState fly(const TrajectoryState& state, double dt);

/// n_collisions events of the billiard flow started from an interior state.
std::vector<CollisionEvent> evolve(const BilliardShape& shape,
                                   const TrajectoryState& start,
                                   long n_collisions);

/// Largest Lyapunov exponent by the two-trajectory method: a shadow orbit
/// offset 1e-9*(width+height)/2 in position, compared at matched collision
/// counts and renormalized to the initial offset after every collision.
LyapunovEstimate lyapunov(const BilliardShape& shape,
                          const TrajectoryState& start, long n_collisions);

/// Time average of p_x^2/(p_x^2+p_y^2) over n_collisions of free flight;
/// the integrand is constant on each straight segment, so the average is a
/// flight-time-weighted sum, exact per segment.
double time_average_O(const BilliardShape& shape, const TrajectoryState& start,
                      long n_collisions);

/// Same average over a fixed time horizon (fractional final segment).
double time_average_O_horizon(const BilliardShape& shape,
                              const TrajectoryState& start, double horizon);

/// Uniform random interior point with a random direction and |p| = 1.
TrajectoryState random_start(const BilliardShape& shape, std::mt19937_64& rng);

} // namespace pwb
