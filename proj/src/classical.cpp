#include "pwb/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace pwb {

namespace {

double speed(const TrajectoryState& s) { return 2.0 * s.momentum.norm(); }

void require_movable(const TrajectoryState& s) {
    if (s.momentum.squaredNorm() == 0.0)
        throw std::invalid_argument("trajectory needs nonzero momentum");
}

} // namespace

CollisionEvent step(const BilliardShape& shape, const TrajectoryState& state) {
    const Vec2 dir = state.momentum.normalized();
    const WallHit hit = boundary_distance(shape, state.position, dir);

    TrajectoryState next = state;
    next.position = snap_to_wall(shape, hit.wall, state.position + hit.time * dir);
    const Vec2 n = boundary_normal(shape, hit.wall, next.position);
    next.momentum = state.momentum - 2.0 * state.momentum.dot(n) * n;
    next.elapsed += hit.time / speed(state);
    next.collisions += 1;
    return {next, hit.wall};
}

TrajectoryState fly(const TrajectoryState& state, double dt) {
    TrajectoryState next = state;
    next.position += 2.0 * dt * state.momentum;
    next.elapsed += dt;
    return next;
}

std::vector<CollisionEvent> evolve(const BilliardShape& shape,
                                   const TrajectoryState& start,
                                   long n_collisions) {
    require_movable(start);
    std::vector<CollisionEvent> events;
    events.reserve(static_cast<size_t>(n_collisions));
    TrajectoryState s = start;
    for (long k = 0; k < n_collisions; ++k) {
        CollisionEvent ev = step(shape, s);
        s = ev.state;
        events.push_back(std::move(ev));
    }
    return events;
}

LyapunovEstimate lyapunov(const BilliardShape& shape,
                          const TrajectoryState& start, long n_collisions) {
    require_movable(start);
    if (n_collisions < 1000)
        throw std::invalid_argument("lyapunov: need at least 1e3 collisions");

    const double length_scale = 0.5 * (shape.width + shape.height);
    const double d0 = 1e-9 * length_scale;
    const double p0 = start.momentum.norm();

    TrajectoryState main = start;
    TrajectoryState shadow = start;
    {
        // Offset in position, perpendicular to the flight direction.
        const Vec2 dir = start.momentum.normalized();
        const Vec2 perp{-dir.y(), dir.x()};
        shadow.position += d0 * perp;
        if (!contains(shape, shadow.position)) shadow.position -= 2.0 * d0 * perp;
        if (!contains(shape, shadow.position)) shadow.position = start.position;
    }

    double sum_log = 0.0;
    LyapunovEstimate est;
    est.horizon = n_collisions;
    long next_record = 2;

    for (long k = 1; k <= n_collisions; ++k) {
        main = step(shape, main).state;
        shadow = step(shape, shadow).state;

        const Vec2 dq = shadow.position - main.position;
        const Vec2 dp = shadow.momentum - main.momentum;
        const double d = std::sqrt(dq.squaredNorm() +
                                   std::pow(length_scale / p0, 2) * dp.squaredNorm());
        if (d > 0.0) {
            sum_log += std::log(d / d0);
            const double rescale = d0 / d;
            shadow.position = main.position + rescale * dq;
            shadow.momentum = main.momentum + rescale * dp;
            if (!contains(shape, shadow.position)) {
                // Chord argument fails only when main and shadow hit
                // different walls; retry on the opposite side, else
                // collapse the offset.
                shadow.position = main.position - rescale * dq;
                if (!contains(shape, shadow.position)) shadow.position = main.position;
            }
        }
        shadow.elapsed = main.elapsed;
        shadow.collisions = main.collisions;

        if (k == next_record || k == n_collisions) {
            est.convergence_trace.push_back(sum_log / main.elapsed);
            while (next_record <= k) next_record *= 2;
        }
    }

    est.exponent = sum_log / main.elapsed;
    est.per_collision = sum_log / static_cast<double>(n_collisions);
    est.mean_free_time = main.elapsed / static_cast<double>(n_collisions);

    const auto& tr = est.convergence_trace;
    if (tr.size() >= 2) {
        const double a = tr[tr.size() - 2], b = tr[tr.size() - 1];
        const double rel = std::abs(a - b) / std::max(std::abs(a), std::abs(b));
        const bool both_zeroish =
            std::max(std::abs(a), std::abs(b)) * est.mean_free_time < 1e-3;
        est.accepted = rel < 0.10 || both_zeroish;
    }
    return est;
}

namespace {

double average_O(const BilliardShape& shape, const TrajectoryState& start,
                 long n_collisions, double horizon) {
    require_movable(start);
    TrajectoryState s = start;
    double weighted = 0.0, total = 0.0;
    for (long k = 0; n_collisions < 0 || k < n_collisions; ++k) {
        const Vec2 dir = s.momentum.normalized();
        const WallHit hit = boundary_distance(shape, s.position, dir);
        double dt = hit.time / speed(s);
        const double o = s.momentum.x() * s.momentum.x() / s.momentum.squaredNorm();
        if (horizon > 0.0 && total + dt >= horizon) {
            weighted += o * (horizon - total);
            total = horizon;
            break;
        }
        weighted += o * dt;
        total += dt;
        TrajectoryState next = s;
        next.position = snap_to_wall(shape, hit.wall, s.position + hit.time * dir);
        const Vec2 n = boundary_normal(shape, hit.wall, next.position);
        next.momentum = s.momentum - 2.0 * s.momentum.dot(n) * n;
        next.elapsed += dt;
        next.collisions += 1;
        s = next;
    }
    return weighted / total;
}

} // namespace

double time_average_O(const BilliardShape& shape, const TrajectoryState& start,
                      long n_collisions) {
    if (n_collisions < 1000)
        throw std::invalid_argument("time_average_O: need at least 1e3 collisions");
    return average_O(shape, start, n_collisions, -1.0);
}

double time_average_O_horizon(const BilliardShape& shape,
                              const TrajectoryState& start, double horizon) {
    if (!(horizon > 0.0))
        throw std::invalid_argument("time_average_O_horizon: horizon must be positive");
    return average_O(shape, start, -1, horizon);
}

TrajectoryState random_start(const BilliardShape& shape, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ux(0.0, shape.width);
    std::uniform_real_distribution<double> uy(0.0, shape.height);
    std::uniform_real_distribution<double> uang(0.0, 2.0 * M_PI);
    TrajectoryState s;
    do {
        s.position = {ux(rng), uy(rng)};
    } while (!contains(shape, s.position));
    const double a = uang(rng);
    s.momentum = {std::cos(a), std::sin(a)};
    return s;
}

} // namespace pwb
