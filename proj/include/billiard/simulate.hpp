#pragma once

#include "billiard/table.hpp"

#include <cstdint>
#include <optional>

namespace billiard {

/// Ray anchored on the table boundary. The direction is an integer pair with
/// gcd 1 (scaling is irrelevant to a specular billiard), so state equality is
/// plain field equality.
struct RayState {
    Point point;
    std::int64_t dx = 0;
    std::int64_t dy = 0;

    friend bool operator==(const RayState&, const RayState&) = default;
};

struct StepEvent {
    bool is_vertex = false;
    CollisionPoint collision;   // when !is_vertex
    Vertex vertex = Vertex::A;  // when is_vertex
    RayState next;              // reflected state; meaningless after a vertex hit
};

/// Advances the ray to its first boundary intersection and reflects the
/// component normal to the struck side. Landing on a corner is a vertex
/// event and ends the trajectory.
///
/// Rejects a zero direction, a direction leaving the table, and a direction
/// running along the side the point sits on — except from a corner, where an
/// axis-parallel direction degenerately slides along an edge to the adjacent
/// corner.
StepEvent step(const RayState& state, const TableSpec& table);

/// Outgoing ray of a generator in physical coordinates.
RayState initial_ray(const Generator& g);

std::int64_t default_max_steps();

/// Specular-reflection simulation by exact state recurrence: iterates step
/// until the collision state (point and outgoing direction) first repeats
/// the initial state (Closed, with the per-orientation collision counts),
/// a corner is struck (HitVertex), or max_steps collisions pass (Truncated).
/// Exact rationals throughout; IrrationalApprox generators are rejected.
Trajectory simulate(const Generator& g, std::int64_t max_steps = default_max_steps());

/// Simulates the reversed direction of motion from the same start point
/// (the tangential mirror of the outgoing ray). Outcome kind and, for
/// periodic orbits, the collision-point set match the forward run.
Trajectory simulate_reversed(const Generator& g, std::int64_t max_steps = default_max_steps());

} // namespace billiard
