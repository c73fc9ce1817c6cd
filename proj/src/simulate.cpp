#include "billiard/simulate.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace billiard {

namespace {

struct BoundaryFlags {
    bool left, right, bottom, top;
    bool on_corner() const { return (left || right) && (bottom || top); }
};

BoundaryFlags boundary_flags(const Point& p, const TableSpec& table) {
    return {p.x == Rational(0), p.x == Rational(1), p.y == Rational(0), p.y == table.rho};
}

Vertex corner_at(const Point& p, const TableSpec& table) {
    BoundaryFlags f = boundary_flags(p, table);
    if (f.left && f.bottom) return Vertex::A;
    if (f.right && f.bottom) return Vertex::B;
    if (f.right && f.top) return Vertex::C;
    return Vertex::D;
}

void validate_direction(const RayState& s, const TableSpec& table) {
    if (s.dx == 0 && s.dy == 0) throw std::domain_error("step: zero direction");
    BoundaryFlags f = boundary_flags(s.point, table);
    if (!(f.left || f.right || f.bottom || f.top))
        throw std::domain_error("step: point is not on the boundary");
    if ((f.bottom && s.dy < 0) || (f.top && s.dy > 0) || (f.left && s.dx < 0) ||
        (f.right && s.dx > 0))
        throw std::domain_error("step: direction leaves the table");
    // Parallel to the carrying side is only meaningful from a corner, where
    // it degenerates to a slide along the edge.
    if (!f.on_corner()) {
        if ((f.bottom || f.top) && s.dy == 0)
            throw std::domain_error("step: direction parallel to the start side");
        if ((f.left || f.right) && s.dx == 0)
            throw std::domain_error("step: direction parallel to the start side");
    }
}

CollisionPoint make_collision(Side side, Rational position) {
    CollisionPoint c;
    c.side = side;
    c.position = position;
    c.angle_class = is_horizontal(side) ? AngleClass::Alpha : AngleClass::Complement;
    return c;
}

} // namespace

StepEvent step(const RayState& state, const TableSpec& table) {
    validate_direction(state, table);
    const Rational& rho = table.rho;

    // Earliest positive hit time against each boundary line.
    std::optional<Rational> tx, ty;
    if (state.dx > 0)
        tx = (Rational(1) - state.point.x) / Rational(state.dx);
    else if (state.dx < 0)
        tx = state.point.x / Rational(-state.dx);
    if (state.dy > 0)
        ty = (rho - state.point.y) / Rational(state.dy);
    else if (state.dy < 0)
        ty = state.point.y / Rational(-state.dy);

    bool hit_vertical_side;
    Rational t;
    if (tx && ty) {
        hit_vertical_side = *tx <= *ty;
        t = hit_vertical_side ? *tx : *ty;
    } else if (tx) {
        hit_vertical_side = true;
        t = *tx;
    } else {
        hit_vertical_side = false;
        t = *ty;
    }

    Point hit{state.point.x + Rational(state.dx) * t, state.point.y + Rational(state.dy) * t};

    StepEvent ev;
    if (boundary_flags(hit, table).on_corner()) {
        ev.is_vertex = true;
        ev.vertex = corner_at(hit, table);
        return ev;
    }

    ev.next.point = hit;
    ev.next.dx = hit_vertical_side ? -state.dx : state.dx;
    ev.next.dy = hit_vertical_side ? state.dy : -state.dy;

    if (hit_vertical_side) {
        if (hit.x == Rational(1))
            ev.collision = make_collision(Side::BC, hit.y / rho);
        else
            ev.collision = make_collision(Side::DA, Rational(1) - hit.y / rho);
    } else {
        if (hit.y == Rational(0))
            ev.collision = make_collision(Side::AB, hit.x);
        else
            ev.collision = make_collision(Side::CD, Rational(1) - hit.x);
    }
    return ev;
}

RayState initial_ray(const Generator& g) {
    if (!g.slope.is_exact())
        throw std::domain_error("simulate: approximate slopes cannot be simulated exactly");

    // Outgoing direction in normalized coordinates, oriented so that each
    // side's generator is the quarter/half-turn relabeling of the AB one.
    // A Vertical descriptor is perpendicular to its own side; a rational
    // slope is the ambient slope of the line.
    std::int64_t nx, ny;
    if (g.slope.is_vertical()) {
        switch (g.start_side) {
            case Side::AB: nx = 0;  ny = 1;  break;
            case Side::BC: nx = -1; ny = 0;  break;
            case Side::CD: nx = 0;  ny = -1; break;
            case Side::DA: nx = 1;  ny = 0;  break;
            default: throw std::logic_error("initial_ray: bad side");
        }
    } else {
        const std::int64_t a = g.slope.value.den();
        const std::int64_t b = g.slope.value.num();
        switch (g.start_side) {
            case Side::AB: nx = a;  ny = b;  break;
            case Side::BC: nx = -a; ny = b;  break;
            case Side::CD: nx = -a; ny = -b; break;
            case Side::DA: nx = a;  ny = -b; break;
            default: throw std::logic_error("initial_ray: bad side");
        }
    }

    // Physical direction: stretch y by rho, then clear denominators.
    std::int64_t dx = nx * g.table.rho.den();
    std::int64_t dy = ny * g.table.rho.num();
    std::int64_t gdiv = std::gcd(std::abs(dx), std::abs(dy));
    if (gdiv > 1) {
        dx /= gdiv;
        dy /= gdiv;
    }

    RayState s;
    s.point = physical_coordinates(g.start_side, g.p0, g.table);
    s.dx = dx;
    s.dy = dy;
    return s;
}

std::int64_t default_max_steps() {
    if (const char* env = std::getenv("BILLIARD_MAX_STEPS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return 10000;
}

namespace {

Trajectory run(const Generator& g, RayState ray, std::int64_t max_steps) {
    if (max_steps < 1) throw std::domain_error("simulate: max_steps must be at least 1");
    Trajectory traj;
    traj.generator = g;
    const RayState start = ray;

    int horizontal = 0, vertical = 0;
    for (std::int64_t k = 1; k <= max_steps; ++k) {
        StepEvent ev = step(ray, g.table);
        if (ev.is_vertex) {
            traj.kind = Trajectory::Kind::HitVertex;
            traj.terminal_vertex = ev.vertex;
            return traj;
        }
        traj.collisions.push_back(ev.collision);
        if (is_horizontal(ev.collision.side))
            ++horizontal;
        else
            ++vertical;
        ray = ev.next;
        if (ray == start) {
            traj.kind = Trajectory::Kind::Closed;
            traj.period = static_cast<int>(k);
            traj.horizontal_hits = horizontal;
            traj.vertical_hits = vertical;
            return traj;
        }
    }
    traj.kind = Trajectory::Kind::Truncated;
    traj.max_steps = max_steps;
    return traj;
}

} // namespace

Trajectory simulate(const Generator& g, std::int64_t max_steps) {
    return run(g, initial_ray(g), max_steps);
}

Trajectory simulate_reversed(const Generator& g, std::int64_t max_steps) {
    RayState ray = initial_ray(g);
    // A corner start reflects off both walls at once, so the reversed motion
    // retraces the forward ray; elsewhere reversal mirrors the tangential
    // component.
    if (!g.p0.is_zero()) {
        if (is_horizontal(g.start_side))
            ray.dx = -ray.dx;
        else
            ray.dy = -ray.dy;
    }
    return run(g, ray, max_steps);
}

} // namespace billiard
