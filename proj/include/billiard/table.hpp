#pragma once

#include "billiard/rational.hpp"

#include <string>
#include <vector>

namespace billiard {

// Vertex layout, with AB the unit-length base:
//
//   D --------- C          A = (0, 0)    B = (1, 0)
//   |           |          C = (1, rho)  D = (0, rho)
//   A --------- B
//
// AB and CD are the horizontal sides, BC and DA the vertical ones. Arc
// positions along a side are normalized to [0, 1] of that side's length and
// measured from the side's first-named vertex (AB from A, BC from B, CD from
// C, DA from D).

enum class Side { AB, BC, CD, DA };
enum class Vertex { A, B, C, D };
enum class AngleClass { Alpha, Complement };

bool is_horizontal(Side s);
const char* side_name(Side s);
const char* vertex_name(Vertex v);

/// Rectangle with base 1 and height rho; rho = 1 is the square.
struct TableSpec {
    Rational rho{1};

    TableSpec() = default;
    explicit TableSpec(Rational r);

    bool is_square() const { return rho == Rational(1); }
};

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

Point vertex_coordinates(Vertex v, const TableSpec& table);

/// Direction descriptor of a trajectory line, in normalized (unit-square)
/// coordinates where the table height is rescaled to 1.
///
/// - NormalizedRational s: the ambient slope of the unfolded line relative to
///   the horizontal sides, s = tan(alpha0) / rho for a horizontal-side start.
///   The physical slope is recovered as rho * s. Always positive: the
///   direction of travel along the line is not part of the descriptor.
/// - Vertical: perpendicular to the start side (alpha0 = pi/2 against it).
///   On AB/CD this is the vertical period-two bouncer; on BC/DA it is the
///   horizontal one.
/// - IrrationalApprox: a floating slope for display purposes only; every
///   exact-arithmetic operation rejects it.
struct SlopeDescriptor {
    enum class Kind { NormalizedRational, Vertical, IrrationalApprox };

    Kind kind = Kind::Vertical;
    Rational value;        // NormalizedRational only; > 0
    double approx = 0.0;   // IrrationalApprox only

    static SlopeDescriptor rational(Rational s);
    static SlopeDescriptor vertical();
    static SlopeDescriptor irrational(double v);

    bool is_rational() const { return kind == Kind::NormalizedRational; }
    bool is_vertical() const { return kind == Kind::Vertical; }
    bool is_exact() const { return kind != Kind::IrrationalApprox; }

    friend bool operator==(const SlopeDescriptor& a, const SlopeDescriptor& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::NormalizedRational) return a.value == b.value;
        if (a.kind == Kind::IrrationalApprox) return a.approx == b.approx;
        return true;
    }
};

/// Initial condition: start point at arc position p0 in [0, 1) along
/// start_side, leaving along the line described by slope. p0 = 0 starts at
/// the side's first-named vertex and is legal; it traces a singular orbit.
struct Generator {
    Side start_side = Side::AB;
    Rational p0;
    SlopeDescriptor slope;
    TableSpec table;

    Generator() = default;
    Generator(Side side, Rational position, SlopeDescriptor s, TableSpec t = TableSpec{});

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.start_side == b.start_side && a.p0 == b.p0 && a.slope == b.slope &&
               a.table.rho == b.table.rho;
    }
};

struct CollisionPoint {
    Side side = Side::AB;
    Rational position;      // strictly inside (0, 1); a corner is a Vertex event
    AngleClass angle_class = AngleClass::Alpha;  // Alpha iff side is horizontal

    friend bool operator==(const CollisionPoint&, const CollisionPoint&) = default;
};

bool operator<(const CollisionPoint& a, const CollisionPoint& b);

struct Trajectory {
    enum class Kind { Closed, HitVertex, Truncated };

    Generator generator;
    std::vector<CollisionPoint> collisions;
    Kind kind = Kind::Truncated;

    // Closed only. period == collisions.size(); the final collision repeats
    // the start point with the starting direction.
    int period = 0;
    int horizontal_hits = 0;  // p
    int vertical_hits = 0;    // q

    // HitVertex only. collisions holds the non-vertex collisions.
    Vertex terminal_vertex = Vertex::A;

    long max_steps = 0;  // Truncated only

    bool closed() const { return kind == Kind::Closed; }
    bool hit_vertex() const { return kind == Kind::HitVertex; }
};

/// Maps (side, arc position) to Cartesian coordinates. Accepts the closed
/// interval [0, 1] so trajectory endpoints at corners can be rendered.
Point physical_coordinates(Side side, const Rational& position, const TableSpec& table);
Point physical_coordinates(const CollisionPoint& c, const TableSpec& table);

/// Equivalent generator on the unit square. Horizontal-side starts keep p0
/// and slope; vertical-side starts are rotated onto AB (BC via B->A, DA via
/// D->A), which keeps p0, inverts a rational slope to 1/s, and inverts the
/// effective aspect ratio (already absorbed here since the result is the
/// square). Rejects IrrationalApprox slopes.
Generator normalize_generator(const Generator& g);

} // namespace billiard
