#pragma once

#include "billiard/table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace billiard {

/// Orientation a lattice tile carries in the unfolded plane, named by where
/// the vertices A, B, C, D land when the original table is reflected into it.
enum class TileOrientation { ABCD, BADC, CDAB, DCBA };

const char* tile_orientation_name(TileOrientation o);

/// Orientation of the tile with bottom-left lattice corner (i, j), determined
/// by coordinate parity alone: (even, even) -> ABCD, (odd, even) -> BADC,
/// (odd, odd) -> CDAB, (even, odd) -> DCBA.
TileOrientation tile_orientation(std::int64_t i, std::int64_t j);

/// Vertex-to-vertex singular orbit. The unfolding of a diagonal with slope
/// m/n (gcd(m, n) = 1) started at a vertex runs straight to the lattice point
/// (n, m), giving m - 1 collisions on horizontal sides, n - 1 on vertical
/// ones, and length m + n - 2 in total. A diagonal never returns to its own
/// start vertex.
///
/// Perpendicular launches from a vertex degenerate to a slide along one edge;
/// they are encoded with n = 0 (or m = 0), zero hits, and length 0.
struct GeneralizedDiagonal {
    std::int64_t m = 1;
    std::int64_t n = 1;
    Vertex start = Vertex::A;
    Vertex end = Vertex::C;
    std::int64_t length = 0;
    std::int64_t horizontal_hits = 0;
    std::int64_t vertical_hits = 0;

    friend bool operator==(const GeneralizedDiagonal&, const GeneralizedDiagonal&) = default;
};

GeneralizedDiagonal generalized_diagonal(std::int64_t m, std::int64_t n, Vertex start = Vertex::A);

struct OrbitClass {
    enum class Kind { Periodic, Singular, NonPeriodic };

    Kind kind = Kind::NonPeriodic;

    // Periodic: least period K = p + q with gcd(p, q) = 2, p collisions on
    // the horizontal sides and q on the vertical ones; the class index of
    // C_K(p) is p. The limiting period-two types are (2,0) and (0,2).
    int period = 0;
    int p = 0;
    int q = 0;

    // Singular: the generalized diagonal the orbit lies on, plus the index l
    // of the translated copy the start point sits on (p0 = 2l/p).
    GeneralizedDiagonal diagonal;
    Rational entry_offset;

    bool periodic() const { return kind == Kind::Periodic; }
    bool singular() const { return kind == Kind::Singular; }
};

/// "C_K(p)" for a periodic orbit class.
std::string class_name(int period, int p);

/// Closed-form trichotomy for an exact generator, no simulation involved.
/// With normalized slope m/n: singular iff p0 * m is an integer (the starts
/// 2l/p for l = 0..p/2-1), otherwise periodic of type (2m, 2n) with least
/// period 2(m + n). Vertical slopes give the period-two limiting types.
/// Approximate slopes map to NonPeriodic.
OrbitClass classify(const Generator& g);

/// The start positions on the generator side that produce singular orbits
/// for type (p, q): {2l/p : l = 0..p/2-1}, ascending. Requires gcd(p, q) = 2
/// (the limiting types (2,0) and (0,2) are accepted; (0,2) has no singular
/// start other than the vertex itself and yields the empty list).
std::vector<Rational> singular_starts(int p, int q);

/// One crossing of the unfolded straight line with a unit-grid line, plus
/// the orientation of the tile being entered.
struct LatticeCrossing {
    Point point;                 // normalized coordinates; exactly one of x, y integral
    bool vertical_grid = false;  // true: crossing x = i, false: crossing y = j
    TileOrientation entered = TileOrientation::ABCD;
};

/// First `reflections` grid crossings of the unfolded trajectory of g, in
/// normalized coordinates. Stops early (shorter list) if the line runs into
/// a lattice point, i.e. the orbit is singular. Rejects approximate slopes.
std::vector<LatticeCrossing> unfold(const Generator& g, int reflections);

/// Folds a crossing back onto the table; the resulting sequence equals the
/// direct simulator's collision sequence.
CollisionPoint fold_crossing(const LatticeCrossing& crossing);

/// Half-open interval (0, 2/p) of start positions that parameterizes the
/// family C_{p+q}(p) exactly once: every periodic orbit with this slope has
/// exactly one collision on AB inside it. Requires gcd(p, q) = 2.
struct Interval {
    Rational lo;
    Rational hi;
};

Interval fundamental_domain(int p, int q);

/// The equivalent generator whose start position lies in the fundamental
/// domain (two generators are equivalent iff their orbits have the same
/// collision-point set). Requires classify(g) to be periodic. Vertical-side
/// inputs are first rotated onto AB, which inverts the table's aspect ratio.
Generator canonical_representative(const Generator& g);

} // namespace billiard
