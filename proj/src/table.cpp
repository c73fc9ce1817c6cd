#include "billiard/table.hpp"

namespace billiard {

bool is_horizontal(Side s) {
    return s == Side::AB || s == Side::CD;
}

const char* side_name(Side s) {
    switch (s) {
        case Side::AB: return "AB";
        case Side::BC: return "BC";
        case Side::CD: return "CD";
        case Side::DA: return "DA";
    }
    return "?";
}

const char* vertex_name(Vertex v) {
    switch (v) {
        case Vertex::A: return "A";
        case Vertex::B: return "B";
        case Vertex::C: return "C";
        case Vertex::D: return "D";
    }
    return "?";
}

TableSpec::TableSpec(Rational r) : rho(r) {
    if (!(rho > Rational(0))) throw std::domain_error("TableSpec: aspect ratio must be positive");
}

Point vertex_coordinates(Vertex v, const TableSpec& table) {
    switch (v) {
        case Vertex::A: return {Rational(0), Rational(0)};
        case Vertex::B: return {Rational(1), Rational(0)};
        case Vertex::C: return {Rational(1), table.rho};
        case Vertex::D: return {Rational(0), table.rho};
    }
    throw std::logic_error("vertex_coordinates: bad vertex");
}

SlopeDescriptor SlopeDescriptor::rational(Rational s) {
    if (!(s > Rational(0)))
        throw std::domain_error("SlopeDescriptor: rational slope must be positive");
    SlopeDescriptor d;
    d.kind = Kind::NormalizedRational;
    d.value = s;
    return d;
}

SlopeDescriptor SlopeDescriptor::vertical() {
    SlopeDescriptor d;
    d.kind = Kind::Vertical;
    return d;
}

SlopeDescriptor SlopeDescriptor::irrational(double v) {
    if (!(v > 0.0)) throw std::domain_error("SlopeDescriptor: approximate slope must be positive");
    SlopeDescriptor d;
    d.kind = Kind::IrrationalApprox;
    d.approx = v;
    return d;
}

Generator::Generator(Side side, Rational position, SlopeDescriptor s, TableSpec t)
    : start_side(side), p0(position), slope(s), table(t) {
    if (p0 < Rational(0) || p0 >= Rational(1))
        throw std::domain_error("Generator: start position must lie in [0, 1)");
}

bool operator<(const CollisionPoint& a, const CollisionPoint& b) {
    if (a.side != b.side) return static_cast<int>(a.side) < static_cast<int>(b.side);
    return a.position < b.position;
}

Point physical_coordinates(Side side, const Rational& position, const TableSpec& table) {
    if (position < Rational(0) || position > Rational(1))
        throw std::domain_error("physical_coordinates: position outside [0, 1]");
    const Rational& rho = table.rho;
    switch (side) {
        case Side::AB: return {position, Rational(0)};
        case Side::BC: return {Rational(1), position * rho};
        case Side::CD: return {Rational(1) - position, rho};
        case Side::DA: return {Rational(0), (Rational(1) - position) * rho};
    }
    throw std::logic_error("physical_coordinates: bad side");
}

Point physical_coordinates(const CollisionPoint& c, const TableSpec& table) {
    return physical_coordinates(c.side, c.position, table);
}

Generator normalize_generator(const Generator& g) {
    if (!g.slope.is_exact())
        throw std::domain_error("normalize_generator: approximate slopes are not classifiable");
    SlopeDescriptor slope = g.slope;
    if (!is_horizontal(g.start_side) && slope.is_rational())
        slope = SlopeDescriptor::rational(slope.value.reciprocal());
    // The quarter-turn (BC) / three-quarter-turn (DA) / half-turn (CD)
    // relabelings all preserve the arc position measured from the side's
    // first-named vertex.
    return Generator(Side::AB, g.p0, slope, TableSpec{Rational(1)});
}

} // namespace billiard
