#include "billiard/table.hpp"

#include <doctest.h>

#include <set>

using namespace billiard;

TEST_CASE("physical coordinates per side, measured from the first-named vertex") {
    TableSpec square{Rational(1)};
    CHECK(physical_coordinates(Side::AB, Rational(1, 5), square) ==
          Point{Rational(1, 5), Rational(0)});
    CHECK(physical_coordinates(Side::BC, Rational(2, 5), square) ==
          Point{Rational(1), Rational(2, 5)});

    TableSpec tall{Rational(3, 2)};
    CHECK(physical_coordinates(Side::CD, Rational(0), tall) == Point{Rational(1), Rational(3, 2)});
    CHECK(physical_coordinates(Side::BC, Rational(1, 2), tall) ==
          Point{Rational(1), Rational(3, 4)});
    CHECK(physical_coordinates(Side::DA, Rational(1, 3), tall) == Point{Rational(0), Rational(1)});

    CHECK_THROWS_AS(physical_coordinates(Side::AB, Rational(3, 2), square), std::domain_error);
}

TEST_CASE("physical coordinates are injective over a position grid") {
    TableSpec table{Rational(3, 4)};
    std::set<std::pair<std::string, std::string>> seen;
    int count = 0;
    for (Side side : {Side::AB, Side::BC, Side::CD, Side::DA}) {
        for (int a = 1; a < 16; ++a) {
            Point p = physical_coordinates(side, Rational(a, 16), table);
            seen.insert({p.x.str(), p.y.str()});
            ++count;
        }
    }
    CHECK(static_cast<int>(seen.size()) == count);
}

TEST_CASE("vertex coordinates") {
    TableSpec tall{Rational(2)};
    CHECK(vertex_coordinates(Vertex::A, tall) == Point{Rational(0), Rational(0)});
    CHECK(vertex_coordinates(Vertex::B, tall) == Point{Rational(1), Rational(0)});
    CHECK(vertex_coordinates(Vertex::C, tall) == Point{Rational(1), Rational(2)});
    CHECK(vertex_coordinates(Vertex::D, tall) == Point{Rational(0), Rational(2)});
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(Generator(Side::AB, Rational(1), SlopeDescriptor::vertical()),
                    std::domain_error);
    CHECK_THROWS_AS(Generator(Side::AB, Rational(-1, 4), SlopeDescriptor::vertical()),
                    std::domain_error);
    CHECK_THROWS_AS(SlopeDescriptor::rational(Rational(-1, 2)), std::domain_error);
    CHECK_THROWS_AS(SlopeDescriptor::rational(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(TableSpec{Rational(0)}, std::domain_error);
    CHECK_THROWS_AS(TableSpec{Rational(-1)}, std::domain_error);
}

TEST_CASE("normalize_generator maps a rectangle generator onto the square") {
    // physical slope 3/4 on the 1:3/2 table is normalized slope 1/2
    Rational rho(3, 2);
    Rational physical(3, 4);
    Generator g(Side::AB, Rational(7, 10), SlopeDescriptor::rational(physical / rho),
                TableSpec{rho});
    Generator n = normalize_generator(g);
    CHECK(n.start_side == Side::AB);
    CHECK(n.p0 == Rational(7, 10));
    CHECK(n.slope.value == Rational(1, 2));
    CHECK(n.table.rho == Rational(1));
}

TEST_CASE("normalize_generator is the identity on square AB generators") {
    Generator g(Side::AB, Rational(3, 20), SlopeDescriptor::rational(Rational(3, 2)));
    CHECK(normalize_generator(g) == g);
}

TEST_CASE("normalize_generator rotates vertical-side starts onto AB") {
    Generator g(Side::BC, Rational(1, 2), SlopeDescriptor::rational(Rational(2)));
    Generator n = normalize_generator(g);
    CHECK(n.start_side == Side::AB);
    CHECK(n.p0 == Rational(1, 2));
    CHECK(n.slope.value == Rational(1, 2));

    Generator da(Side::DA, Rational(1, 3), SlopeDescriptor::rational(Rational(3, 4)));
    CHECK(normalize_generator(da).slope.value == Rational(4, 3));
    CHECK(normalize_generator(da).p0 == Rational(1, 3));
}

TEST_CASE("normalize_generator is idempotent") {
    for (Side side : {Side::AB, Side::BC, Side::CD, Side::DA}) {
        Generator g(side, Rational(2, 7), SlopeDescriptor::rational(Rational(5, 3)),
                    TableSpec{Rational(4, 3)});
        Generator once = normalize_generator(g);
        CHECK(normalize_generator(once) == once);
    }
}

TEST_CASE("normalize_generator rejects approximate slopes") {
    Generator g(Side::AB, Rational(1, 4), SlopeDescriptor::irrational(1.4142135));
    CHECK_THROWS_AS(normalize_generator(g), std::domain_error);
}
