#include "billiard/unfolding.hpp"

#include <numeric>
#include <stdexcept>

namespace billiard {

namespace {

constexpr std::int64_t euclid_mod(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

struct Parity {
    int x;
    int y;
};

Parity vertex_parity(Vertex v) {
    switch (v) {
        case Vertex::A: return {0, 0};
        case Vertex::B: return {1, 0};
        case Vertex::C: return {1, 1};
        case Vertex::D: return {0, 1};
    }
    throw std::logic_error("vertex_parity: bad vertex");
}

Vertex vertex_from_parity(int px, int py) {
    if (px == 0 && py == 0) return Vertex::A;
    if (px == 1 && py == 0) return Vertex::B;
    if (px == 1 && py == 1) return Vertex::C;
    return Vertex::D;
}

/// Diagonal fields from the unfolded endpoint displacement (n, m); no
/// argument validation so the degenerate edge slides (n = 0 or m = 0) can be
/// built internally.
GeneralizedDiagonal make_diagonal(std::int64_t m, std::int64_t n, Vertex start) {
    GeneralizedDiagonal d;
    d.m = m;
    d.n = n;
    d.start = start;
    Parity sp = vertex_parity(start);
    d.end = vertex_from_parity((sp.x + euclid_mod(n, 2)) % 2, (sp.y + euclid_mod(m, 2)) % 2);
    if (m >= 1 && n >= 1) {
        d.length = m + n - 2;
        d.horizontal_hits = m - 1;
        d.vertical_hits = n - 1;
    }
    return d;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m, new_r = euclid_mod(a, m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::logic_error("mod_inverse: arguments not coprime");
    return t < 0 ? t + m : t;
}

/// x folded into [0, 1] through the reflection tiling (period-2 triangle wave).
Rational fold_unit(const Rational& x) {
    std::int64_t k = (x / Rational(2)).floor();
    Rational r = x - Rational(2) * Rational(k);
    return r <= Rational(1) ? r : Rational(2) - r;
}

Vertex map_vertex_back(Vertex v, Side original_side) {
    switch (original_side) {
        case Side::AB:
            return v;
        case Side::BC:
            // inverse of the B->A quarter turn
            switch (v) {
                case Vertex::A: return Vertex::B;
                case Vertex::B: return Vertex::C;
                case Vertex::C: return Vertex::D;
                case Vertex::D: return Vertex::A;
            }
            break;
        case Side::DA:
            // inverse of the D->A quarter turn
            switch (v) {
                case Vertex::A: return Vertex::D;
                case Vertex::B: return Vertex::A;
                case Vertex::C: return Vertex::B;
                case Vertex::D: return Vertex::C;
            }
            break;
        case Side::CD:
            // half turn
            switch (v) {
                case Vertex::A: return Vertex::C;
                case Vertex::B: return Vertex::D;
                case Vertex::C: return Vertex::A;
                case Vertex::D: return Vertex::B;
            }
            break;
    }
    throw std::logic_error("map_vertex_back: bad side");
}

/// Re-expresses a classification made in the normalized AB frame in the
/// frame of the original start side. Vertical-side starts see horizontal
/// and vertical collision counts swapped.
OrbitClass relabel_back(OrbitClass c, Side original_side) {
    if (original_side == Side::AB) return c;
    bool swap = !is_horizontal(original_side);
    if (c.kind == OrbitClass::Kind::Periodic && swap) std::swap(c.p, c.q);
    if (c.kind == OrbitClass::Kind::Singular) {
        GeneralizedDiagonal& d = c.diagonal;
        if (swap) {
            std::swap(d.m, d.n);
            std::swap(d.horizontal_hits, d.vertical_hits);
        }
        d.start = map_vertex_back(d.start, original_side);
        d.end = map_vertex_back(d.end, original_side);
    }
    return c;
}

} // namespace

const char* tile_orientation_name(TileOrientation o) {
    switch (o) {
        case TileOrientation::ABCD: return "ABCD";
        case TileOrientation::BADC: return "BADC";
        case TileOrientation::CDAB: return "CDAB";
        case TileOrientation::DCBA: return "DCBA";
    }
    return "?";
}

TileOrientation tile_orientation(std::int64_t i, std::int64_t j) {
    bool i_odd = euclid_mod(i, 2) == 1;
    bool j_odd = euclid_mod(j, 2) == 1;
    if (!i_odd && !j_odd) return TileOrientation::ABCD;
    if (i_odd && !j_odd) return TileOrientation::BADC;
    if (i_odd && j_odd) return TileOrientation::CDAB;
    return TileOrientation::DCBA;
}

GeneralizedDiagonal generalized_diagonal(std::int64_t m, std::int64_t n, Vertex start) {
    if (m < 1 || n < 1)
        throw std::domain_error("generalized_diagonal: m and n must be positive");
    if (std::gcd(m, n) != 1)
        throw std::domain_error("generalized_diagonal: m and n must be coprime");
    return make_diagonal(m, n, start);
}

std::string class_name(int period, int p) {
    return "C_" + std::to_string(period) + "(" + std::to_string(p) + ")";
}

OrbitClass classify(const Generator& g) {
    OrbitClass result;
    if (!g.slope.is_exact()) {
        result.kind = OrbitClass::Kind::NonPeriodic;
        return result;
    }
    Generator gn = normalize_generator(g);

    if (gn.slope.is_vertical()) {
        if (gn.p0.is_zero()) {
            // Perpendicular launch from the corner: slides along the left
            // edge of the normalized square, A up to D.
            result.kind = OrbitClass::Kind::Singular;
            result.diagonal = make_diagonal(1, 0, Vertex::A);
            result.entry_offset = Rational(0);
        } else {
            result.kind = OrbitClass::Kind::Periodic;
            result.period = 2;
            result.p = 2;
            result.q = 0;
        }
        return relabel_back(result, g.start_side);
    }

    const std::int64_t m = gn.slope.value.num();
    const std::int64_t n = gn.slope.value.den();
    const std::int64_t a = gn.p0.num();
    const std::int64_t b = gn.p0.den();

    if (m % b == 0) {
        // p0 * m integral: start lies on a translated generalized diagonal.
        const std::int64_t l = detail::narrow_checked(
            static_cast<detail::int128>(a) * (m / b), "classify: offset overflow");  // 0 <= l < m
        // Backward along the unfolded line, the first lattice point below
        // the x-axis sits at (i0, -j0) with j0 * n = l (mod m).
        const std::int64_t j0 =
            static_cast<std::int64_t>(static_cast<detail::int128>(l) * mod_inverse(n, m) % m);
        const std::int64_t i0 =
            static_cast<std::int64_t>((static_cast<detail::int128>(l) - static_cast<detail::int128>(j0) * n) / m);
        Vertex start = vertex_from_parity(static_cast<int>(euclid_mod(i0, 2)),
                                          static_cast<int>(euclid_mod(j0, 2)));
        result.kind = OrbitClass::Kind::Singular;
        result.diagonal = make_diagonal(m, n, start);
        result.entry_offset = Rational(l);
    } else {
        result.kind = OrbitClass::Kind::Periodic;
        result.period = static_cast<int>(2 * (m + n));
        result.p = static_cast<int>(2 * m);
        result.q = static_cast<int>(2 * n);
    }
    return relabel_back(result, g.start_side);
}

std::vector<Rational> singular_starts(int p, int q) {
    if (std::gcd(p, q) != 2)
        throw std::domain_error("singular_starts: type (p, q) requires gcd(p, q) = 2");
    std::vector<Rational> starts;
    for (int l = 0; l < p / 2; ++l) starts.emplace_back(2 * l, p);
    return starts;
}

std::vector<LatticeCrossing> unfold(const Generator& g, int reflections) {
    if (reflections < 1) throw std::domain_error("unfold: reflections must be positive");
    Generator gn = normalize_generator(g);
    std::vector<LatticeCrossing> out;
    out.reserve(static_cast<std::size_t>(reflections));

    if (gn.slope.is_vertical()) {
        if (gn.p0.is_zero()) return out;  // straight into the lattice point (0, 1)
        for (int j = 1; j <= reflections; ++j) {
            LatticeCrossing c;
            c.point = {gn.p0, Rational(j)};
            c.vertical_grid = false;
            c.entered = tile_orientation(0, j);
            out.push_back(c);
        }
        return out;
    }

    const std::int64_t m = gn.slope.value.num();
    const std::int64_t n = gn.slope.value.den();
    const Rational p0 = gn.p0;
    // Ray (p0 + n t, m t): vertical grid lines x = i at t = (i - p0) / n,
    // horizontal ones y = j at t = j / m.
    std::int64_t i = 1, j = 1;
    while (static_cast<int>(out.size()) < reflections) {
        Rational tx = (Rational(i) - p0) / Rational(n);
        Rational ty = Rational(j) / Rational(m);
        if (tx == ty) return out;  // lattice point: singular orbit terminates
        LatticeCrossing c;
        if (tx < ty) {
            Rational y = Rational(m) * tx;
            c.point = {Rational(i), y};
            c.vertical_grid = true;
            c.entered = tile_orientation(i, y.floor());
            ++i;
        } else {
            Rational x = p0 + Rational(n) * ty;
            c.point = {x, Rational(j)};
            c.vertical_grid = false;
            c.entered = tile_orientation(x.floor(), j);
            ++j;
        }
        out.push_back(c);
    }
    return out;
}

CollisionPoint fold_crossing(const LatticeCrossing& crossing) {
    CollisionPoint c;
    if (crossing.vertical_grid) {
        std::int64_t i = crossing.point.x.floor();
        Rational y = fold_unit(crossing.point.y);
        if (euclid_mod(i, 2) == 1) {
            c.side = Side::BC;
            c.position = y;
        } else {
            c.side = Side::DA;
            c.position = Rational(1) - y;
        }
    } else {
        std::int64_t j = crossing.point.y.floor();
        Rational x = fold_unit(crossing.point.x);
        if (euclid_mod(j, 2) == 0) {
            c.side = Side::AB;
            c.position = x;
        } else {
            c.side = Side::CD;
            c.position = Rational(1) - x;
        }
    }
    c.angle_class = is_horizontal(c.side) ? AngleClass::Alpha : AngleClass::Complement;
    return c;
}

Interval fundamental_domain(int p, int q) {
    if (std::gcd(p, q) != 2)
        throw std::domain_error("fundamental_domain: type (p, q) requires gcd(p, q) = 2");
    if (p == 0)
        throw std::domain_error("fundamental_domain: type (0, 2) is parameterized on a vertical side");
    return {Rational(0), Rational(2, p)};
}

Generator canonical_representative(const Generator& g) {
    OrbitClass c = classify(g);
    if (!c.periodic())
        throw std::domain_error("canonical_representative: generator is not periodic");

    Generator gn = normalize_generator(g);
    TableSpec table =
        is_horizontal(g.start_side) ? g.table : TableSpec{g.table.rho.reciprocal()};

    if (gn.slope.is_vertical())
        return Generator(Side::AB, gn.p0, gn.slope, table);

    const std::int64_t m = gn.slope.value.num();
    const std::int64_t n = gn.slope.value.den();
    const Rational width(1, m);  // 2/p with p = 2m
    // The orbit meets AB at fold(p0 + 2 j n / m) for j = 0..m-1; exactly one
    // of those positions falls inside (0, 1/m).
    for (std::int64_t j = 0; j < m; ++j) {
        Rational shift = Rational(2) * Rational(j) * Rational(n) / Rational(m);
        Rational pos = fold_unit(gn.p0 + shift);
        if (pos > Rational(0) && pos < width)
            return Generator(Side::AB, pos, gn.slope, table);
    }
    throw std::logic_error("canonical_representative: no collision in the fundamental domain");
}

} // namespace billiard
