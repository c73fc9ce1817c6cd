#include "billiard/render.hpp"

#include <algorithm>
#include <stdexcept>

namespace billiard {

namespace {

using detail::int128;
using detail::uint128;

std::string u128_str(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

Rational ceil_rational(const Rational& r) {
    return Rational(-((-r).floor()));
}

std::string svg_header(std::int64_t width, std::int64_t height) {
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
    return s;
}

/// Shared y-flip: SVG y grows downward, table y upward.
struct Frame {
    std::int64_t scale;
    std::int64_t margin;
    Rational top;  // table-side y of the window's upper edge

    std::string x(const Rational& v) const {
        return format_decimal(Rational(margin) + Rational(scale) * v);
    }
    std::string y(const Rational& v) const {
        return format_decimal(Rational(margin) + Rational(scale) * (top - v));
    }
    std::string pair(const Point& p) const { return x(p.x) + "," + y(p.y); }
};

void append_line(std::string& svg, const Frame& f, const Point& a, const Point& b,
                 const std::string& color, const std::string& extra) {
    svg += "  <line x1=\"" + f.x(a.x) + "\" y1=\"" + f.y(a.y) + "\" x2=\"" + f.x(b.x) +
           "\" y2=\"" + f.y(b.y) + "\" stroke=\"" + color + "\"" + extra + "/>\n";
}

void append_dot(std::string& svg, const Frame& f, const Point& p, std::int64_t radius,
                const std::string& color) {
    svg += "  <circle cx=\"" + f.x(p.x) + "\" cy=\"" + f.y(p.y) + "\" r=\"" +
           std::to_string(radius) + "\" fill=\"" + color + "\"/>\n";
}

void append_label(std::string& svg, std::int64_t x, std::int64_t y, const char* text) {
    svg += "  <text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" font-family=\"sans-serif\" font-size=\"14\">" + text + "</text>\n";
}

const char* kArrowDef =
    "  <defs>\n"
    "    <marker id=\"dir\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" markerWidth=\"7\" "
    "markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
    "      <path d=\"M 0 1 L 9 5 L 0 9 z\"/>\n"
    "    </marker>\n"
    "  </defs>\n";

} // namespace

std::string format_decimal(const Rational& value, int places) {
    if (places < 0) throw std::domain_error("format_decimal: negative precision");
    uint128 pow10 = 1;
    for (int i = 0; i < places; ++i) pow10 *= 10;

    bool negative = value.num() < 0;
    uint128 num = detail::uabs128(value.num());
    uint128 den = static_cast<uint128>(value.den());

    uint128 scaled = num * pow10;
    uint128 q = scaled / den;
    uint128 rem = scaled % den;
    // round half to even
    if (2 * rem > den || (2 * rem == den && (q % 2) == 1)) ++q;

    uint128 integral = q / pow10;
    uint128 frac = q % pow10;

    std::string out;
    if (negative && q != 0) out += '-';
    out += u128_str(integral);
    if (places > 0) {
        std::string f = u128_str(frac);
        out += '.';
        out.append(static_cast<std::size_t>(places) - f.size(), '0');
        out += f;
    }
    return out;
}

std::string render_folded(const Trajectory& trajectory, const RenderStyle& style) {
    const Generator& g = trajectory.generator;
    const TableSpec& table = g.table;

    std::vector<Point> points;
    points.push_back(physical_coordinates(g.start_side, g.p0, table));
    for (const CollisionPoint& c : trajectory.collisions)
        points.push_back(physical_coordinates(c, table));
    if (trajectory.hit_vertex())
        points.push_back(vertex_coordinates(trajectory.terminal_vertex, table));
    if (points.size() < 2)
        throw std::domain_error("render_folded: trajectory has no segments");

    Frame f{style.scale, style.margin, table.rho};
    const std::int64_t width =
        2 * style.margin + (Rational(style.scale) * Rational(1)).floor();
    const std::int64_t height =
        2 * style.margin + ceil_rational(Rational(style.scale) * table.rho).floor();

    std::string svg = svg_header(width, height);
    svg += kArrowDef;

    svg += "  <rect x=\"" + f.x(Rational(0)) + "\" y=\"" + f.y(table.rho) + "\" width=\"" +
           format_decimal(Rational(style.scale)) + "\" height=\"" +
           format_decimal(Rational(style.scale) * table.rho) + "\" fill=\"none\" stroke=\"" +
           style.table_color + "\" stroke-width=\"2\"/>\n";

    svg += "  <polyline points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) svg += ' ';
        svg += f.pair(points[i]);
    }
    svg += "\" fill=\"none\" stroke=\"" + style.orbit_color + "\" stroke-width=\"1.5\"/>\n";

    // direction arrow on the first segment
    svg += "  <path d=\"M " + f.x(points[0].x) + " " + f.y(points[0].y) + " L " +
           f.x(points[1].x) + " " + f.y(points[1].y) + "\" fill=\"none\" stroke=\"" +
           style.orbit_color + "\" stroke-width=\"1.5\" marker-end=\"url(#dir)\"/>\n";

    if (!trajectory.closed() && !g.p0.is_zero())
        append_dot(svg, f, points[0], style.dot_radius, style.dot_color);
    for (const CollisionPoint& c : trajectory.collisions)
        append_dot(svg, f, physical_coordinates(c, table), style.dot_radius, style.dot_color);

    if (style.label_vertices) {
        const std::int64_t bottom = style.margin + ceil_rational(Rational(style.scale) * table.rho).floor();
        const std::int64_t right = style.margin + style.scale;
        append_label(svg, style.margin - 16, bottom + 18, "A");
        append_label(svg, right + 5, bottom + 18, "B");
        append_label(svg, right + 5, style.margin - 8, "C");
        append_label(svg, style.margin - 16, style.margin - 8, "D");
    }

    svg += "</svg>\n";
    return svg;
}

std::string render_unfolded(const Generator& g, int reflections, const RenderStyle& style) {
    std::vector<LatticeCrossing> crossings = unfold(g, reflections);
    Generator gn = normalize_generator(g);

    // End point of the drawn ray: the last crossing, or the terminating
    // lattice point when the orbit is singular and stops early.
    Point end{gn.p0, Rational(0)};
    if (!crossings.empty()) end = crossings.back().point;
    if (static_cast<int>(crossings.size()) < reflections) {
        if (gn.slope.is_vertical()) {
            end = {gn.p0, Rational(1)};
        } else {
            // first forward lattice point; exists within m horizontal steps
            const std::int64_t m = gn.slope.value.num();
            const std::int64_t n = gn.slope.value.den();
            for (std::int64_t j = 1; j <= m; ++j) {
                Rational x = gn.p0 + Rational(j) * Rational(n) / Rational(m);
                if (x.is_integer()) {
                    end = {x, Rational(j)};
                    break;
                }
            }
        }
    }

    // Lattice window [0, X] x [0, Y] covering every crossing and entered tile.
    Rational max_x = end.x, max_y = end.y;
    for (const LatticeCrossing& c : crossings) {
        Rational cx = c.vertical_grid ? c.point.x + Rational(1) : c.point.x;
        Rational cy = c.vertical_grid ? c.point.y : c.point.y + Rational(1);
        max_x = std::max(max_x, cx);
        max_y = std::max(max_y, cy);
    }
    const std::int64_t X = std::max<std::int64_t>(ceil_rational(max_x).floor(), 1);
    const std::int64_t Y = std::max<std::int64_t>(ceil_rational(max_y).floor(), 1);

    Frame f{style.scale, style.margin, Rational(Y)};
    const std::int64_t width = 2 * style.margin + style.scale * X;
    const std::int64_t height = 2 * style.margin + style.scale * Y;

    std::string svg = svg_header(width, height);

    if (style.shade_original_tiles) {
        for (std::int64_t j = 0; j < Y; ++j) {
            for (std::int64_t i = 0; i < X; ++i) {
                if (tile_orientation(i, j) != TileOrientation::ABCD) continue;
                svg += "  <rect x=\"" + f.x(Rational(i)) + "\" y=\"" + f.y(Rational(j + 1)) +
                       "\" width=\"" + std::to_string(style.scale) + "\" height=\"" +
                       std::to_string(style.scale) + "\" fill=\"" + style.tile_fill + "\"/>\n";
            }
        }
    }

    for (std::int64_t i = 0; i <= X; ++i)
        append_line(svg, f, {Rational(i), Rational(0)}, {Rational(i), Rational(Y)},
                    style.grid_color, " stroke-width=\"1\"");
    for (std::int64_t j = 0; j <= Y; ++j)
        append_line(svg, f, {Rational(0), Rational(j)}, {Rational(X), Rational(j)},
                    style.grid_color, " stroke-width=\"1\"");

    if (style.overlay_singular_starts && gn.slope.is_rational()) {
        const Rational m(gn.slope.value.num());
        const Rational n(gn.slope.value.den());
        for (const Rational& s : singular_starts(static_cast<int>(2 * m.num()),
                                                 static_cast<int>(2 * n.num()))) {
            // clip the ray from (s, 0) with slope m/n to the window
            Rational t_end = std::min((Rational(X) - s) / n, Rational(Y) / m);
            Point stop{s + n * t_end, m * t_end};
            append_line(svg, f, {s, Rational(0)}, stop, style.overlay_color,
                        " stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
        }
    }

    append_line(svg, f, {gn.p0, Rational(0)}, end, style.orbit_color, " stroke-width=\"2\"");
    for (const LatticeCrossing& c : crossings)
        append_dot(svg, f, c.point, style.dot_radius, style.dot_color);

    svg += "</svg>\n";
    return svg;
}

} // namespace billiard
