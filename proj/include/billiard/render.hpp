#pragma once

#include "billiard/table.hpp"
#include "billiard/unfolding.hpp"

#include <cstdint>
#include <string>

namespace billiard {

/// Fixed-precision decimal expansion of an exact rational: `places` digits
/// after the point, round-half-even, trailing digits kept so equal inputs
/// always print identical bytes.
std::string format_decimal(const Rational& value, int places = 6);

/// Deterministic styling knobs. All lengths are integer pixel counts so the
/// emitted coordinates stay exact rationals end to end.
struct RenderStyle {
    std::int64_t scale = 160;        // pixels per table unit
    std::int64_t margin = 24;
    std::int64_t dot_radius = 4;
    std::string table_color = "#1f5fbf";
    std::string orbit_color = "#111111";
    std::string dot_color = "#c42f2f";
    std::string tile_fill = "#dceefc";       // unfolded view: tiles in original orientation
    std::string grid_color = "#9aa7b4";
    std::string overlay_color = "#c42f2f";   // unfolded view: singular-start lines
    bool label_vertices = true;
    bool shade_original_tiles = true;
    bool overlay_singular_starts = false;    // unfolded view only
};

/// SVG picture of a simulated trajectory on its table: boundary, directed
/// polyline, collision dots, vertex labels. Open trajectories (vertex hits)
/// end at the terminal corner; closed ones return to the start point.
/// Rejects trajectories without a single segment. Byte-deterministic.
std::string render_folded(const Trajectory& trajectory, const RenderStyle& style = {});

/// SVG picture of the unfolded trajectory: unit grid over the crossed
/// window, tiles with the original orientation shaded, the straight
/// trajectory line, crossing dots, and optionally the translated
/// singular-start lines of the same slope. Byte-deterministic.
std::string render_unfolded(const Generator& g, int reflections, const RenderStyle& style = {});

} // namespace billiard
