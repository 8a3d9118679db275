#pragma once

#include <string>
#include <vector>

#include "starpath/geometry.hpp"

namespace starpath {

struct RenderOptions {
    int cell_size = 40;
    int star_radius = 6;
    bool show_coordinates = false;
    std::vector<Point> highlight;  // empty: highlight the path endpoints
};

// Core stars only, rank n at the top, one space between glyphs. Waypoints
// are marked ('S' start, 'E' end, 'o' interior); strokes are not drawn.
std::string render_ascii(const BoardSpec& board);
std::string render_ascii(const Path& path, const BoardSpec& board);

// Deterministic standalone SVG: one circle per core star (highlighted
// stars get class "star light"), one polyline through the waypoints.
std::string render_svg(const BoardSpec& board, const RenderOptions& options = {});
std::string render_svg(const Path& path, const BoardSpec& board,
                       const RenderOptions& options = {});

}  // namespace starpath
