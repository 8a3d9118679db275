#include "starpath/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace starpath {

namespace {

std::string render_ascii_impl(const Path* path, const BoardSpec& board) {
    std::ostringstream out;
    for (int rank = board.n; rank >= 1; --rank) {
        for (int file = 1; file <= board.n; ++file) {
            const Point p{file, rank};
            char glyph = '*';
            if (path != nullptr) {
                const auto& w = path->waypoints;
                for (std::size_t i = 1; i + 1 < w.size(); ++i)
                    if (w[i] == p) glyph = 'o';
                if (w.back() == p) glyph = 'E';
                if (w.front() == p) glyph = 'S';
            }
            if (file > 1) out << ' ';
            out << glyph;
        }
        out << '\n';
    }
    return out.str();
}

std::string render_svg_impl(const Path* path, const BoardSpec& board,
                            const RenderOptions& options) {
    if (options.cell_size <= 0) throw std::invalid_argument("cell_size must be positive");
    const int cell = options.cell_size;
    const int half = cell / 2;
    const int lo = board.lattice_lo();
    const int hi = board.lattice_hi();
    const int side = board.span() * cell;
    const auto px = [&](int file) { return (file - lo) * cell + half; };
    const auto py = [&](int rank) { return (hi - rank) * cell + half; };

    std::vector<Point> light = options.highlight;
    if (light.empty() && path != nullptr)
        light = {path->waypoints.front(), path->waypoints.back()};

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side
        << "\" height=\"" << side << "\" viewBox=\"0 0 " << side << ' ' << side
        << "\">\n";
    out << "<rect width=\"" << side << "\" height=\"" << side
        << "\" fill=\"#ffffff\"/>\n";
    for (int rank = board.n; rank >= 1; --rank) {
        for (int file = 1; file <= board.n; ++file) {
            const Point p{file, rank};
            const bool lit = std::find(light.begin(), light.end(), p) != light.end();
            out << "<circle class=\"" << (lit ? "star light" : "star")
                << "\" cx=\"" << px(file) << "\" cy=\"" << py(rank) << "\" r=\""
                << options.star_radius << "\" fill=\""
                << (lit ? "#f0c040" : "#303030") << "\"";
            if (lit) out << " stroke=\"#303030\" stroke-width=\"1\"";
            out << "/>\n";
        }
    }
    if (options.show_coordinates) {
        for (int file = 1; file <= board.n; ++file)
            out << "<text class=\"coord\" x=\"" << px(file) << "\" y=\""
                << py(1) + half - 2 << "\" font-size=\"" << cell / 3
                << "\" text-anchor=\"middle\">" << static_cast<char>('a' + file - 1)
                << "</text>\n";
        for (int rank = 1; rank <= board.n; ++rank)
            out << "<text class=\"coord\" x=\"" << px(1) - half + 2 << "\" y=\""
                << py(rank) + cell / 6 << "\" font-size=\"" << cell / 3
                << "\">" << rank << "</text>\n";
    }
    if (path != nullptr) {
        out << "<polyline class=\"path\" fill=\"none\" stroke=\"#b03030\" "
               "stroke-width=\"2\" points=\"";
        bool first = true;
        for (const Point w : path->waypoints) {
            if (!first) out << ' ';
            out << px(w.file) << ',' << py(w.rank);
            first = false;
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_ascii(const BoardSpec& board) {
    return render_ascii_impl(nullptr, board);
}

std::string render_ascii(const Path& path, const BoardSpec& board) {
    return render_ascii_impl(&path, board);
}

std::string render_svg(const BoardSpec& board, const RenderOptions& options) {
    return render_svg_impl(nullptr, board, options);
}

std::string render_svg(const Path& path, const BoardSpec& board,
                       const RenderOptions& options) {
    return render_svg_impl(&path, board, options);
}

}  // namespace starpath
