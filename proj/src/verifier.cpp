#include "starpath/verifier.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace starpath {

namespace {

bool stroke_allowed(StrokeClass cls, StrokePolicy policy) {
    if (policy == StrokePolicy::GeneralWithinMargin) return true;
    return cls == StrokeClass::QueenLine;
}

}  // namespace

Path parse_path(std::string_view text, const BoardSpec& board) {
    std::vector<Point> waypoints;
    std::size_t token_start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size()) {
            const char c = text[i];
            if (c == '(') ++depth;
            else if (c == ')') --depth;
            if (!(c == '-' && depth == 0)) continue;
        }
        const auto token = text.substr(token_start, i - token_start);
        waypoints.push_back(parse_square(token, board));
        token_start = i + 1;
    }
    return make_path(std::move(waypoints), board);
}

VerifyReport verify(const Path& path, const RuleSet& rules) {
    const BoardSpec& board = rules.board;
    if (rules.required_start && !board.on_core(*rules.required_start))
        throw std::invalid_argument("required start is not a core star");
    if (rules.required_end && !board.on_core(*rules.required_end))
        throw std::invalid_argument("required end is not a core star");

    VerifyReport report;
    report.stroke_count = path.stroke_count();

    CoverageMask covered = 0;
    bool strokes_ok = true;
    if (path.waypoints.size() == 1) {
        const Point p = path.waypoints.front();
        if (board.on_core(p)) covered |= CoverageMask{1} << bit_index(p, board);
    }
    for (const Stroke& s : strokes_of(path)) {
        StrokeCheck check;
        check.from = s.from;
        check.to = s.to;
        check.cls = stroke_class(s);
        check.legal = stroke_allowed(check.cls, rules.policy);
        strokes_ok = strokes_ok && check.legal;
        covered |= mask_of(cells_on_stroke(s, board), board);
        report.strokes.push_back(check);
    }

    report.covered = std::popcount(covered);
    const CoverageMask missing = full_mask(board) & ~covered;
    for (CoverageMask rest = missing; rest != 0; rest &= rest - 1)
        report.uncovered.push_back(point_of_bit(std::countr_zero(rest), board));

    report.endpoints_ok =
        (!rules.required_start || path.waypoints.front() == *rules.required_start) &&
        (!rules.required_end || path.waypoints.back() == *rules.required_end);
    report.stroke_count_ok =
        !rules.required_stroke_count || report.stroke_count == *rules.required_stroke_count;
    report.valid = strokes_ok && report.endpoints_ok && report.stroke_count_ok &&
                   report.uncovered.empty();
    return report;
}

std::string report_to_json(const VerifyReport& report, const BoardSpec& board) {
    nlohmann::ordered_json j;
    j["verdict"] = report.valid ? "valid" : "invalid";
    j["stroke_count"] = report.stroke_count;
    j["covered"] = report.covered;
    auto uncovered = nlohmann::ordered_json::array();
    for (const Point p : report.uncovered) uncovered.push_back(format_square(p, board));
    j["uncovered"] = std::move(uncovered);
    auto strokes = nlohmann::ordered_json::array();
    for (const StrokeCheck& check : report.strokes) {
        nlohmann::ordered_json s;
        s["from"] = format_square(check.from, board);
        s["to"] = format_square(check.to, board);
        s["class"] = check.cls == StrokeClass::QueenLine ? "queen" : "general";
        s["legal"] = check.legal;
        strokes.push_back(std::move(s));
    }
    j["strokes"] = std::move(strokes);
    j["endpoints_ok"] = report.endpoints_ok;
    j["stroke_count_ok"] = report.stroke_count_ok;
    return j.dump();
}

}  // namespace starpath
