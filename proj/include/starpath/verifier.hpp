#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starpath/bitcover.hpp"
#include "starpath/geometry.hpp"

namespace starpath {

// What a claimed solution must satisfy. Required endpoints, when present,
// must be core stars.
struct RuleSet {
    BoardSpec board;
    StrokePolicy policy = StrokePolicy::QueenOnly;
    std::optional<Point> required_start;
    std::optional<Point> required_end;
    std::optional<int> required_stroke_count;
};

struct StrokeCheck {
    Point from;
    Point to;
    StrokeClass cls = StrokeClass::QueenLine;
    bool legal = false;
};

// Full legality/coverage report. All defects are reported at once; the
// verdict is valid iff every flag holds and nothing is uncovered.
struct VerifyReport {
    int stroke_count = 0;
    std::vector<StrokeCheck> strokes;
    int covered = 0;
    std::vector<Point> uncovered;  // in bit-index order
    bool endpoints_ok = false;
    bool stroke_count_ok = false;
    bool valid = false;
};

// Dash-separated squares, e.g. "c5-f8-c8". Pair squares may hold signed
// integers; dashes inside parentheses do not split.
Path parse_path(std::string_view text, const BoardSpec& board);

// Never rejects a merely invalid path; throws only on structural problems
// (rule endpoints off the core, mask cap exceeded).
VerifyReport verify(const Path& path, const RuleSet& rules);

// Single-line JSON with stable field order: verdict, stroke_count,
// covered, uncovered, strokes, endpoints_ok, stroke_count_ok.
std::string report_to_json(const VerifyReport& report, const BoardSpec& board);

}  // namespace starpath
