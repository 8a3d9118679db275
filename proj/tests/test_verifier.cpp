#include <doctest.h>

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "starpath/verifier.hpp"

using namespace starpath;

namespace {

const BoardSpec kChess = make_board(8);
const char* kPaperPath = "c5-f8-c8-h3-b3-g8-g3-b8-b2-g2-a8-a1-h1-h8-d4";

RuleSet paper_rules() {
    RuleSet rules;
    rules.board = kChess;
    rules.policy = StrokePolicy::QueenOnly;
    rules.required_start = parse_square("c5", kChess);
    rules.required_end = parse_square("d4", kChess);
    rules.required_stroke_count = 14;
    return rules;
}

}  // namespace

TEST_CASE("parse_path") {
    const Path paper = parse_path(kPaperPath, kChess);
    CHECK(paper.waypoints.size() == 15);
    CHECK(paper.stroke_count() == 14);
    CHECK(paper.waypoints.front() == Point{3, 5});
    CHECK(paper.waypoints.back() == Point{4, 4});

    CHECK(parse_path("c5", kChess).stroke_count() == 0);

    SUBCASE("pair squares keep their inner dashes") {
        const BoardSpec wide = make_board(3, 2);
        const Path p = parse_path("(-1,2)-c3-(0,-1)", wide);
        REQUIRE(p.waypoints.size() == 3);
        CHECK(p.waypoints[0] == Point{-1, 2});
        CHECK(p.waypoints[1] == Point{3, 3});
        CHECK(p.waypoints[2] == Point{0, -1});
        CHECK(format_path(p, wide) == "(-1,2)-c3-(0,-1)");
    }

    SUBCASE("rejects degenerate and malformed input") {
        CHECK_THROWS_AS(parse_path("c5-c5", kChess), std::invalid_argument);
        CHECK_THROWS_AS(parse_path("", kChess), std::invalid_argument);
        CHECK_THROWS_AS(parse_path("c5--f8", kChess), std::invalid_argument);
        CHECK_THROWS_AS(parse_path("c5-j9", kChess), std::invalid_argument);
    }
}

TEST_CASE("the 14-stroke queen path verifies valid") {
    const VerifyReport report = verify(parse_path(kPaperPath, kChess), paper_rules());
    CHECK(report.valid);
    CHECK(report.stroke_count == 14);
    CHECK(report.covered == 64);
    CHECK(report.uncovered.empty());
    CHECK(report.endpoints_ok);
    CHECK(report.stroke_count_ok);
    REQUIRE(report.strokes.size() == 14);
    for (const StrokeCheck& s : report.strokes) {
        CHECK(s.cls == StrokeClass::QueenLine);
        CHECK(s.legal);
    }
}

TEST_CASE("truncating the final stroke breaks coverage and endpoints") {
    Path trunc = parse_path(kPaperPath, kChess);
    trunc.waypoints.pop_back();
    const VerifyReport report = verify(trunc, paper_rules());
    CHECK_FALSE(report.valid);
    CHECK(report.covered == 62);
    REQUIRE(report.uncovered.size() == 2);
    // Bit-index order: d4 = 27 before f6 = 45.
    CHECK(report.uncovered[0] == parse_square("d4", kChess));
    CHECK(report.uncovered[1] == parse_square("f6", kChess));
    CHECK_FALSE(report.endpoints_ok);
    CHECK_FALSE(report.stroke_count_ok);
    CHECK(report.covered + static_cast<int>(report.uncovered.size()) == 64);
}

TEST_CASE("non-queen strokes are flagged, not fatal") {
    RuleSet rules;
    rules.board = kChess;
    const Path p = parse_path("c5-d8-d1", kChess);
    const VerifyReport report = verify(p, rules);
    CHECK_FALSE(report.valid);
    REQUIRE(report.strokes.size() == 2);
    CHECK(report.strokes[0].cls == StrokeClass::GeneralLine);
    CHECK_FALSE(report.strokes[0].legal);
    CHECK(report.strokes[1].cls == StrokeClass::QueenLine);
    CHECK(report.strokes[1].legal);

    SUBCASE("relaxing the policy never invalidates a stroke") {
        rules.policy = StrokePolicy::GeneralWithinMargin;
        const VerifyReport relaxed = verify(p, rules);
        for (const StrokeCheck& s : relaxed.strokes) CHECK(s.legal);
        const VerifyReport paper =
            verify(parse_path(kPaperPath, kChess), RuleSet{kChess,
                                                    StrokePolicy::GeneralWithinMargin,
                                                    {}, {}, {}});
        CHECK(paper.valid);
    }
}

TEST_CASE("reversal preserves coverage and legality, not endpoints") {
    const Path paper = parse_path(kPaperPath, kChess);
    const Path rev = reverse_path(paper);
    const VerifyReport fwd = verify(paper, paper_rules());
    const VerifyReport bwd = verify(rev, paper_rules());
    CHECK(bwd.covered == fwd.covered);
    CHECK(bwd.strokes.size() == fwd.strokes.size());
    for (const StrokeCheck& s : bwd.strokes) CHECK(s.legal);
    CHECK_FALSE(bwd.endpoints_ok);
    CHECK_FALSE(bwd.valid);

    RuleSet swapped = paper_rules();
    std::swap(swapped.required_start, swapped.required_end);
    CHECK(verify(rev, swapped).valid);
}

TEST_CASE("endpoint and stroke-count rules") {
    RuleSet rules;
    rules.board = kChess;
    const Path p = parse_path("a1-h8", kChess);

    CHECK(verify(p, rules).endpoints_ok);  // nothing required

    rules.required_start = parse_square("a1", kChess);
    CHECK(verify(p, rules).endpoints_ok);
    rules.required_end = parse_square("h1", kChess);
    CHECK_FALSE(verify(p, rules).endpoints_ok);

    rules.required_end = parse_square("h8", kChess);
    rules.required_stroke_count = 1;
    CHECK(verify(p, rules).stroke_count_ok);
    rules.required_stroke_count = 2;  // exact equality, not <=
    CHECK_FALSE(verify(p, rules).stroke_count_ok);

    SUBCASE("required endpoints must be core stars") {
        RuleSet bad;
        bad.board = make_board(3, 1);
        bad.policy = StrokePolicy::GeneralWithinMargin;
        bad.required_start = Point{0, 0};
        CHECK_THROWS_AS(verify(parse_path("a1-c3", bad.board), bad),
                        std::invalid_argument);
    }
}

TEST_CASE("nine-dots style witness verifies under the margin policy") {
    const BoardSpec nine = make_board(3, 1);
    RuleSet rules;
    rules.board = nine;
    rules.policy = StrokePolicy::GeneralWithinMargin;
    const VerifyReport report = verify(parse_path("(0,0)-c3-(0,3)-(3,0)-(3,4)", nine), rules);
    CHECK(report.valid);
    CHECK(report.covered == 9);
    CHECK(report.stroke_count == 4);
}

TEST_CASE("report_to_json schema") {
    const VerifyReport report = verify(parse_path(kPaperPath, kChess), paper_rules());
    const std::string text = report_to_json(report, kChess);
    CHECK(text.find("\"verdict\":\"valid\"") != std::string::npos);
    CHECK(text.find("\"covered\":64") != std::string::npos);

    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["stroke_count"] == 14);
    CHECK(parsed["uncovered"].empty());
    CHECK(parsed["strokes"].size() == 14);
    CHECK(parsed["strokes"][0]["from"] == "c5");
    CHECK(parsed["strokes"][0]["class"] == "queen");
    CHECK(parsed["endpoints_ok"] == true);
    CHECK(parsed["stroke_count_ok"] == true);

    SUBCASE("field order is stable") {
        CHECK(text.find("\"verdict\"") < text.find("\"stroke_count\""));
        CHECK(text.find("\"stroke_count\"") < text.find("\"covered\""));
        CHECK(text.find("\"covered\"") < text.find("\"uncovered\""));
        CHECK(text.find("\"uncovered\"") < text.find("\"strokes\""));
        CHECK(text.find("\"endpoints_ok\"") < text.find("\"stroke_count_ok\""));
    }

    SUBCASE("uncovered squares print in bit-index order") {
        Path trunc = parse_path(kPaperPath, kChess);
        trunc.waypoints.pop_back();
        const auto j = nlohmann::json::parse(
            report_to_json(verify(trunc, paper_rules()), kChess));
        CHECK(j["verdict"] == "invalid");
        CHECK(j["uncovered"] == nlohmann::json::array({"d4", "f6"}));
    }

    SUBCASE("a bare waypoint covers one star and misses 63") {
        RuleSet rules;
        rules.board = kChess;
        const auto j = nlohmann::json::parse(
            report_to_json(verify(parse_path("c5", kChess), rules), kChess));
        CHECK(j["covered"] == 1);
        CHECK(j["uncovered"].size() == 63);
    }
}
