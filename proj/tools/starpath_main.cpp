#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starpath/oracle.hpp"
#include "starpath/render.hpp"
#include "starpath/solver.hpp"
#include "starpath/verifier.hpp"

namespace {

using starpath::BoardSpec;
using starpath::Path;
using starpath::Point;
using starpath::StrokePolicy;

struct SharedFlags {
    int board = 8;
    int margin = 0;
    std::string policy = "queen";

    BoardSpec spec() const { return starpath::make_board(board, margin); }
    StrokePolicy policy_enum() const {
        return policy == "general" ? StrokePolicy::GeneralWithinMargin
                                   : StrokePolicy::QueenOnly;
    }
    bool paper_instance() const {
        return board == 8 && margin == 0 && policy == "queen";
    }
};

void add_shared(CLI::App* cmd, SharedFlags& flags) {
    cmd->add_option("--board", flags.board, "Board side length")
        ->capture_default_str();
    cmd->add_option("--margin", flags.margin,
                    "Extra turning-point band beyond the stars")
        ->capture_default_str();
    cmd->add_option("--policy", flags.policy, "Stroke policy")
        ->check(CLI::IsMember({"queen", "general"}))
        ->capture_default_str();
}

int emit_error(const std::exception& e) {
    nlohmann::ordered_json j;
    j["error"] = e.what();
    std::cout << j.dump() << '\n';
    return 1;
}

std::optional<Point> resolve_endpoint(const std::string& text, const char* fallback,
                                      const SharedFlags& flags, const BoardSpec& board) {
    std::string value = text;
    if (value.empty() && fallback != nullptr && flags.paper_instance())
        value = fallback;
    if (value.empty() || value == "any") return std::nullopt;
    return starpath::parse_square(value, board);
}

const char* status_name(starpath::SearchStatus status) {
    return status == starpath::SearchStatus::Complete ? "complete"
                                                      : "budget_exhausted";
}

void print_summary(const starpath::SearchResult& result) {
    nlohmann::ordered_json j;
    j["status"] = status_name(result.status);
    j["solutions"] = result.solution_count;
    if (result.best_k) j["best_k"] = *result.best_k;
    j["nodes"] = result.nodes_expanded;
    std::cout << j.dump() << '\n';
    std::cerr << "elapsed " << result.elapsed_seconds << "s, nodes "
              << result.nodes_expanded << '\n';
}

struct VerifyFlags {
    SharedFlags shared;
    std::string path;
    std::string start;
    std::string end;
    int strokes = -1;
};

int run_verify(const VerifyFlags& f) {
    const BoardSpec board = f.shared.spec();
    starpath::RuleSet rules;
    rules.board = board;
    rules.policy = f.shared.policy_enum();
    if (!f.start.empty()) rules.required_start = starpath::parse_square(f.start, board);
    if (!f.end.empty()) rules.required_end = starpath::parse_square(f.end, board);
    if (f.strokes >= 0) rules.required_stroke_count = f.strokes;
    const Path path = starpath::parse_path(f.path, board);
    const starpath::VerifyReport report = starpath::verify(path, rules);
    std::cout << starpath::report_to_json(report, board) << '\n';
    return report.valid ? 0 : 1;
}

struct SolveFlags {
    SharedFlags shared;
    std::string start;
    std::string end;
    int max_strokes = 14;
    bool max_strokes_given = false;
    std::string mode = "first";
    bool progressive = false;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string ordering = "newcov";
    std::uint64_t node_limit = 0;
    double time_limit = 0.0;
    bool force = false;
    bool oracle = false;
};

int run_solve(const SolveFlags& f) {
    const BoardSpec board = f.shared.spec();
    starpath::SearchConfig config;
    config.rules.board = board;
    config.rules.policy = f.shared.policy_enum();
    const char* start_default = f.oracle ? nullptr : "c5";
    const char* end_default = f.oracle ? nullptr : "d4";
    config.rules.required_start =
        resolve_endpoint(f.start, start_default, f.shared, board);
    config.rules.required_end = resolve_endpoint(f.end, end_default, f.shared, board);
    config.max_strokes = f.max_strokes;
    config.progressive = f.progressive;
    config.seed = f.seed;
    config.workers = f.workers;
    config.override_guard = f.force;
    if (f.ordering == "lex") config.ordering = starpath::MoveOrdering::Lexicographic;
    if (f.node_limit > 0) config.node_limit = f.node_limit;
    if (f.time_limit > 0) config.time_limit_seconds = f.time_limit;
    if (f.mode == "all") config.mode = starpath::SearchMode::All;
    else if (f.mode == "count") config.mode = starpath::SearchMode::Count;
    else if (f.mode == "min") config.mode = starpath::SearchMode::Minimize;
    if (config.mode == starpath::SearchMode::Minimize && !f.max_strokes_given)
        config.max_strokes = 2 * board.n * board.n + 2;

    const bool free_endpoints =
        !config.rules.required_start && !config.rules.required_end;
    std::set<std::string> seen;
    config.on_solution = [&](const Path& p) {
        const Path canon = starpath::canonicalize(p, free_endpoints, board);
        const std::string text = starpath::format_path(canon, board);
        if (!seen.insert(text).second) return;
        nlohmann::ordered_json j;
        j["solution"] = text;
        j["strokes"] = canon.stroke_count();
        std::cout << j.dump() << '\n';
    };

    starpath::SearchResult result =
        f.oracle ? starpath::oracle_solve(config) : starpath::solve(config);
    if (f.oracle)
        for (const Path& p : result.solutions) config.on_solution(p);
    print_summary(result);
    if (config.mode == starpath::SearchMode::Count ||
        config.mode == starpath::SearchMode::Minimize)
        return result.status == starpath::SearchStatus::Complete ? 0 : 1;
    return result.solution_count > 0 ? 0 : 1;
}

struct RenderFlags {
    SharedFlags shared;
    std::string path;
    std::string format = "svg";
    std::string out;
    std::string highlight;
    int cell_size = 40;
    int star_radius = 6;
    bool coords = false;
};

int run_render(const RenderFlags& f) {
    const BoardSpec board = f.shared.spec();
    std::optional<Path> path;
    if (!f.path.empty()) path = starpath::parse_path(f.path, board);
    std::string text;
    if (f.format == "ascii") {
        text = path ? starpath::render_ascii(*path, board) : starpath::render_ascii(board);
    } else {
        starpath::RenderOptions options;
        options.cell_size = f.cell_size;
        options.star_radius = f.star_radius;
        options.show_coordinates = f.coords;
        std::stringstream squares(f.highlight);
        for (std::string token; std::getline(squares, token, ',');)
            options.highlight.push_back(starpath::parse_square(token, board));
        text = path ? starpath::render_svg(*path, board, options)
                    : starpath::render_svg(board, options);
    }
    if (f.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(f.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + f.out);
    file << text;
    return 0;
}

void add_solve_flags(CLI::App* cmd, SolveFlags& f) {
    add_shared(cmd, f.shared);
    cmd->add_option("--start", f.start,
                    "Required first waypoint; \"any\" frees it")
        ->capture_default_str();
    cmd->add_option("--end", f.end, "Required last waypoint; \"any\" frees it")
        ->capture_default_str();
    auto* ms = cmd->add_option("--max-strokes", f.max_strokes, "Stroke budget")
                   ->capture_default_str();
    cmd->parse_complete_callback([ms, &f]() { f.max_strokes_given = ms->count() > 0; });
    cmd->add_flag("--progressive", f.progressive,
                  "Require every stroke to cover a new star");
    cmd->add_option("--seed", f.seed, "Move-ordering tie-break seed")
        ->capture_default_str();
    cmd->add_option("--workers", f.workers, "Parallel search workers")
        ->capture_default_str();
    cmd->add_option("--node-limit", f.node_limit, "Abort after this many nodes");
    cmd->add_option("--time-limit", f.time_limit, "Abort after this many seconds");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covering paths of straight strokes on a square grid of stars"};
    app.require_subcommand(1);

    VerifyFlags vf;
    auto* verify_cmd =
        app.add_subcommand("verify", "Check a claimed path and report defects");
    add_shared(verify_cmd, vf.shared);
    verify_cmd->add_option("--path", vf.path, "Dash-separated waypoints")->required();
    verify_cmd->add_option("--start", vf.start, "Required first waypoint");
    verify_cmd->add_option("--end", vf.end, "Required last waypoint");
    verify_cmd->add_option("--strokes", vf.strokes, "Required stroke count");

    SolveFlags sf;
    auto* solve_cmd = app.add_subcommand("solve", "Search for covering paths");
    add_solve_flags(solve_cmd, sf);
    solve_cmd
        ->add_option("--mode", sf.mode, "first, all, count, or min")
        ->check(CLI::IsMember({"first", "all", "count", "min"}))
        ->capture_default_str();
    solve_cmd->add_option("--ordering", sf.ordering, "Move ordering")
        ->check(CLI::IsMember({"newcov", "lex"}))
        ->capture_default_str();
    solve_cmd->add_flag("--force", sf.force,
                        "Run exhaustive modes on large boards without a budget");

    RenderFlags rf;
    auto* render_cmd = app.add_subcommand("render", "Draw the star field and a path");
    add_shared(render_cmd, rf.shared);
    render_cmd->add_option("--path", rf.path, "Dash-separated waypoints");
    render_cmd->add_option("--format", rf.format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}))
        ->capture_default_str();
    render_cmd->add_option("-o,--out", rf.out, "Write to a file instead of stdout");
    render_cmd->add_option("--highlight", rf.highlight,
                           "Comma-separated squares drawn as light stars");
    render_cmd->add_option("--cell-size", rf.cell_size, "SVG pixels per cell")
        ->capture_default_str();
    render_cmd->add_option("--star-radius", rf.star_radius, "SVG star radius")
        ->capture_default_str();
    render_cmd->add_flag("--coords", rf.coords, "Label files and ranks in SVG");

    SolveFlags of;
    of.oracle = true;
    of.max_strokes = 3;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "Brute-force reference enumeration");
    oracle_cmd->group("");
    add_solve_flags(oracle_cmd, of);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(verify_cmd)) return run_verify(vf);
        if (app.got_subcommand(solve_cmd)) return run_solve(sf);
        if (app.got_subcommand(render_cmd)) return run_render(rf);
        if (app.got_subcommand(oracle_cmd)) return run_solve(of);
    } catch (const std::exception& e) {
        return emit_error(e);
    }
    return 2;
}
