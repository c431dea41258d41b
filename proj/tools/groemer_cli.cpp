// groemer: command-line front end for the exceptional-number predicates,
// the packing oracle and the lattice renderer.
//
// Exit codes: 0 success, 1 assertion failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "groemer/groemer.hpp"

namespace {

using namespace groemer;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run_decompose(integer n, bool as_json) {
    const HexParams p = decompose(n);
    const integer p0 = p0_of_n(n);
    if (as_json) {
        json out;
        out["n"] = n;
        out["a"] = p.a;
        out["b"] = p.b;
        out["c"] = p.c;
        out["p0"] = p0;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "a=" << p.a << " b=" << p.b << " c=" << p.c << " p0=" << p0 << '\n';
    }
    return exit_ok;
}

int run_check(integer n, bool oracle, std::size_t max_solutions, bool merge_mirrors, bool as_json) {
    Verdict v = evaluate_criteria(n);
    if (oracle) {
        attach_oracle(v, max_solutions, SearchOptions{merge_mirrors, false});
    }
    if (as_json) {
        std::cout << to_json(v).dump() << '\n';
    } else {
        std::cout << format_verdict_text(v);
    }
    return exit_ok;
}

int run_counterexample(bool as_json) {
    constexpr integer n = 1541551;
    const BoundarySeq witness{{702, 717, 714, 741, 678, 753}};
    std::vector<std::pair<std::string, bool>> checks;
    const auto expect = [&checks](std::string what, bool ok) { checks.emplace_back(std::move(what), ok); };

    const HexParams p = decompose(n);
    const integer p0 = p0_of_n(n);
    const SideWindow window = side_window(p);
    const integer lo = window.lo;
    const integer hi = 2 * p.a - p.c;
    expect("parameters (a,b,c) = (717,2,0)", p == HexParams{717, 2, 0});
    expect("p0 = 4299", p0 == 4299);

    const auto wegner = check_wegner_conjecture(p);
    expect("conjecture claims exceptional via b=2, m=2",
           wegner && wegner->branch == WegnerBranch::b2 && wegner->m == 2);

    const integer discriminant = br_discriminant(n);
    expect("discriminant D = 8595", discriminant == 8595);
    expect("D admits no (3k-1)*9^l factorization", !check_boeroeczky_ruzsa(n).has_value());
    expect("corrected characterization agrees: not exceptional", !check_corrected(p).has_value());

    const auto completed = complete_seq(702, 717, 714, 741);
    expect("witness closes to (702,717,714,741,678,753)", completed && *completed == witness);
    expect("witness satisfies the count equation", n_of_seq(702, 717, 714, 741) == n);
    expect("witness satisfies the perimeter equation", perimeter_of_seq(702, 717, 714, 741) == p0);
    expect("witness lies in [(a-1)/2, 2a-c]", completed && narrow_bounds_ok(*completed, p));
    expect("witness lies in the oracle side window", completed && bounds_ok(*completed, p));

    const SearchReport report = find_extremal(n);
    expect("oracle finds extremal packings", !report.exceptional && !report.solutions.empty());
    expect("oracle solutions include the witness",
           std::binary_search(report.solutions.begin(), report.solutions.end(), canonicalize(witness)));
    const bool all_valid = std::all_of(report.solutions.begin(), report.solutions.end(), [&](const BoundarySeq& s) {
        return closure_holds(s) && n_of_seq(s) == n && perimeter_of_seq(s) == p0 && bounds_ok(s, p);
    });
    expect("every oracle solution satisfies all three conditions", all_valid);

    const bool pass = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
    if (as_json) {
        json out;
        out["n"] = n;
        out["a"] = p.a;
        out["b"] = p.b;
        out["c"] = p.c;
        out["p0"] = p0;
        out["window"] = {lo, hi};
        out["oracle_window"] = {window.lo, window.hi};
        out["discriminant"] = discriminant;
        out["wegner_m"] = wegner ? json(wegner->m) : json(nullptr);
        out["witness"] = witness.p;
        out["solution_count"] = report.solutions.size();
        json list = json::array();
        for (const auto& [what, ok] : checks) {
            list.push_back({{"check", what}, {"pass", ok}});
        }
        out["checks"] = std::move(list);
        out["pass"] = pass;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "n=" << n << " a=" << p.a << " b=" << p.b << " c=" << p.c << " p0=" << p0 << '\n'
                  << "side window [(a-1)/2, 2a-c] = [" << lo << ", " << hi << "]\n"
                  << "oracle side window [" << window.lo << ", " << window.hi << "]\n"
                  << "discriminant " << discriminant << ": no (k,l)\n"
                  << "witness " << format_seq(witness.p) << '\n'
                  << "canonical solutions found: " << report.solutions.size() << '\n';
        for (const auto& [what, ok] : checks) {
            std::cout << (ok ? "PASS " : "FAIL ") << what << '\n';
        }
        std::cout << (pass ? "PASS" : "FAIL") << ": Wegner's conjecture is refuted at n=" << n << '\n';
    }
    return pass ? exit_ok : exit_failed;
}

BoundarySeq parse_seq(const std::string& text) {
    std::vector<integer> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (used != item.size()) {
                throw UsageError("bad integer in --seq: " + item);
            }
        } catch (const std::logic_error&) {
            throw UsageError("bad integer in --seq: " + item);
        }
    }
    if (values.size() == 6) {
        BoundarySeq s{{values[0], values[1], values[2], values[3], values[4], values[5]}};
        if (!closure_holds(s)) {
            throw UsageError("--seq does not close up");
        }
        return s;
    }
    if (values.size() != 4 || std::any_of(values.begin(), values.end(), [](integer x) { return x < 1; })) {
        throw UsageError("--seq expects four (or six) positive integers");
    }
    auto s = complete_seq(values[0], values[1], values[2], values[3]);
    if (!s) {
        throw UsageError("--seq does not complete to a hexagon (p5 or p6 < 1)");
    }
    return *s;
}

int run_render(std::optional<integer> n, const std::string& seq_text, const std::string& format,
               const std::string& out_path, double scale, bool highlight) {
    BoundarySeq seq;
    if (!seq_text.empty()) {
        seq = parse_seq(seq_text);
    } else if (n) {
        const SearchReport report = find_extremal(*n);
        if (report.exceptional) {
            throw UsageError(std::to_string(*n) + " is exceptional, no extremal packing exists");
        }
        seq = report.solutions.front();
    } else {
        throw UsageError("render needs <n> or --seq");
    }

    const HexRealization r = realize(seq);
    const std::string body = format == "svg" ? export_svg(r, RenderOptions{scale, highlight}) : export_csv(r);
    std::ostream* info = &std::cout;
    if (out_path.empty() || out_path == "-") {
        std::cout << body;
        info = &std::cerr;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            throw UsageError("cannot open " + out_path);
        }
        file << body;
    }
    *info << "sequence " << format_seq(seq.p) << " points " << r.points.size() << " boundary_count "
          << r.boundary_count << '\n';
    return exit_ok;
}

}

int main(int argc, char** argv) {
    CLI::App app{"Extremal Groemer packings and exceptional disc counts"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable JSON on stdout");
    app.fallthrough();

    integer n = 0;
    auto* decompose_cmd = app.add_subcommand("decompose", "Hexagonal parameters (a,b,c) and p0 of n");
    decompose_cmd->add_option("n", n, "Number of discs")->required();

    bool oracle = false;
    bool all_solutions = false;
    bool merge_mirrors = false;
    std::size_t max_solutions = 32;
    auto* check_cmd = app.add_subcommand("check", "Evaluate every exceptionality predicate for n");
    check_cmd->add_option("n", n, "Number of discs")->required();
    check_cmd->add_flag("--oracle", oracle, "Also run the exhaustive packing search");
    check_cmd->add_option("--max-solutions", max_solutions, "Solutions listed in the report")->capture_default_str();
    check_cmd->add_flag("--all-solutions", all_solutions, "List every canonical solution");
    check_cmd->add_flag("--merge-mirrors", merge_mirrors, "Identify mirror-image sequences");

    integer n_max = 0;
    std::string criterion_text;
    unsigned jobs = 1;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List exceptional n up to a bound");
    enumerate_cmd->add_option("--max", n_max, "Upper bound")->required();
    enumerate_cmd->add_option("--criterion", criterion_text, "wegner | br | corrected | oracle")
        ->required()
        ->check(CLI::IsMember({"wegner", "br", "corrected", "oracle"}));
    enumerate_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 1024U));

    auto* cross_cmd = app.add_subcommand("cross-validate", "Compare Wegner's conjecture with the B-R criterion");
    cross_cmd->add_option("--max", n_max, "Upper bound")->required();
    cross_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 1024U));

    auto* counter_cmd = app.add_subcommand("counterexample", "Reproduce the n = 1541551 counterexample");

    std::optional<integer> render_n;
    std::string seq_text;
    std::string format = "csv";
    std::string out_path;
    double scale = 10.0;
    bool no_highlight = false;
    auto* render_cmd = app.add_subcommand("render", "Export the lattice realization of a packing");
    render_cmd->add_option("n", render_n, "Number of discs (first canonical solution is used)");
    render_cmd->add_option("--seq", seq_text, "Boundary sequence p1,p2,p3,p4");
    render_cmd->add_option("--format", format, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
    render_cmd->add_option("--out", out_path, "Output file (stdout when omitted)");
    render_cmd->add_option("--scale", scale, "SVG pixels per unit length")->check(CLI::PositiveNumber);
    render_cmd->add_flag("--no-highlight", no_highlight, "Draw boundary discs like interior ones");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (decompose_cmd->parsed()) {
            return run_decompose(n, as_json);
        }
        if (check_cmd->parsed()) {
            return run_check(n, oracle, all_solutions ? std::numeric_limits<std::size_t>::max() : max_solutions,
                             merge_mirrors, as_json);
        }
        if (enumerate_cmd->parsed()) {
            const Criterion criterion = *parse_criterion(criterion_text);
            std::cout << format_enumeration(n_max, criterion, enumerate_exceptional(n_max, criterion, jobs), as_json);
            return exit_ok;
        }
        if (cross_cmd->parsed()) {
            const CrossValidation cv = cross_validate(n_max, jobs);
            std::cout << format_cross_validation(cv, as_json);
            return cv.corrected_mismatches.empty() && cv.oracle_confirms_br() ? exit_ok : exit_failed;
        }
        if (counter_cmd->parsed()) {
            return run_counterexample(as_json);
        }
        if (render_cmd->parsed()) {
            return run_render(render_n, seq_text, format, out_path, scale, !no_highlight);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
