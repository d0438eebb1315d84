#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "horadam/errors.hpp"
#include "horadam/exports.hpp"
#include "horadam/graph.hpp"
#include "horadam/hamilton.hpp"
#include "horadam/sequences.hpp"
#include "horadam/series.hpp"
#include "horadam/structure.hpp"
#include "horadam/verify.hpp"

namespace {

using namespace horadam;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw parameter_error("cannot open output file: " + path);
    return file;
}

void print_row(std::ostream& os, const std::map<int, BigInt>& values, bool from_zero) {
    if (values.empty()) {
        os << "\n";
        return;
    }
    int lo = from_zero ? 0 : values.begin()->first;
    int hi = values.rbegin()->first;
    for (int k = lo; k <= hi; ++k) {
        if (k > lo) os << ' ';
        auto it = values.find(k);
        os << (it == values.end() ? BigInt() : it->second);
    }
    os << "\n";
}

int cmd_count(const Params& p, const std::string& what) {
    if (what == "vertices") {
        std::cout << vertex_count(p) << "\n";
    } else if (what == "edges") {
        std::cout << edge_count(p) << "\n";
    } else if (what == "degrees") {
        CountTable t = degree_table(p);
        for (const auto& [k, v] : t.values) std::cout << k << '\t' << v << "\n";
    } else if (what == "cubes") {
        print_row(std::cout, cube_coefficients(p).values, true);
    } else if (what == "cube-number") {
        std::cout << cube_number(p) << "\n";
    } else {
        throw CLI::ValidationError("--what", "unknown quantity: " + what);
    }
    return 0;
}

int cmd_graph(const Params& p, const std::string& format, bool color,
              const std::string& out_path) {
    HoradamGraph g = build_graph(p);
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    if (format == "edgelist") write_edgelist(g, os);
    else if (format == "dot") write_dot(g, os, color);
    else if (format == "json") write_json(g, os);
    else throw CLI::ValidationError("--format", "unknown format: " + format);
    return 0;
}

int cmd_hamilton(const Params& p, bool cycle, const std::string& out_path) {
    HoradamGraph g = build_graph(p);
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    if (cycle) {
        CycleResult r = hamiltonian_cycle(g);
        switch (r.status) {
        case CycleResult::Status::impossible:
            os << "impossible: " << r.reason << "\n";
            return 1;
        case CycleResult::Status::not_guaranteed:
            os << "not-guaranteed: " << r.reason << "\n";
            return 1;
        case CycleResult::Status::cycle:
            for (VertexId v : r.walk.vertices)
                os << render_word(g.word(v), p) << "\n";
            return 0;
        }
    }
    Walk w = hamiltonian_path(g);
    for (VertexId v : w.vertices) os << render_word(g.word(v), p) << "\n";
    return 0;
}

int cmd_series(int a, int b, const std::string& which, int order) {
    Params probe{a, b, 0};
    validate(probe);
    if (which == "S" || which == "E") {
        Series s = which == "S" ? vertex_series(a, b, order) : edge_series(a, b, order);
        for (int n = 0; n <= order; ++n) {
            if (n > 0) std::cout << ' ';
            std::cout << s.at(n);
        }
        std::cout << "\n";
        return 0;
    }
    if (which == "Delta" || which == "A") {
        int order_y = 2 * order + 2;
        Series s = which == "Delta" ? degree_series(a, b, order, order_y)
                                    : cube_series(a, b, order, order_y);
        for (int n = 0; n <= order; ++n) {
            std::cout << "x^" << n << ":";
            auto row = s.x_coefficient_row(n);
            for (const BigInt& c : row) std::cout << ' ' << c;
            std::cout << "\n";
        }
        return 0;
    }
    throw CLI::ValidationError("--which", "unknown series: " + which);
}

int cmd_tables(int a, int b, int max_n) {
    Params probe{a, b, 0};
    validate(probe);
    std::cout << "# edge counts e_n, n = 1.." << max_n << "\n";
    for (int n = 1; n <= max_n; ++n)
        std::cout << n << '\t' << edge_count({a, b, n}) << "\n";
    std::cout << "# degree distribution rows (k:count), n = 1.." << max_n << "\n";
    for (int n = 1; n <= max_n; ++n) {
        std::cout << n;
        for (const auto& [k, v] : degree_table({a, b, n}).values)
            std::cout << '\t' << k << ':' << v;
        std::cout << "\n";
    }
    std::cout << "# cube polynomials (constant term first), n = 0.." << max_n << "\n";
    for (int n = 0; n <= max_n; ++n) {
        std::cout << n << '\t';
        print_row(std::cout, cube_coefficients({a, b, n}).values, true);
    }
    return 0;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, colon));
            hi = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

int cmd_verify(const std::string& suite, const std::string& a_range,
               const std::string& b_range, int max_n, std::size_t vertex_cap,
               bool timings) {
    GridSpec grid;
    if (!parse_range(a_range, grid.a_min, grid.a_max))
        throw CLI::ValidationError("--a-range", "expected LO:HI with 1 <= LO <= HI");
    if (!parse_range(b_range, grid.b_min, grid.b_max))
        throw CLI::ValidationError("--b-range", "expected LO:HI with 1 <= LO <= HI");
    grid.n_max = max_n;
    grid.vertex_cap = vertex_cap;
    auto reports = run_suites(suite, grid);
    std::cout << report_to_json(reports, timings) << "\n";
    for (const auto& rep : reports)
        if (!rep.ok()) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Horadam cube toolkit: counting formulas, graph exports, "
                 "structural decompositions, Hamiltonian walks, verification"};
    app.require_subcommand(1);

    int a = 1, b = 1, n = 0;
    auto add_params = [&](CLI::App* cmd, bool with_n = true) {
        cmd->add_option("--a", a, "first recurrence coefficient")->required();
        cmd->add_option("--b", b, "second recurrence coefficient")->required();
        if (with_n) cmd->add_option("--n", n, "word length")->required();
    };

    auto* count = app.add_subcommand("count", "print exact counts");
    std::string what = "vertices";
    add_params(count);
    count->add_option("--what", what, "vertices|edges|degrees|cubes|cube-number");

    auto* graph = app.add_subcommand("graph", "export the graph");
    std::string format = "edgelist", out_path;
    bool color = false;
    add_params(graph);
    graph->add_option("--format", format, "edgelist|dot|json");
    graph->add_flag("--color", color, "include the proper 2-coloring (dot only)");
    graph->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* hamilton = app.add_subcommand("hamilton", "construct a Hamiltonian walk");
    bool cycle = false;
    add_params(hamilton);
    hamilton->add_flag("--cycle", cycle, "construct a cycle instead of a path");
    hamilton->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* series = app.add_subcommand("series", "expand a generating function");
    std::string which = "S";
    int order = default_series_order;
    series->add_option("--a", a, "first recurrence coefficient")->required();
    series->add_option("--b", b, "second recurrence coefficient")->required();
    series->add_option("--which", which, "S|E|Delta|A");
    series->add_option("--order", order, "truncation order in x")
        ->check(CLI::Range(0, 512));

    auto* tables = app.add_subcommand("tables", "reproduce the standard tables");
    int max_n = 5;
    tables->add_option("--a", a, "first recurrence coefficient")->required();
    tables->add_option("--b", b, "second recurrence coefficient")->required();
    tables->add_option("--max-n", max_n, "largest n to print");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all", a_range = "1:3", b_range = "1:3";
    int verify_n = 6;
    std::size_t vertex_cap = 20000;
    verify->add_option("--suite", suite,
                       "sequences|edges|degrees|cubes|series|structure|grids|"
                       "quotient|embedding|median|hamilton|all");
    verify->add_option("--a-range", a_range, "a range LO:HI");
    verify->add_option("--b-range", b_range, "b range LO:HI");
    verify->add_option("--max-n", verify_n, "largest n in the grid");
    verify->add_option("--vertex-cap", vertex_cap, "skip instances above this size");
    bool timings = false;
    verify->add_flag("--timings", timings, "include wall-clock durations in the report");

    try {
        app.parse(argc, argv);
        Params p{a, b, n};
        if (count->parsed()) return cmd_count(p, what);
        if (graph->parsed()) return cmd_graph(p, format, color, out_path);
        if (hamilton->parsed()) return cmd_hamilton(p, cycle, out_path);
        if (series->parsed()) return cmd_series(a, b, which, order);
        if (tables->parsed()) return cmd_tables(a, b, max_n);
        if (verify->parsed())
            return cmd_verify(suite, a_range, b_range, verify_n, vertex_cap, timings);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
