#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "horadam/errors.hpp"
#include "horadam/exports.hpp"
#include "horadam/sequences.hpp"

using namespace horadam;

namespace {

std::string dump_edgelist(const HoradamGraph& g) {
    std::ostringstream os;
    write_edgelist(g, os);
    return os.str();
}

std::string dump_json(const HoradamGraph& g) {
    std::ostringstream os;
    write_json(g, os);
    return os.str();
}

} // namespace

TEST_CASE("edge list round trip") {
    for (Params p : {Params{2, 2, 3}, Params{1, 2, 3}, Params{3, 2, 2}, Params{1, 1, 0}}) {
        HoradamGraph g = build_graph(p);
        std::istringstream is(dump_edgelist(g));
        HoradamGraph back = read_edgelist(is);
        CHECK(back == g);
    }
}

TEST_CASE("edge list format") {
    HoradamGraph g = build_graph({1, 2, 3});
    std::string text = dump_edgelist(g);
    CHECK(text.rfind("# horadam a=1 b=2 n=3\n", 0) == 0);
    CHECK(text.find("# words rendered as compact digits") != std::string::npos);
    CHECK(text.find("000\t001") != std::string::npos);
    // Deterministic output.
    CHECK(text == dump_edgelist(g));
}

TEST_CASE("json round trip carries the counts") {
    HoradamGraph g = build_graph({2, 2, 3});
    std::string text = dump_json(g);
    CHECK(text.find("\"s_n\": \"16\"") != std::string::npos);
    CHECK(text.find("\"e_n\": \"24\"") != std::string::npos);
    std::istringstream is(text);
    HoradamGraph back = read_json(is);
    CHECK(back == g);
    CHECK(text == dump_json(back));
}

TEST_CASE("wide alphabets use the comma rendering") {
    HoradamGraph g = build_graph({9, 3, 1});
    std::string text = dump_edgelist(g);
    CHECK(text.find("comma-separated decimals") != std::string::npos);
    std::istringstream is(text);
    CHECK(read_edgelist(is) == g);
}

TEST_CASE("malformed imports are rejected") {
    std::istringstream no_header("000\t001\n");
    CHECK_THROWS_AS(read_edgelist(no_header), parameter_error);

    std::istringstream bad_vertex("# horadam a=1 b=2 n=3\n000\t003\n");
    CHECK_THROWS_AS(read_edgelist(bad_vertex), parameter_error);

    std::istringstream bad_edge(R"({"params":{"a":1,"b":2,"n":3},"edges":[[0,99]]})");
    CHECK_THROWS_AS(read_json(bad_edge), parameter_error);
}

TEST_CASE("dot export") {
    HoradamGraph g = build_graph({3, 2, 1});
    std::ostringstream plain;
    write_dot(g, plain, false);
    CHECK(plain.str().find("graph horadam {") != std::string::npos);
    CHECK(plain.str().find("\"0\" -- \"1\";") != std::string::npos);
    CHECK(plain.str().find("color=") == std::string::npos);

    std::ostringstream colored;
    write_dot(g, colored, true);
    CHECK(colored.str().find("[color=blue]") != std::string::npos);
    CHECK(colored.str().find("[color=red]") != std::string::npos);
}
