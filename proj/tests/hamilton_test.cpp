#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horadam/errors.hpp"
#include "horadam/hamilton.hpp"
#include "horadam/sequences.hpp"

using namespace horadam;

namespace {

std::string rendered(const HoradamGraph& g, VertexId v) {
    return render_word(g.word(v), g.params);
}

} // namespace

TEST_CASE("path endpoint contracts") {
    EndpointContract c = path_endpoints({1, 2, 4});
    CHECK(render_word(c.start, {1, 2, 4}) == "0202");
    CHECK(render_word(c.end, {1, 2, 4}) == "0020");
    CHECK(c.parity_case == ParityCase::odd_even);

    c = path_endpoints({2, 2, 3});
    CHECK(render_word(c.start, {2, 2, 3}) == "111");
    CHECK(render_word(c.end, {2, 2, 3}) == "031");
    CHECK(c.parity_case == ParityCase::even_even);

    c = path_endpoints({3, 3, 3});
    CHECK(render_word(c.start, {3, 3, 3}) == "052");
    CHECK(render_word(c.end, {3, 3, 3}) == "205");
    CHECK(c.parity_case == ParityCase::odd_odd);

    c = path_endpoints({3, 2, 2});
    CHECK(render_word(c.start, {3, 2, 2}) == "04");
    CHECK(render_word(c.end, {3, 2, 2}) == "20");

    CHECK_THROWS_AS(path_endpoints({2, 2, 0}), parameter_error);
}

TEST_CASE("walk validation") {
    HoradamGraph p3 = build_graph({3, 2, 1});
    Walk ok{Walk::Kind::path, {p3.index_of(Word{0}), p3.index_of(Word{1}), p3.index_of(Word{2})}};
    CHECK(validate_walk(p3, ok));
    Walk skip{Walk::Kind::path, {p3.index_of(Word{0}), p3.index_of(Word{2})}};
    CHECK_FALSE(validate_walk(p3, skip));
    Walk repeat{Walk::Kind::path,
                {p3.index_of(Word{0}), p3.index_of(Word{1}), p3.index_of(Word{0})}};
    CHECK_FALSE(validate_walk(p3, repeat));
}

TEST_CASE("hamiltonian paths on the named instances") {
    HoradamGraph g = build_graph({1, 2, 4});
    Walk w = hamiltonian_path(g);
    CHECK(w.vertices.size() == 11);
    CHECK(rendered(g, w.vertices.front()) == "0202");
    CHECK(rendered(g, w.vertices.back()) == "0020");

    HoradamGraph p4 = build_graph({4, 3, 1});
    Walk line = hamiltonian_path(p4);
    REQUIRE(line.vertices.size() == 4);
    CHECK(rendered(p4, line.vertices.front()) == "3"); // a even: starts at a-1
    CHECK(rendered(p4, line.vertices.back()) == "0");

    HoradamGraph g32 = build_graph({3, 2, 2});
    Walk w32 = hamiltonian_path(g32);
    CHECK(rendered(g32, w32.vertices.front()) == "04");
    CHECK(rendered(g32, w32.vertices.back()) == "20");
}

TEST_CASE("hamiltonian paths validate with contract endpoints over the grid") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int n = 1; n <= 6; ++n) {
                Params p{a, b, n};
                BigInt s = vertex_count(p);
                if (!s.fits_uint64() || s.to_uint64() > 20000) continue;
                HoradamGraph g = build_graph(p);
                Walk w = hamiltonian_path(g);
                CHECK(validate_walk(g, w));
                EndpointContract c = path_endpoints(p);
                CHECK(g.word(w.vertices.front()) == c.start);
                CHECK(g.word(w.vertices.back()) == c.end);
            }
}

TEST_CASE("constructions are deterministic") {
    HoradamGraph g = build_graph({2, 3, 4});
    CHECK(hamiltonian_path(g).vertices == hamiltonian_path(g).vertices);
    HoradamGraph h = build_graph({2, 2, 4});
    auto c1 = hamiltonian_cycle(h);
    auto c2 = hamiltonian_cycle(h);
    REQUIRE(c1.status == CycleResult::Status::cycle);
    CHECK(c1.walk.vertices == c2.walk.vertices);
}

TEST_CASE("hamiltonian cycles on the named instances") {
    HoradamGraph g22 = build_graph({2, 2, 4});
    CycleResult r = hamiltonian_cycle(g22);
    REQUIRE(r.status == CycleResult::Status::cycle);
    CHECK(r.walk.vertices.size() == 44);
    CHECK(validate_walk(g22, r.walk));

    HoradamGraph g13 = build_graph({1, 3, 5});
    r = hamiltonian_cycle(g13);
    REQUIRE(r.status == CycleResult::Status::cycle);
    CHECK(r.walk.vertices.size() == 40);
    CHECK(validate_walk(g13, r.walk));

    r = hamiltonian_cycle(build_graph({1, 2, 4}));
    CHECK(r.status == CycleResult::Status::impossible); // s_4 = 11 odd
    CHECK(r.reason == "bipartite graph of odd order");

    r = hamiltonian_cycle(build_graph({2, 2, 2}));
    CHECK(r.status == CycleResult::Status::not_guaranteed); // pendant path from 03

    r = hamiltonian_cycle(build_graph({3, 3, 2}));
    CHECK(r.status == CycleResult::Status::not_guaranteed); // n = 3k-1 needs k >= 2
}

TEST_CASE("cycle statuses and validity over the grid") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int n = 1; n <= 6; ++n) {
                Params p{a, b, n};
                BigInt s = vertex_count(p);
                if (!s.fits_uint64() || s.to_uint64() > 20000) continue;
                HoradamGraph g = build_graph(p);
                CycleResult r = hamiltonian_cycle(g);
                bool odd = g.num_vertices() % 2 == 1;
                CHECK(odd == (r.status == CycleResult::Status::impossible));
                bool guaranteed = (a % 2 == 0 && b % 2 == 0 && n >= 3) ||
                                  (a % 2 == 0 && b % 2 == 1 && n >= 3 && n % 2 == 1) ||
                                  (a % 2 == 1 && b % 2 == 1 && n >= 5 && n % 3 == 2);
                if (guaranteed) {
                    REQUIRE(r.status == CycleResult::Status::cycle);
                    CHECK(validate_walk(g, r.walk));
                }
            }
}

TEST_CASE("deep recursions of the cycle constructions") {
    // a,b odd with n = 8 exercises the recursive block-cycle branch.
    HoradamGraph g11 = build_graph({1, 1, 8});
    CycleResult r = hamiltonian_cycle(g11);
    REQUIRE(r.status == CycleResult::Status::cycle);
    CHECK(validate_walk(g11, r.walk));

    HoradamGraph g13 = build_graph({1, 3, 8});
    r = hamiltonian_cycle(g13);
    REQUIRE(r.status == CycleResult::Status::cycle);
    CHECK(validate_walk(g13, r.walk));

    HoradamGraph g31 = build_graph({3, 1, 8});
    r = hamiltonian_cycle(g31);
    REQUIRE(r.status == CycleResult::Status::cycle);
    CHECK(validate_walk(g31, r.walk));

    // a even, b odd with n = 7 chains two recursive extensions.
    HoradamGraph g21 = build_graph({2, 1, 7});
    r = hamiltonian_cycle(g21);
    REQUIRE(r.status == CycleResult::Status::cycle);
    CHECK(validate_walk(g21, r.walk));
}
