#pragma once

#include <string>
#include <vector>

#include "horadam/graph.hpp"

namespace horadam {

struct Walk {
    enum class Kind { path, cycle };

    Kind kind = Kind::path;
    std::vector<VertexId> vertices;
};

// Consecutive vertices adjacent, every vertex visited exactly once, and for
// cycles the last vertex adjacent to the first.
bool validate_walk(const HoradamGraph& g, const Walk& w);

enum class ParityCase { odd_even, odd_odd, even_even, even_odd }; // (a mod 2, b mod 2)

struct EndpointContract {
    Word start;
    Word end;
    ParityCase parity_case = ParityCase::odd_odd;
};

// The guaranteed Hamiltonian path endpoints, by the parities of a and b and
// the residue of n (mod 2, or mod 3 when both are odd). Requires n >= 1.
EndpointContract path_endpoints(const Params& p);

// The inductive construction: explicit serpentine bases for n <= 2, then
// sub-paths of the letter and block copies stitched through the single
// connecting edges between consecutive copies. Deterministic; endpoints
// match path_endpoints exactly.
std::vector<Word> hamiltonian_path_words(const Params& p);
Walk hamiltonian_path(const HoradamGraph& g);

struct CycleResult {
    enum class Status { cycle, not_guaranteed, impossible };

    Status status = Status::not_guaranteed;
    std::string reason;
    Walk walk; // populated only when status == cycle
};

// Hamiltonian cycles in the three guaranteed parity classes (a,b even with
// n >= 3; a even, b odd, n >= 3 odd; a,b odd, n = 3k-1 with k >= 2), built
// by pairing copy-level paths and exchanging matched edges for connecting
// rungs. Returns impossible exactly when s_n is odd (the cube is bipartite),
// not_guaranteed otherwise.
CycleResult hamiltonian_cycle(const HoradamGraph& g);
std::vector<Word> hamiltonian_cycle_words(const Params& p);

} // namespace horadam
