#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "horadam/graph.hpp"

namespace horadam {

// Partition of the vertex set by leading primitive block: a copies of the
// next-lower cube, b copies of the one below, plus the labeled groups of
// edges running between consecutive copies.
struct CanonicalPartition {
    enum class CrossKind { letter_step, block_step, bridge };

    struct CrossGroup {
        CrossKind kind;
        int low; // letter k for k<->k+1 steps, letter l for 0l<->0(l+1); a-1 for the bridge
        std::vector<std::pair<VertexId, VertexId>> edges;
    };

    Params params;
    std::vector<std::vector<VertexId>> letter_copies; // index k = 0..a-1
    std::vector<std::vector<VertexId>> block_copies;  // index l-a = 0..b-1
    std::vector<CrossGroup> cross_edges;
};

// Requires n >= 2. Verifies copy sizes, the drop-prefix isomorphisms onto
// the lower cubes, and the cross-edge group sizes; throws theorem_violation
// if any fail.
CanonicalPartition canonical_partition(const HoradamGraph& g);

// Letter map: < a goes to '0', >= a goes to '1'; applied positionwise.
std::string rho_project(const Word& w, const Params& p);

// One grid of the Fibonacci-string decomposition: all vertices with a
// common rho image w of k ones induce P_a^(n-2k) x P_b^k.
struct GridClass {
    std::string label;              // Fibonacci string of length n
    std::vector<VertexId> members;  // sorted
    int free_positions = 0;         // n - 2k
    int pair_positions = 0;         // k
};

// Classes keyed by rho image, sorted by label; each class verified to be
// the stated grid (member count, internal edge count, and one-coordinate
// unit moves on every internal edge). Throws theorem_violation on failure.
std::vector<GridClass> grid_partition(const HoradamGraph& g);

// Quotient by rho: vertices are the rho images, adjacent when at least one
// cube edge joins the classes.
struct QuotientGraph {
    std::vector<std::string> labels; // sorted
    std::vector<std::pair<int, int>> edges;
};

// Verified isomorphic to the Fibonacci cube Gamma_{n-1} under the explicit
// drop-leading-zero map; throws theorem_violation otherwise.
QuotientGraph quotient_graph(const HoradamGraph& g);

// Block embedding into the hypercube of dimension (a+b-1)n.
std::string sigma_embed(const Word& w, const Params& p);

// Inverse parse of an embedded word; nullopt when the bits match no
// valid block pattern.
std::optional<Word> sigma_decode(const std::string& bits, const Params& p);

// Majority rule in the hypercube image, pulled back through sigma.
// Throws theorem_violation when the majority word has no valid preimage.
Word median_of_triple(const Word& u, const Word& v, const Word& w, const Params& p);

// Per-graph sigma index: images and a hash map back to vertex ids, so
// median queries cost O(word length).
class SigmaEmbedding {
public:
    explicit SigmaEmbedding(const HoradamGraph& g);

    const std::string& image(VertexId v) const { return images_[static_cast<std::size_t>(v)]; }
    std::optional<VertexId> preimage(const std::string& bits) const;
    VertexId median(VertexId x, VertexId y, VertexId z) const;

private:
    const HoradamGraph& graph_;
    std::vector<std::string> images_;
    std::unordered_map<std::string, VertexId> index_;
};

} // namespace horadam
