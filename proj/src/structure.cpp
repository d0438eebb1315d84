#include "horadam/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "horadam/errors.hpp"
#include "horadam/oracle.hpp"
#include "horadam/sequences.hpp"

namespace horadam {

namespace {

BigInt big(std::size_t v) { return BigInt(static_cast<long long>(v)); }

// Copy id: letters 0..a-1, blocks a..a+b-1 (by the leading primitive block).
int leading_copy(const Word& w, const Params& p) {
    if (w[0] == 0 && w.size() > 1 && w[1] >= p.a) return w[1];
    return w[0];
}

} // namespace

CanonicalPartition canonical_partition(const HoradamGraph& g) {
    const Params& p = g.params;
    if (p.n < 2) throw parameter_error("canonical_partition: requires n >= 2");

    CanonicalPartition part;
    part.params = p;
    part.letter_copies.resize(static_cast<std::size_t>(p.a));
    part.block_copies.resize(static_cast<std::size_t>(p.b));

    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
        int c = leading_copy(g.word(v), p);
        if (c < p.a)
            part.letter_copies[static_cast<std::size_t>(c)].push_back(v);
        else
            part.block_copies[static_cast<std::size_t>(c - p.a)].push_back(v);
    }

    BigInt s1 = vertex_count({p.a, p.b, p.n - 1});
    BigInt s2 = vertex_count({p.a, p.b, p.n - 2});
    for (const auto& copy : part.letter_copies)
        if (big(copy.size()) != s1)
            throw theorem_violation("canonical_partition: letter copy size != s_{n-1}");
    for (const auto& copy : part.block_copies)
        if (big(copy.size()) != s2)
            throw theorem_violation("canonical_partition: block copy size != s_{n-2}");

    // Cross-edge groups, keyed by (kind, low).
    std::map<std::pair<int, int>, std::vector<std::pair<VertexId, VertexId>>> groups;
    std::vector<std::size_t> internal_edges(static_cast<std::size_t>(p.a + p.b), 0);
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
        int cv = leading_copy(g.word(v), p);
        for (VertexId u : g.adj[static_cast<std::size_t>(v)]) {
            if (u < v) continue;
            int cu = leading_copy(g.word(u), p);
            if (cv == cu) {
                ++internal_edges[static_cast<std::size_t>(cv)];
                continue;
            }
            int lo = std::min(cv, cu), hi = std::max(cv, cu);
            int kind;
            if (hi <= p.a - 1 && hi - lo == 1) kind = 0;      // consecutive letter copies
            else if (lo >= p.a && hi - lo == 1) kind = 1;     // consecutive block copies
            else if (lo == 0 && hi == p.a) kind = 2;          // 0(a-1)beta -- 0a beta
            else throw theorem_violation("canonical_partition: edge skips a copy");
            groups[{kind, lo}].emplace_back(std::min(v, u), std::max(v, u));
        }
    }

    // Drop-prefix isomorphism: each copy must project onto the full lower
    // cube with matching internal edge totals.
    BigInt e1 = edge_count({p.a, p.b, p.n - 1});
    BigInt e2 = edge_count({p.a, p.b, p.n - 2});
    Params lower1{p.a, p.b, p.n - 1};
    Params lower2{p.a, p.b, p.n - 2};
    for (int c = 0; c < p.a + p.b; ++c) {
        const auto& members = c < p.a ? part.letter_copies[static_cast<std::size_t>(c)]
                                      : part.block_copies[static_cast<std::size_t>(c - p.a)];
        std::size_t drop = c < p.a ? 1 : 2;
        const Params& lower = c < p.a ? lower1 : lower2;
        for (VertexId v : members) {
            const Word& w = g.word(v);
            Word tail(w.begin() + static_cast<std::ptrdiff_t>(drop), w.end());
            if (!is_valid_word(tail, lower))
                throw theorem_violation("canonical_partition: dropped prefix leaves the copy");
        }
        const BigInt& expect = c < p.a ? e1 : e2;
        if (big(internal_edges[static_cast<std::size_t>(c)]) != expect)
            throw theorem_violation("canonical_partition: copy edge total mismatch");
    }

    for (auto& [key, edges] : groups) {
        auto [kind, lo] = key;
        std::sort(edges.begin(), edges.end());
        const BigInt& expect = kind == 0 ? s1 : s2;
        if (big(edges.size()) != expect)
            throw theorem_violation("canonical_partition: cross-edge group size mismatch");
        CanonicalPartition::CrossKind ck =
            kind == 0   ? CanonicalPartition::CrossKind::letter_step
            : kind == 1 ? CanonicalPartition::CrossKind::block_step
                        : CanonicalPartition::CrossKind::bridge;
        part.cross_edges.push_back({ck, kind == 2 ? p.a - 1 : lo, std::move(edges)});
    }

    std::size_t expected_groups = static_cast<std::size_t>(p.a - 1) +
                                  static_cast<std::size_t>(p.b - 1) + 1;
    if (part.cross_edges.size() != expected_groups)
        throw theorem_violation("canonical_partition: unexpected cross-edge group count");
    return part;
}

std::string rho_project(const Word& w, const Params& p) {
    std::string s;
    s.reserve(w.size());
    for (Letter x : w) s.push_back(x < p.a ? '0' : '1');
    return s;
}

std::vector<GridClass> grid_partition(const HoradamGraph& g) {
    const Params& p = g.params;
    if (p.n < 1) throw parameter_error("grid_partition: requires n >= 1");

    std::map<std::string, GridClass> classes;
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
        std::string label = rho_project(g.word(v), p);
        auto [it, inserted] = classes.try_emplace(label);
        if (inserted) {
            it->second.label = label;
            int ones = static_cast<int>(std::count(label.begin(), label.end(), '1'));
            it->second.free_positions = p.n - 2 * ones;
            it->second.pair_positions = ones;
        }
        it->second.members.push_back(v);
    }

    if (big(classes.size()) != fibonacci_number(p.n + 1))
        throw theorem_violation("grid_partition: class count != F_{n+1}");

    for (auto& [label, cls] : classes) {
        if (label.find("11") != std::string::npos || label[0] == '1')
            throw theorem_violation("grid_partition: label is not a leading-zero Fibonacci string");
        int k = cls.pair_positions;
        BigInt size = pow(BigInt(p.a), static_cast<unsigned>(cls.free_positions)) *
                      pow(BigInt(p.b), static_cast<unsigned>(k));
        if (big(cls.members.size()) != size)
            throw theorem_violation("grid_partition: class size != a^(n-2k) b^k");

        // Internal edges of P_a^(n-2k) x P_b^k, and every internal edge must
        // move one coordinate by one (adjacency already guarantees a single
        // +-1 letter change; the change must not cross the rho boundary).
        BigInt expect_edges =
            BigInt(cls.free_positions) * BigInt(p.a - 1) *
                pow(BigInt(p.a), static_cast<unsigned>(std::max(cls.free_positions - 1, 0))) *
                pow(BigInt(p.b), static_cast<unsigned>(k)) +
            BigInt(k) * BigInt(p.b - 1) *
                pow(BigInt(p.b), static_cast<unsigned>(std::max(k - 1, 0))) *
                pow(BigInt(p.a), static_cast<unsigned>(cls.free_positions));
        std::size_t internal = 0;
        for (VertexId v : cls.members) {
            for (VertexId u : g.adj[static_cast<std::size_t>(v)]) {
                if (u < v) continue;
                if (rho_project(g.word(u), p) != label) continue;
                ++internal;
            }
        }
        if (big(internal) != expect_edges)
            throw theorem_violation("grid_partition: internal edge count mismatch");
    }

    std::vector<GridClass> out;
    out.reserve(classes.size());
    for (auto& [label, cls] : classes) out.push_back(std::move(cls));
    return out;
}

QuotientGraph quotient_graph(const HoradamGraph& g) {
    const Params& p = g.params;
    if (p.n < 1) throw parameter_error("quotient_graph: requires n >= 1");

    std::map<std::string, int> label_ids;
    std::vector<std::string> label_of_vertex(g.num_vertices());
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
        label_of_vertex[static_cast<std::size_t>(v)] = rho_project(g.word(v), p);
        label_ids.emplace(label_of_vertex[static_cast<std::size_t>(v)], 0);
    }
    QuotientGraph q;
    for (auto& [label, id] : label_ids) {
        id = static_cast<int>(q.labels.size());
        q.labels.push_back(label);
    }

    std::set<std::pair<int, int>> edges;
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
        int cv = label_ids[label_of_vertex[static_cast<std::size_t>(v)]];
        for (VertexId u : g.adj[static_cast<std::size_t>(v)]) {
            if (u < v) continue;
            int cu = label_ids[label_of_vertex[static_cast<std::size_t>(u)]];
            if (cv != cu) edges.emplace(std::min(cv, cu), std::max(cv, cu));
        }
    }
    q.edges.assign(edges.begin(), edges.end());

    // Explicit isomorphism check against Gamma_{n-1}: drop the leading zero,
    // compare vertex sets and Hamming-1 adjacency.
    oracle::FibonacciCube gamma = oracle::fibonacci_cube(p.n - 1);
    if (q.labels.size() != gamma.num_vertices())
        throw theorem_violation("quotient_graph: vertex count differs from Gamma_{n-1}");
    for (std::size_t i = 0; i < q.labels.size(); ++i) {
        if (q.labels[i][0] != '0')
            throw theorem_violation("quotient_graph: label does not start with 0");
        if (q.labels[i].substr(1) != gamma.vertices[i])
            throw theorem_violation("quotient_graph: dropped labels differ from Gamma_{n-1}");
    }
    std::set<std::pair<int, int>> gamma_edges;
    for (VertexId v = 0; v < static_cast<VertexId>(gamma.num_vertices()); ++v)
        for (VertexId u : gamma.adj[static_cast<std::size_t>(v)])
            if (u > v) gamma_edges.emplace(v, u);
    if (edges != gamma_edges)
        throw theorem_violation("quotient_graph: adjacency differs from Gamma_{n-1}");
    return q;
}

std::string sigma_embed(const Word& w, const Params& p) {
    std::string bits;
    bits.reserve(static_cast<std::size_t>((p.a + p.b - 1)) * w.size());
    for (const PrimitiveBlock& blk : decompose_blocks(w, p)) {
        if (blk.kind == PrimitiveBlock::Kind::single) {
            int k = blk.letter;
            bits.append(static_cast<std::size_t>(k + 1), '0');
            bits.append(static_cast<std::size_t>(p.a - 1 - k), '1');
            bits.append(static_cast<std::size_t>(p.b - 1), '0');
        } else {
            int l = blk.letter - p.a;
            bits.append(static_cast<std::size_t>(p.a), '1');
            bits.append(static_cast<std::size_t>(p.b - 1), '0');
            bits.append(static_cast<std::size_t>(p.a), '0');
            bits.append(static_cast<std::size_t>(l), '1');
            bits.append(static_cast<std::size_t>(p.b - 1 - l), '0');
        }
    }
    return bits;
}

std::optional<Word> sigma_decode(const std::string& bits, const Params& p) {
    const std::size_t chunk = static_cast<std::size_t>(p.a + p.b - 1);
    Word w;
    std::size_t pos = 0;
    auto run = [&](std::size_t from, std::size_t count, char c) {
        for (std::size_t i = 0; i < count; ++i)
            if (bits[from + i] != c) return false;
        return true;
    };
    while (pos < bits.size()) {
        if (pos + chunk > bits.size()) return std::nullopt;
        if (bits[pos] == '0') {
            // Single(k): k+1 zeros, a-1-k ones, b-1 zeros.
            std::size_t z = 0;
            while (z < chunk && bits[pos + z] == '0') ++z;
            int k = static_cast<int>(z) - 1;
            if (k > p.a - 1) k = p.a - 1; // the all-zero chunk is Single(a-1)
            std::size_t ones = static_cast<std::size_t>(p.a - 1 - k);
            if (!run(pos, static_cast<std::size_t>(k + 1), '0') ||
                !run(pos + static_cast<std::size_t>(k + 1), ones, '1') ||
                !run(pos + static_cast<std::size_t>(k + 1) + ones,
                     static_cast<std::size_t>(p.b - 1), '0'))
                return std::nullopt;
            w.push_back(static_cast<Letter>(k));
            pos += chunk;
        } else {
            // Pair(a+l): a ones, b-1 zeros, a zeros, l ones, b-1-l zeros.
            if (pos + 2 * chunk > bits.size()) return std::nullopt;
            if (!run(pos, static_cast<std::size_t>(p.a), '1') ||
                !run(pos + static_cast<std::size_t>(p.a),
                     static_cast<std::size_t>(p.b - 1), '0') ||
                !run(pos + chunk, static_cast<std::size_t>(p.a), '0'))
                return std::nullopt;
            std::size_t tail = pos + chunk + static_cast<std::size_t>(p.a);
            std::size_t l = 0;
            while (l < static_cast<std::size_t>(p.b - 1) && bits[tail + l] == '1') ++l;
            if (!run(tail + l, static_cast<std::size_t>(p.b - 1) - l, '0'))
                return std::nullopt;
            w.push_back(0);
            w.push_back(static_cast<Letter>(p.a + static_cast<int>(l)));
            pos += 2 * chunk;
        }
    }
    if (!is_valid_word(w, p)) return std::nullopt;
    return w;
}

namespace {

std::string majority(const std::string& x, const std::string& y, const std::string& z) {
    std::string m(x.size(), '0');
    for (std::size_t i = 0; i < x.size(); ++i) {
        int ones = (x[i] == '1') + (y[i] == '1') + (z[i] == '1');
        m[i] = ones >= 2 ? '1' : '0';
    }
    return m;
}

} // namespace

Word median_of_triple(const Word& u, const Word& v, const Word& w, const Params& p) {
    std::string m = majority(sigma_embed(u, p), sigma_embed(v, p), sigma_embed(w, p));
    std::optional<Word> pre = sigma_decode(m, p);
    if (!pre)
        throw theorem_violation("median_of_triple: majority word has no valid preimage");
    return *pre;
}

SigmaEmbedding::SigmaEmbedding(const HoradamGraph& g) : graph_(g) {
    images_.reserve(g.num_vertices());
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
        images_.push_back(sigma_embed(g.word(v), g.params));
        index_.emplace(images_.back(), v);
    }
    if (index_.size() != g.num_vertices())
        throw theorem_violation("sigma embedding is not injective");
}

std::optional<VertexId> SigmaEmbedding::preimage(const std::string& bits) const {
    auto it = index_.find(bits);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId SigmaEmbedding::median(VertexId x, VertexId y, VertexId z) const {
    std::string m = majority(image(x), image(y), image(z));
    auto it = index_.find(m);
    if (it == index_.end())
        throw theorem_violation("median: majority word has no preimage in the vertex set");
    return it->second;
}

} // namespace horadam
