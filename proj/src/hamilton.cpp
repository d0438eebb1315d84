#include "horadam/hamilton.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "horadam/errors.hpp"

namespace horadam {

namespace {

// Fill length n by cycling the unit pattern.
Word repeat_pattern(std::initializer_list<int> unit, int n) {
    Word w;
    w.reserve(static_cast<std::size_t>(n));
    auto it = unit.begin();
    for (int i = 0; i < n; ++i) {
        w.push_back(static_cast<Letter>(*it));
        if (++it == unit.end()) it = unit.begin();
    }
    return w;
}

int leading_copy(const Word& w, const Params& p) {
    if (w[0] == 0 && w.size() > 1 && w[1] >= p.a) return w[1];
    return w[0];
}

std::vector<Word> with_prefix(const Word& prefix, const std::vector<Word>& seq,
                              bool reversed) {
    std::vector<Word> out;
    out.reserve(seq.size());
    auto emit = [&](const Word& w) {
        Word x = prefix;
        x.insert(x.end(), w.begin(), w.end());
        out.push_back(std::move(x));
    };
    if (reversed)
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) emit(*it);
    else
        for (const Word& w : seq) emit(w);
    return out;
}

// Whether seq should be reversed so that its first element equals `front`;
// throws when neither endpoint matches.
bool reversed_to_start_at(const std::vector<Word>& seq, const Word& front) {
    if (seq.front() == front) return false;
    if (seq.back() == front) return true;
    throw internal_error("hamiltonian construction: no matching sub-path endpoint");
}

std::vector<Word> build_path(const Params& p);

// The copies in chain order (letters a-1..0, then blocks a..a+b-1), each
// carrying the lower-dimensional path, stitched through the single
// prefix-edit edge between consecutive copies.
std::vector<Word> chain_assemble(const Params& p, const Word& head,
                                 const std::vector<Word>& sub1,
                                 const std::vector<Word>& sub2) {
    std::vector<Word> walk;
    walk.reserve(static_cast<std::size_t>(p.a) * sub1.size() +
                 static_cast<std::size_t>(p.b) * sub2.size());
    for (int k = p.a - 1; k >= 0; --k) {
        Word need = k == p.a - 1 ? Word(head.begin() + 1, head.end())
                                 : Word(walk.back().begin() + 1, walk.back().end());
        auto seg = with_prefix({static_cast<Letter>(k)}, sub1,
                               reversed_to_start_at(sub1, need));
        walk.insert(walk.end(), seg.begin(), seg.end());
    }
    for (int l = p.a; l <= p.top_letter(); ++l) {
        const Word& prev = walk.back();
        if (prev[0] != 0 || prev[1] != l - 1)
            throw internal_error("hamiltonian path: bridge endpoint mismatch");
        Word need(prev.begin() + 2, prev.end());
        auto seg = with_prefix({0, static_cast<Letter>(l)}, sub2,
                               reversed_to_start_at(sub2, need));
        walk.insert(walk.end(), seg.begin(), seg.end());
    }
    return walk;
}

std::vector<Word> build_path(const Params& p) {
    EndpointContract contract = path_endpoints(p);
    std::vector<Word> walk;

    if (p.n == 1) {
        for (int k = 0; k < p.a; ++k) walk.push_back({static_cast<Letter>(k)});
    } else if (p.n == 2) {
        // Tail 0(a+b-1)..0a, then a boustrophedon through the a x a grid.
        for (int l = p.top_letter(); l >= p.a; --l)
            walk.push_back({0, static_cast<Letter>(l)});
        for (int x = 0; x < p.a; ++x) {
            if (x % 2 == 0)
                for (int y = p.a - 1; y >= 0; --y)
                    walk.push_back({static_cast<Letter>(x), static_cast<Letter>(y)});
            else
                for (int y = 0; y < p.a; ++y)
                    walk.push_back({static_cast<Letter>(x), static_cast<Letter>(y)});
        }
    } else {
        const Word& head =
            leading_copy(contract.start, p) == p.a - 1 ? contract.start : contract.end;
        if (leading_copy(head, p) != p.a - 1)
            throw internal_error("hamiltonian path: no contract endpoint in copy a-1");
        walk = chain_assemble(p, head, build_path({p.a, p.b, p.n - 1}),
                              build_path({p.a, p.b, p.n - 2}));
    }

    if (walk.front() != contract.start) std::reverse(walk.begin(), walk.end());
    if (walk.front() != contract.start || walk.back() != contract.end)
        throw internal_error("hamiltonian path: endpoints do not match the contract");
    return walk;
}

} // namespace

EndpointContract path_endpoints(const Params& p) {
    validate(p);
    if (p.n < 1) throw parameter_error("path_endpoints: requires n >= 1");
    const int A = p.a - 1;
    const int Z = p.top_letter();
    EndpointContract c;
    bool a_odd = p.a % 2 != 0;
    bool b_odd = p.b % 2 != 0;
    if (a_odd && !b_odd) {
        c.parity_case = ParityCase::odd_even;
        c.start = repeat_pattern({0, Z}, p.n);
        c.end = repeat_pattern({A}, 1);
        Word tail = repeat_pattern({0, Z}, p.n - 1);
        c.end.insert(c.end.end(), tail.begin(), tail.end());
    } else if (a_odd && b_odd) {
        c.parity_case = ParityCase::odd_odd;
        c.start = repeat_pattern({0, Z, A}, p.n);
        c.end = repeat_pattern({A, 0, Z}, p.n);
    } else if (!a_odd && !b_odd) {
        c.parity_case = ParityCase::even_even;
        c.start = repeat_pattern({A}, p.n);
        if (p.n == 1) {
            c.end = {0};
        } else {
            c.end = {0, static_cast<Letter>(Z)};
            Word tail = repeat_pattern({A}, p.n - 2);
            c.end.insert(c.end.end(), tail.begin(), tail.end());
        }
    } else {
        c.parity_case = ParityCase::even_odd;
        c.start = repeat_pattern({A}, p.n);
        c.end = repeat_pattern({0, Z}, p.n);
    }
    return c;
}

std::vector<Word> hamiltonian_path_words(const Params& p) {
    validate(p);
    if (p.n < 1) throw parameter_error("hamiltonian_path: requires n >= 1");
    return build_path(p);
}

bool validate_walk(const HoradamGraph& g, const Walk& w) {
    if (w.vertices.size() != g.num_vertices()) return false;
    if (w.vertices.empty()) return false;
    std::vector<bool> seen(g.num_vertices(), false);
    for (VertexId v : w.vertices) {
        if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices()) return false;
        if (seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
        if (!adjacent(g.word(w.vertices[i]), g.word(w.vertices[i + 1]))) return false;
    if (w.kind == Walk::Kind::cycle) {
        if (w.vertices.size() < 3) return false;
        if (!adjacent(g.word(w.vertices.back()), g.word(w.vertices.front()))) return false;
    }
    return true;
}

Walk hamiltonian_path(const HoradamGraph& g) {
    std::vector<Word> words = hamiltonian_path_words(g.params);
    Walk w;
    w.kind = Walk::Kind::path;
    w.vertices.reserve(words.size());
    for (const Word& word : words) {
        VertexId v = g.index_of(word);
        if (v < 0) throw internal_error("hamiltonian_path: word outside the vertex set");
        w.vertices.push_back(v);
    }
    if (!validate_walk(g, w))
        throw internal_error("hamiltonian_path: constructed walk failed validation");
    return w;
}

namespace {

using Cycle = std::vector<Word>;

// Graph neighbors of w in a fixed deterministic order (position ascending,
// -1 before +1).
std::vector<Word> word_neighbors(const Word& w, const Params& p) {
    std::vector<Word> out;
    Word tmp = w;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (int delta : {-1, +1}) {
            int x = static_cast<int>(w[i]) + delta;
            if (x < 0 || x > p.top_letter()) continue;
            tmp[i] = static_cast<Letter>(x);
            if (is_valid_word(tmp, p)) out.push_back(tmp);
        }
        tmp[i] = w[i];
    }
    return out;
}

// Both copies traversed along the same sub-path, one reversed; the two
// prefix-edit edges at the shared endpoints close the cycle.
Cycle pair_cycle(const Word& prefix_lo, const Word& prefix_hi,
                 const std::vector<Word>& sub) {
    Cycle c = with_prefix(prefix_lo, sub, false);
    Cycle upper = with_prefix(prefix_hi, sub, true);
    c.insert(c.end(), upper.begin(), upper.end());
    return c;
}

// Deterministic rung exchange: find the first edge (u,v) of c1 whose
// neighbor-image (u',v') is an edge of c2; drop both edges and reconnect
// through the rungs u-u' and v-w'.
Cycle merge_cycles(const Cycle& c1, const Cycle& c2, const Params& p) {
    std::unordered_map<Word, std::size_t, WordHash> pos2;
    pos2.reserve(c2.size() * 2);
    for (std::size_t j = 0; j < c2.size(); ++j) pos2.emplace(c2[j], j);

    const std::size_t m1 = c1.size(), m2 = c2.size();
    for (std::size_t i = 0; i < m1; ++i) {
        const Word& u = c1[i];
        const Word& v = c1[(i + 1) % m1];
        for (const Word& u_img : word_neighbors(u, p)) {
            auto it = pos2.find(u_img);
            if (it == pos2.end()) continue;
            std::size_t j = it->second;
            for (int dir : {+1, -1}) {
                const Word& w_img = c2[(j + m2 + static_cast<std::size_t>(dir)) % m2];
                if (!adjacent(v, w_img)) continue;
                Cycle out;
                out.reserve(m1 + m2);
                // c1 from v all the way around to u
                for (std::size_t t = 0; t < m1; ++t) out.push_back(c1[(i + 1 + t) % m1]);
                // c2 from u' the long way around to w'
                std::ptrdiff_t sm2 = static_cast<std::ptrdiff_t>(m2);
                for (std::ptrdiff_t t = 0; t < sm2; ++t) {
                    std::ptrdiff_t idx =
                        ((static_cast<std::ptrdiff_t>(j) - dir * t) % sm2 + sm2) % sm2;
                    out.push_back(c2[static_cast<std::size_t>(idx)]);
                }
                return out;
            }
        }
    }
    throw internal_error("hamiltonian cycle: no matched edge between cycles");
}

// Splice parallel grid columns into c: anchors must form a contiguous run
// along the cycle; between each anchor pair (2i, 2i+1) the run edge is
// replaced by the excursion through both columns.
Cycle absorb_columns(Cycle c, const std::vector<Word>& anchors,
                     const std::vector<std::vector<Word>>& columns) {
    if (anchors.size() % 2 != 0 || anchors.empty())
        throw internal_error("absorb_columns: anchor count must be even");
    auto it = std::find(c.begin(), c.end(), anchors[0]);
    if (it == c.end()) throw internal_error("absorb_columns: anchor not on the cycle");
    std::size_t p0 = static_cast<std::size_t>(it - c.begin());
    const std::size_t m = c.size();
    if (anchors.size() > 1) {
        if (c[(p0 + 1) % m] == anchors[1]) {
            // forward
        } else if (c[(p0 + m - 1) % m] == anchors[1]) {
            std::reverse(c.begin(), c.end());
            p0 = m - 1 - p0;
        } else {
            throw internal_error("absorb_columns: anchor run is not contiguous");
        }
    }
    std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(p0), c.end());
    for (std::size_t t = 0; t < anchors.size(); ++t)
        if (c[t] != anchors[t])
            throw internal_error("absorb_columns: anchor run is not contiguous");

    Cycle out;
    out.reserve(c.size() + columns.size() * (columns.empty() ? 0 : columns[0].size()));
    for (std::size_t t = 0; t < anchors.size(); t += 2) {
        out.push_back(c[t]);
        out.insert(out.end(), columns[t].begin(), columns[t].end());
        out.insert(out.end(), columns[t + 1].rbegin(), columns[t + 1].rend());
        out.push_back(c[t + 1]);
    }
    out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(anchors.size()), c.end());
    return out;
}

Cycle build_cycle(const Params& p);

Cycle build_cycle_even_even(const Params& p) {
    std::vector<Word> sub1 = hamiltonian_path_words({p.a, p.b, p.n - 1});
    std::vector<Word> sub2 = hamiltonian_path_words({p.a, p.b, p.n - 2});
    Cycle c = pair_cycle({0}, {1}, sub1);
    for (int k = 2; k + 1 <= p.a - 1; k += 2)
        c = merge_cycles(c, pair_cycle({static_cast<Letter>(k)},
                                       {static_cast<Letter>(k + 1)}, sub1),
                         p);
    for (int l = p.a; l + 1 <= p.top_letter(); l += 2)
        c = merge_cycles(c, pair_cycle({0, static_cast<Letter>(l)},
                                       {0, static_cast<Letter>(l + 1)}, sub2),
                         p);
    return c;
}

Cycle build_cycle_even_odd(const Params& p) {
    const int Z = p.top_letter();
    std::vector<Word> sub1 = hamiltonian_path_words({p.a, p.b, p.n - 1});
    std::vector<Word> sub2 = hamiltonian_path_words({p.a, p.b, p.n - 2});

    // Pair cycles over the letter copies and the first b-1 block copies;
    // the owner of the last-block attachment region is absorbed or merged
    // before the chain is assembled around it.
    std::vector<std::pair<Word, Cycle>> pairs; // keyed by low prefix
    pairs.emplace_back(Word{0}, pair_cycle({0}, {1}, sub1));
    for (int k = 2; k + 1 <= p.a - 1; k += 2)
        pairs.emplace_back(Word{static_cast<Letter>(k)},
                           pair_cycle({static_cast<Letter>(k)},
                                      {static_cast<Letter>(k + 1)}, sub1));
    for (int l = p.a; l + 1 <= Z - 1; l += 2)
        pairs.emplace_back(Word{0, static_cast<Letter>(l)},
                           pair_cycle({0, static_cast<Letter>(l)},
                                      {0, static_cast<Letter>(l + 1)}, sub2));

    if (p.n == 3) {
        // Absorb the path 0Z k, k = 0..a-1, alongside its neighbor run.
        Word run_prefix = p.b >= 2 ? Word{0, static_cast<Letter>(Z - 1)}
                                   : Word{0, static_cast<Letter>(p.a - 1)};
        std::vector<Word> anchors;
        std::vector<std::vector<Word>> columns;
        for (int k = 0; k < p.a; ++k) {
            Word anchor = run_prefix;
            anchor.push_back(static_cast<Letter>(k));
            anchors.push_back(std::move(anchor));
            columns.push_back({Word{0, static_cast<Letter>(Z), static_cast<Letter>(k)}});
        }
        // The anchor run lives in copy 0(Z-1) (last block pair) when b >= 3,
        // and in copy 0 (first letter pair) when b = 1.
        Cycle& owner = p.b >= 2 ? pairs.back().second : pairs.front().second;
        owner = absorb_columns(std::move(owner), anchors, columns);
    }

    Cycle c = std::move(pairs.front().second);
    for (std::size_t i = 1; i < pairs.size(); ++i)
        c = merge_cycles(c, pairs[i].second, p);

    if (p.n >= 5) {
        Cycle last = with_prefix({0, static_cast<Letter>(Z)},
                                 build_cycle({p.a, p.b, p.n - 2}), false);
        c = merge_cycles(c, last, p);
    }
    return c;
}

Cycle build_cycle_odd_odd(const Params& p) {
    const int Z = p.top_letter();
    std::vector<Word> sub1 = hamiltonian_path_words({p.a, p.b, p.n - 1});
    std::vector<Word> sub2 = hamiltonian_path_words({p.a, p.b, p.n - 2});

    // Core: the a+1 copies 00, 01, ..., 0(a-1), 0a of the (n-2)-cube.
    Cycle c = pair_cycle({0, 0}, {0, 1}, sub2);

    if (p.n == 5) {
        // The b copies 00l of the 2-cube are split into two grids and
        // absorbed alongside runs inside the 00(a-1) segment of the core.
        std::vector<Word> anchors_a;
        std::vector<std::vector<Word>> columns_a;
        for (int k = 0; k <= Z; ++k) {
            anchors_a.push_back(Word{0, 0, static_cast<Letter>(p.a - 1), 0,
                                     static_cast<Letter>(k)});
            std::vector<Word> col;
            for (int l = p.a; l <= Z; ++l)
                col.push_back(Word{0, 0, static_cast<Letter>(l), 0,
                                   static_cast<Letter>(k)});
            columns_a.push_back(std::move(col));
        }
        c = absorb_columns(std::move(c), anchors_a, columns_a);

        if (p.a >= 3) {
            // Remaining grid rows x >= 1 in the boustrophedon order of the
            // 2-cube path.
            std::vector<Word> anchors_b;
            std::vector<std::vector<Word>> columns_b;
            for (int x = 1; x < p.a; ++x) {
                for (int step = 0; step < p.a; ++step) {
                    int y = x % 2 == 1 ? step : p.a - 1 - step;
                    anchors_b.push_back(Word{0, 0, static_cast<Letter>(p.a - 1),
                                             static_cast<Letter>(x),
                                             static_cast<Letter>(y)});
                    std::vector<Word> col;
                    for (int l = p.a; l <= Z; ++l)
                        col.push_back(Word{0, 0, static_cast<Letter>(l),
                                           static_cast<Letter>(x),
                                           static_cast<Letter>(y)});
                    columns_b.push_back(std::move(col));
                }
            }
            c = absorb_columns(std::move(c), anchors_b, columns_b);
        }
    }

    for (int k = 2; k + 1 <= p.a; k += 2)
        c = merge_cycles(c, pair_cycle({0, static_cast<Letter>(k)},
                                       {0, static_cast<Letter>(k + 1)}, sub2),
                         p);
    for (int k = 1; k + 1 <= p.a - 1; k += 2)
        c = merge_cycles(c, pair_cycle({static_cast<Letter>(k)},
                                       {static_cast<Letter>(k + 1)}, sub1),
                         p);
    for (int l = p.a + 1; l + 1 <= Z; l += 2)
        c = merge_cycles(c, pair_cycle({0, static_cast<Letter>(l)},
                                       {0, static_cast<Letter>(l + 1)}, sub2),
                         p);

    if (p.n > 5) {
        for (int l = p.a; l <= Z; ++l) {
            Cycle inner = with_prefix({0, 0, static_cast<Letter>(l)},
                                      build_cycle({p.a, p.b, p.n - 3}), false);
            c = merge_cycles(c, inner, p);
        }
    }
    return c;
}

Cycle build_cycle(const Params& p) {
    bool a_even = p.a % 2 == 0;
    bool b_even = p.b % 2 == 0;
    if (a_even && b_even) {
        if (p.n < 3) throw parameter_error("hamiltonian_cycle: requires n >= 3");
        return build_cycle_even_even(p);
    }
    if (a_even && !b_even) {
        if (p.n < 3 || p.n % 2 == 0)
            throw parameter_error("hamiltonian_cycle: requires odd n >= 3");
        return build_cycle_even_odd(p);
    }
    if (!a_even && !b_even) {
        if (p.n < 5 || p.n % 3 != 2)
            throw parameter_error("hamiltonian_cycle: requires n = 3k-1, k >= 2");
        return build_cycle_odd_odd(p);
    }
    throw parameter_error("hamiltonian_cycle: no cycle exists for a odd, b even");
}

} // namespace

std::vector<Word> hamiltonian_cycle_words(const Params& p) {
    validate(p);
    return build_cycle(p);
}

CycleResult hamiltonian_cycle(const HoradamGraph& g) {
    const Params& p = g.params;
    CycleResult r;
    if (g.num_vertices() % 2 == 1) {
        r.status = CycleResult::Status::impossible;
        r.reason = "bipartite graph of odd order";
        return r;
    }
    bool a_even = p.a % 2 == 0;
    bool b_even = p.b % 2 == 0;
    bool guaranteed = (a_even && b_even && p.n >= 3) ||
                      (a_even && !b_even && p.n >= 3 && p.n % 2 == 1) ||
                      (!a_even && !b_even && p.n >= 5 && p.n % 3 == 2);
    if (!guaranteed) {
        r.status = CycleResult::Status::not_guaranteed;
        r.reason = "outside the guaranteed parity classes";
        return r;
    }

    std::vector<Word> words = build_cycle(p);
    Walk w;
    w.kind = Walk::Kind::cycle;
    w.vertices.reserve(words.size());
    for (const Word& word : words) {
        VertexId v = g.index_of(word);
        if (v < 0) throw internal_error("hamiltonian_cycle: word outside the vertex set");
        w.vertices.push_back(v);
    }
    if (!validate_walk(g, w))
        throw internal_error("hamiltonian_cycle: constructed cycle failed validation");
    r.status = CycleResult::Status::cycle;
    r.walk = std::move(w);
    return r;
}

} // namespace horadam
