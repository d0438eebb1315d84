#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/params.hpp"

namespace horadam {

using Word = std::vector<Letter>;

// A generator of the word monoid: either one letter k < a, or the
// two-letter block 0l with a <= l <= a+b-1 (stored by its second letter).
struct PrimitiveBlock {
    enum class Kind : std::uint8_t { single, pair };

    Kind kind = Kind::single;
    Letter letter = 0;

    int length() const { return kind == Kind::single ? 1 : 2; }
    bool operator==(const PrimitiveBlock&) const = default;
};

inline PrimitiveBlock single_block(Letter k) { return {PrimitiveBlock::Kind::single, k}; }
inline PrimitiveBlock pair_block(Letter l) { return {PrimitiveBlock::Kind::pair, l}; }

// Total predicate: letters in range, length n, every letter >= a follows a 0.
bool is_valid_word(std::span<const int> letters, const Params& p);
bool is_valid_word(const Word& w, const Params& p);

// Unique greedy left-to-right block decomposition; rejects invalid words.
std::vector<PrimitiveBlock> decompose_blocks(const Word& w, const Params& p);
Word concat_blocks(std::span<const PrimitiveBlock> blocks);

inline constexpr std::size_t default_vertex_cap = 1'000'000;

// All valid words of length p.n in lexicographic order of letter values.
// Throws resource_error when the count would exceed max_words.
std::vector<Word> enumerate_words(const Params& p,
                                  std::size_t max_words = default_vertex_cap);

// Compact digit string when a+b <= 10, comma-separated decimals otherwise.
std::string render_word(const Word& w, const Params& p);
Word parse_word(std::string_view text, const Params& p);

struct WordHash {
    std::size_t operator()(const Word& w) const;
};

} // namespace horadam
