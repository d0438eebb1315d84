#include "horadam/words.hpp"

#include <functional>
#include <limits>
#include <string_view>

#include "horadam/errors.hpp"
#include "horadam/sequences.hpp"

namespace horadam {

void validate(const Params& p) {
    if (p.a < 1) throw parameter_error("a must be >= 1");
    if (p.b < 1) throw parameter_error("b must be >= 1");
    if (p.n < 0) throw parameter_error("n must be >= 0");
    if (p.a + p.b - 1 > std::numeric_limits<Letter>::max())
        throw parameter_error("alphabet size a+b does not fit the letter type");
}

bool is_valid_word(std::span<const int> letters, const Params& p) {
    if (static_cast<int>(letters.size()) != p.n) return false;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        int x = letters[i];
        if (x < 0 || x > p.top_letter()) return false;
        if (x >= p.a && (i == 0 || letters[i - 1] != 0)) return false;
    }
    return true;
}

bool is_valid_word(const Word& w, const Params& p) {
    if (static_cast<int>(w.size()) != p.n) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > p.top_letter()) return false;
        if (w[i] >= p.a && (i == 0 || w[i - 1] != 0)) return false;
    }
    return true;
}

std::vector<PrimitiveBlock> decompose_blocks(const Word& w, const Params& p) {
    if (!is_valid_word(w, p)) throw parameter_error("decompose_blocks: invalid word");
    std::vector<PrimitiveBlock> blocks;
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] == 0 && i + 1 < w.size() && w[i + 1] >= p.a) {
            blocks.push_back(pair_block(w[i + 1]));
            i += 2;
        } else {
            blocks.push_back(single_block(w[i]));
            i += 1;
        }
    }
    return blocks;
}

Word concat_blocks(std::span<const PrimitiveBlock> blocks) {
    Word w;
    for (const auto& blk : blocks) {
        if (blk.kind == PrimitiveBlock::Kind::pair) w.push_back(0);
        w.push_back(blk.letter);
    }
    return w;
}

std::vector<Word> enumerate_words(const Params& p, std::size_t max_words) {
    validate(p);
    BigInt total = vertex_count(p);
    if (total > BigInt(static_cast<long long>(max_words)))
        throw resource_error("enumerate_words: " + total.to_string() +
                             " words exceed the cap of " + std::to_string(max_words));

    std::vector<Word> out;
    out.reserve(total.to_uint64());
    Word w(static_cast<std::size_t>(p.n), 0);
    // Depth-first over positions with letters tried in ascending order
    // yields lexicographic output.
    std::function<void(int)> fill = [&](int pos) {
        if (pos == p.n) {
            out.push_back(w);
            return;
        }
        bool after_zero = pos > 0 && w[pos - 1] == 0;
        int limit = after_zero ? p.top_letter() : p.a - 1;
        for (int x = 0; x <= limit; ++x) {
            w[pos] = static_cast<Letter>(x);
            fill(pos + 1);
        }
    };
    fill(0);
    return out;
}

std::string render_word(const Word& w, const Params& p) {
    std::string out;
    if (p.alphabet_size() <= 10) {
        for (Letter x : w) out.push_back(static_cast<char>('0' + x));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i != 0) out.push_back(',');
            out += std::to_string(static_cast<int>(w[i]));
        }
    }
    return out;
}

Word parse_word(std::string_view text, const Params& p) {
    Word w;
    if (p.alphabet_size() <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9') throw parameter_error("parse_word: bad digit");
            w.push_back(static_cast<Letter>(c - '0'));
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - pos);
            if (tok.empty()) throw parameter_error("parse_word: empty letter");
            int v = 0;
            for (char c : tok) {
                if (c < '0' || c > '9') throw parameter_error("parse_word: bad digit");
                v = v * 10 + (c - '0');
                if (v > 255) throw parameter_error("parse_word: letter out of range");
            }
            w.push_back(static_cast<Letter>(v));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    if (!is_valid_word(w, p)) throw parameter_error("parse_word: not a valid word");
    return w;
}

std::size_t WordHash::operator()(const Word& w) const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
}

} // namespace horadam
