#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "horadam/errors.hpp"
#include "horadam/sequences.hpp"
#include "horadam/words.hpp"

using namespace horadam;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(Params{0, 1, 1}), parameter_error);
    CHECK_THROWS_AS(validate(Params{1, 0, 1}), parameter_error);
    CHECK_THROWS_AS(validate(Params{2, 2, -1}), parameter_error);
    CHECK_NOTHROW(validate(Params{1, 1, 0}));
    CHECK_NOTHROW(validate(Params{100, 100, 4}));
    CHECK_THROWS_AS(validate(Params{200, 200, 1}), parameter_error);
}

TEST_CASE("word validity") {
    Params p32{3, 2, 3};
    CHECK(is_valid_word(parse_word("042", p32), p32));
    CHECK_FALSE(is_valid_word(Word{3, 0}, Params{3, 2, 2})); // 3 >= a not after 0
    CHECK(is_valid_word(Word{}, Params{3, 2, 0}));
    CHECK_FALSE(is_valid_word(Word{0, 4, 2}, Params{3, 2, 2})); // wrong length

    std::vector<int> raw{0, 4, 2};
    CHECK(is_valid_word(std::span<const int>(raw), p32));
    std::vector<int> negative{-1, 0, 0};
    CHECK_FALSE(is_valid_word(std::span<const int>(negative), p32));
    std::vector<int> too_big{0, 5, 0};
    CHECK_FALSE(is_valid_word(std::span<const int>(too_big), p32));
}

TEST_CASE("block decomposition") {
    Params p32{3, 2, 3};
    auto blocks = decompose_blocks(parse_word("042", p32), p32);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == pair_block(4));
    CHECK(blocks[1] == single_block(2));

    Params p12{1, 2, 4};
    blocks = decompose_blocks(parse_word("0020", p12), p12);
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == single_block(0));
    CHECK(blocks[1] == pair_block(2));
    CHECK(blocks[2] == single_block(0));

    CHECK(decompose_blocks(Word{}, Params{2, 2, 0}).empty());
    CHECK_THROWS_AS(decompose_blocks(Word{3, 0}, Params{3, 2, 2}), parameter_error);
}

TEST_CASE("decompose then concatenate is the identity") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int n = 0; n <= 5; ++n) {
                Params p{a, b, n};
                for (const Word& w : enumerate_words(p)) {
                    auto blocks = decompose_blocks(w, p);
                    CHECK(concat_blocks(blocks) == w);
                }
            }
}

TEST_CASE("enumeration order and contents") {
    Params p{1, 2, 3};
    auto words = enumerate_words(p);
    REQUIRE(words.size() == 5);
    std::vector<std::string> rendered;
    for (const Word& w : words) rendered.push_back(render_word(w, p));
    CHECK(rendered == std::vector<std::string>{"000", "001", "002", "010", "020"});

    auto single = enumerate_words(Params{3, 2, 1});
    REQUIRE(single.size() == 3);
    CHECK(render_word(single[0], Params{3, 2, 1}) == "0");
    CHECK(render_word(single[2], Params{3, 2, 1}) == "2");

    CHECK(enumerate_words(Params{2, 2, 4}).size() == 44);
}

TEST_CASE("enumeration matches the counting formula and stays valid") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int n = 0; n <= 5; ++n) {
                Params p{a, b, n};
                auto words = enumerate_words(p);
                CHECK(BigInt(static_cast<long long>(words.size())) == vertex_count(p));
                CHECK(std::is_sorted(words.begin(), words.end()));
                CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
                for (const Word& w : words) CHECK(is_valid_word(w, p));
            }
}

TEST_CASE("invalid mutations fail validation") {
    Params p{2, 2, 4};
    for (const Word& w : enumerate_words(p)) {
        Word out_of_range = w;
        out_of_range[0] = static_cast<Letter>(p.top_letter() + 1);
        CHECK_FALSE(is_valid_word(out_of_range, p));
        // Force a letter >= a after a nonzero letter.
        Word bad = w;
        bad[1] = 1;
        bad[2] = static_cast<Letter>(p.a);
        CHECK_FALSE(is_valid_word(bad, p));
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_words(Params{2, 2, 6}, 100), resource_error);
}

TEST_CASE("rendering for wide alphabets") {
    Params wide{8, 5, 2};
    CHECK(wide.alphabet_size() == 13);
    Word w{0, 12};
    CHECK(render_word(w, wide) == "0,12");
    CHECK(parse_word("0,12", wide) == w);
    CHECK_THROWS_AS(parse_word("7,12", wide), parameter_error); // 12 after nonzero

    Params narrow{3, 2, 2};
    CHECK(render_word(Word{0, 4}, narrow) == "04");
    CHECK(parse_word("04", narrow) == Word{0, 4});
    CHECK_THROWS_AS(parse_word("40", narrow), parameter_error);
}
