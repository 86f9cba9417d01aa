// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "bmc/block_codec.hpp"
#include "bmc/error.hpp"
#include "oracle.hpp"

using namespace bmc;

namespace {

BitVec bits(const char* s) {
    return BitVec::from_string(s);
}

BitVec word_of(std::uint64_t value, unsigned n) {
    BitVec v;
    v.push_uint(value, n);
    return v;
}

}  // namespace

TEST_CASE("one-flag encoding strips the trailing run") {
    const BlockRecord a = encode_word(bits("0101"));
    CHECK(a.flag == 2);
    CHECK(a.code.to_string() == "010");
    CHECK(classify_code(a.code, {4, 2}) == CodeClass::Y);

    const BlockRecord b = encode_word(bits("0000"));
    CHECK(b.flag == 0);
    CHECK(b.code.to_string() == "0");

    const BlockRecord c = encode_word(bits("100010"));
    CHECK(c.flag == 2);
    CHECK(c.code.to_string() == "10001");
    CHECK(classify_code(c.code, {6, 2}) == CodeClass::X);

    CHECK_THROWS_AS(encode_word(bits("1")), ParamError);
}

TEST_CASE("one-flag decoding pads by class") {
    CHECK(decode_word({2, bits("010"), {}}, 4).to_string() == "0101");
    CHECK(decode_word({0, bits("1"), {}}, 5).to_string() == "11111");
    CHECK(decode_word({4, bits("1111"), {}}, 5).to_string() == "11110");

    CHECK_THROWS_AS(decode_word({0, bits("10"), {}}, 4), MalformedRecordError);
    CHECK_THROWS_AS(decode_word({4, bits("11"), {}}, 4), MalformedRecordError);
    CHECK_THROWS_AS(decode_word({2, bits("01"), {}}, 4), MalformedRecordError);
}

TEST_CASE("two-flag encoding stores complements of class Y") {
    const BlockRecord a = encode_word_two_flag(bits("0101"));
    CHECK(a.flag == 2);
    CHECK(a.pflag == true);
    CHECK(a.code.to_string() == "101");

    const BlockRecord b = encode_word_two_flag(bits("1100"));
    CHECK(b.flag == 2);
    CHECK(b.pflag == false);
    CHECK(b.code.to_string() == "11");

    const BlockRecord c = encode_word_two_flag(bits("0000"));
    CHECK(c.flag == 0);
    CHECK(c.pflag == false);
    CHECK(c.code.to_string() == "0");
}

TEST_CASE("two-flag decoding") {
    CHECK(decode_word_two_flag({2, bits("101"), true}, 4).to_string() == "0101");
    CHECK(decode_word_two_flag({1, bits("001"), false}, 4).to_string() == "0010");
    CHECK(decode_word_two_flag({0, bits("1"), false}, 2).to_string() == "11");

    // missing pflag, pflag on a uniform block, class Y stored directly
    CHECK_THROWS_AS(decode_word_two_flag({2, bits("101"), {}}, 4), MalformedRecordError);
    CHECK_THROWS_AS(decode_word_two_flag({0, bits("1"), true}, 4), MalformedRecordError);
    CHECK_THROWS_AS(decode_word_two_flag({2, bits("010"), false}, 4), MalformedRecordError);
}

TEST_CASE("round trip is exact for every word, N = 2..12") {
    for (unsigned n = 2; n <= 12; ++n) {
        for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
            const BitVec word = word_of(w, n);
            CHECK(decode_word(encode_word(word), n) == word);
            CHECK(decode_word_two_flag(encode_word_two_flag(word), n) == word);
        }
    }
}

TEST_CASE("round trip holds on random words for N up to 16") {
    std::mt19937_64 rng(7);
    for (unsigned n = 13; n <= 16; ++n) {
        for (int i = 0; i < 500; ++i) {
            const BitVec word = oracle::random_bits(rng, n);
            CHECK(decode_word(encode_word(word), n) == word);
            CHECK(decode_word_two_flag(encode_word_two_flag(word), n) == word);
        }
    }
}

TEST_CASE("weight fibers partition the words onto their alphabets") {
    for (unsigned n = 2; n <= 10; ++n) {
        std::map<unsigned, std::set<std::string>> fibers;
        std::set<std::string> uniform;
        for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
            const BitVec word = word_of(w, n);
            const BlockRecord rec = encode_word(word);
            if (rec.flag == 0) {
                CHECK(uniform.insert(rec.code.to_string()).second);
            } else {
                CHECK(rec.flag == word.popcount());
                CHECK(fibers[rec.flag].insert(rec.code.to_string()).second);  // injective
            }
        }
        CHECK(uniform == std::set<std::string>{"0", "1"});
        for (unsigned k = 1; k <= n - 1; ++k) {
            CHECK(fibers[k] == oracle::enumerate_codes(n, k));
        }
    }
}

TEST_CASE("total code length over all words matches the closed form") {
    for (unsigned n = 2; n <= 10; ++n) {
        std::uint64_t total = 0;
        for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
            total += encode_word(word_of(w, n)).code.size();
        }
        std::uint64_t expected = 2;
        for (unsigned m = 1; m <= n - 1; ++m) {
            expected += std::uint64_t(m) << m;
        }
        CHECK(total == expected);
    }
}

TEST_CASE("two-flag records always store codes ending in 1") {
    for (unsigned n = 2; n <= 10; ++n) {
        for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
            const BlockRecord rec = encode_word_two_flag(word_of(w, n));
            if (rec.flag != 0) {
                CHECK(rec.code.back() == true);
            }
        }
    }
}
