// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <random>

#include "bmc/error.hpp"
#include "bmc/metrics.hpp"
#include "reference_data.hpp"

using namespace bmc;

TEST_CASE("reference inputs contain every word once in ascending order") {
    CHECK(basic_file(2).to_string() == "00011011");
    CHECK(basic_file(3).size() == 24);
    CHECK(basic_file(12).size() == 12u * 4096u);
    CHECK_THROWS_AS(basic_file(21), ParamError);
}

TEST_CASE("analytic coefficients match the reference table") {
    for (const auto& row : refdata::reference_coefficients()) {
        CHECK(coeff_binomial(row.n) == Ratio(row.bin_num, row.bin_den));
        CHECK(coeff_mv2(row.n) == Ratio(row.mv2_num, row.mv2_den));
        CHECK(coeff_binomial(row.n).to_repeating_decimal() == row.bin_repeating);
        CHECK(coeff_mv2(row.n).to_repeating_decimal() == row.mv2_repeating);
    }
    CHECK(coeff_mv2(7).to_decimal_string(32) == refdata::kMv2N7Decimal32);
    CHECK_THROWS_AS(coeff_binomial(1), ParamError);
    CHECK_THROWS_AS(coeff_mv2(65), ParamError);
}

TEST_CASE("the alternative closed form disagrees with the measured ratio") {
    CHECK(coeff_binomial_alt(2) == Ratio(3, 8));
    for (unsigned n = 2; n <= 8; ++n) {
        CHECK_FALSE(coeff_binomial_alt(n) == coeff_binomial(n));
    }
}

TEST_CASE("binomial coefficient never exceeds the MV2 coefficient, N = 2..8") {
    for (unsigned n = 2; n <= 8; ++n) {
        CHECK(coeff_binomial(n) <= coeff_mv2(n));
    }
}

TEST_CASE("clone coefficient") {
    SUBCASE("identity recoding scores 1") {
        CloneDistribution dist;
        dist.block_size = 6;
        dist.counts.assign(6, 0);
        dist.counts[5] = 64;
        CHECK(coeff_clone(dist) == Ratio(1, 1));
    }
    SUBCASE("the MV2 distribution reproduces the MV2 coefficient") {
        for (unsigned n = 2; n <= 8; ++n) {
            CHECK(coeff_clone(CloneDistribution::mv2(n)) == coeff_mv2(n));
        }
    }
    SUBCASE("direct summation example") {
        CloneDistribution dist;
        dist.block_size = 2;
        dist.counts = {2, 2};
        CHECK(coeff_clone(dist) == Ratio(6, 8));
    }
    SUBCASE("counts must sum to 2^N") {
        CloneDistribution dist;
        dist.block_size = 3;
        dist.counts = {1, 2, 3};
        CHECK_THROWS_AS(coeff_clone(dist), ParamError);
        dist.counts = {1, 2};
        CHECK_THROWS_AS(coeff_clone(dist), ParamError);
    }
}

TEST_CASE("measured coefficients on reference inputs") {
    CHECK(coeff_empirical(5, FlagForm::one_flag) == Ratio(5, 8));
    CHECK(coeff_empirical(7, FlagForm::one_flag) == Ratio(23, 32));
    // complementing preserves code length, so the two-flag core is as long
    CHECK(coeff_empirical(4, FlagForm::two_flag) == Ratio(36, 64));
    CHECK_THROWS_AS(coeff_empirical(4, FlagForm::one_flag, BitVec{}), ParamError);
}

TEST_CASE("measured equals analytic for N = 2..12") {
    for (unsigned n = 2; n <= 12; ++n) {
        CHECK(coeff_empirical(n, FlagForm::one_flag) == coeff_binomial(n));
        CHECK(coeff_empirical(n, FlagForm::two_flag) == coeff_binomial(n));
    }
}

TEST_CASE("the measured ratio is invariant under word order") {
    std::mt19937_64 rng(17);
    for (unsigned n : {3u, 5u, 8u}) {
        std::vector<std::uint64_t> words(std::size_t(1) << n);
        for (std::size_t i = 0; i < words.size(); ++i) {
            words[i] = i;
        }
        std::shuffle(words.begin(), words.end(), rng);
        BitVec shuffled;
        for (std::uint64_t w : words) {
            shuffled.push_uint(w, n);
        }
        CHECK(coeff_empirical(n, FlagForm::one_flag, shuffled) == coeff_binomial(n));
    }
}
