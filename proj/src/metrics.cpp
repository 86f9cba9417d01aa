// SPDX-License-Identifier: Apache-2.0

#include "bmc/metrics.hpp"

#include "bmc/binomial.hpp"
#include "bmc/error.hpp"

namespace bmc {

namespace {

constexpr unsigned kMaxBasicFileBlockSize = 20;  // N * 2^N bits gets large fast

void check_coeff_block_size(unsigned n) {
    if (n < kMinBlockSize || n > kMaxBlockSize) {
        throw ParamError("block size must be in [2, 64]");
    }
}

uint128 pow2(unsigned e) {
    return uint128(1) << e;
}

}  // namespace

CloneDistribution CloneDistribution::mv2(unsigned block_size) {
    check_coeff_block_size(block_size);
    CloneDistribution dist;
    dist.block_size = block_size;
    dist.counts.assign(block_size, 0);
    for (unsigned k = 1; k < block_size; ++k) {
        dist.counts[k - 1] = std::uint64_t(1) << k;
    }
    dist.counts[block_size - 1] = 2;
    return dist;
}

BitVec basic_file(unsigned block_size) {
    check_coeff_block_size(block_size);
    if (block_size > kMaxBasicFileBlockSize) {
        throw ParamError("basic file is only materialized for block sizes up to 20");
    }
    BitVec bits;
    for (std::uint64_t word = 0; word < (std::uint64_t(1) << block_size); ++word) {
        bits.push_uint(word, block_size);
    }
    return bits;
}

Ratio coeff_binomial(unsigned block_size) {
    check_coeff_block_size(block_size);
    uint128 num = 2;
    for (unsigned m = 1; m <= block_size - 1; ++m) {
        num += uint128(m) * pow2(m);
    }
    return Ratio(num, uint128(block_size) * pow2(block_size));
}

Ratio coeff_binomial_alt(unsigned block_size) {
    check_coeff_block_size(block_size);
    uint128 num = 2;
    for (unsigned l = 0; l + 2 <= block_size; ++l) {
        num += uint128(l + 1) * binomial_coefficient(block_size, l + 2);
    }
    return Ratio(num, uint128(block_size) * pow2(block_size));
}

Ratio coeff_mv2(unsigned block_size) {
    check_coeff_block_size(block_size);
    uint128 num = 2 * uint128(block_size);
    for (unsigned l = 0; l + 2 <= block_size; ++l) {
        num += 2 * uint128(l + 1) * pow2(l);
    }
    return Ratio(num, uint128(block_size) * pow2(block_size));
}

Ratio coeff_clone(const CloneDistribution& dist) {
    check_coeff_block_size(dist.block_size);
    if (dist.counts.size() != dist.block_size) {
        throw ParamError("clone distribution must have one count per length 1..N");
    }
    uint128 total = 0;
    uint128 weighted = 0;
    for (unsigned k = 1; k <= dist.block_size; ++k) {
        total += dist.counts[k - 1];
        weighted += uint128(k) * dist.counts[k - 1];
    }
    if (total != pow2(dist.block_size)) {
        throw ParamError("clone distribution counts must sum to 2^N");
    }
    return Ratio(weighted, uint128(dist.block_size) * pow2(dist.block_size));
}

Ratio coeff_empirical(unsigned block_size, FlagForm form) {
    return coeff_empirical(block_size, form, basic_file(block_size));
}

Ratio coeff_empirical(unsigned block_size, FlagForm form, const BitVec& input) {
    check_coeff_block_size(block_size);
    if (input.empty()) {
        throw ParamError("empirical coefficient needs a nonempty input");
    }
    TransformParams params;
    params.block_size = block_size;
    params.form = form;
    params.iterations = 1;
    const ChannelSet channels = encode_stream(input, params);
    return Ratio(channels.core.size(), input.size());
}

}  // namespace bmc
