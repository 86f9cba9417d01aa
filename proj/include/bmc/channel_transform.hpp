// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "bmc/bitvec.hpp"
#include "bmc/ratio.hpp"

namespace bmc {

enum class FlagForm : std::uint8_t { one_flag = 1, two_flag = 2 };

constexpr unsigned kMinBlockSize = 2;
constexpr unsigned kMaxBlockSize = 64;

struct TransformParams {
    unsigned block_size = 8;
    FlagForm form = FlagForm::one_flag;
    unsigned iterations = 1;
    std::uint64_t original_bit_length = 0;  // filled in by encode_stream

    bool operator==(const TransformParams&) const = default;
};

/// Flag channels produced by one round. flag1 packs one fixed-width flag
/// per block (width = ceil(log2 N), MSB first, block order); flag2 holds
/// one pflag bit per block and is empty in the one-flag form.
struct RoundChannels {
    BitVec flag1;
    BitVec flag2;

    bool operator==(const RoundChannels&) const = default;
};

/// Everything the transform emits: per-round flag channels plus the final
/// round's core. Intermediate cores are consumed by the following round and
/// never retained; decoding rebuilds them from the flags alone.
struct ChannelSet {
    TransformParams params;
    BitVec core;
    std::vector<RoundChannels> rounds;

    bool operator==(const ChannelSet&) const = default;
};

struct RoundStats {
    std::uint64_t block_count = 0;
    std::uint64_t flag1_bits = 0;
    std::uint64_t flag2_bits = 0;
};

struct ChannelStats {
    std::uint64_t original_bits = 0;
    std::uint64_t core_bits = 0;
    std::uint64_t flag_bits = 0;  // all rounds
    std::vector<RoundStats> rounds;
    Ratio core_ratio;   // core / original; 0/1 for empty input
    Ratio flag_ratio;   // flags / original
    Ratio total_ratio;  // (core + flags) / original
};

/// Bits per packed flag for a given block size.
unsigned flag_width(unsigned block_size);

/// Apply the blockwise recoding `params.iterations` times. Each round pads
/// its input with zero bits to a whole number of blocks, recodes every
/// block, and hands its core to the next round. Deterministic: identical
/// input and params give identical channels.
ChannelSet encode_stream(const BitVec& input, TransformParams params);

/// Exact inverse of encode_stream. Throws CorruptChannelError when the
/// channels are inconsistent: core exhausted mid-code, flag out of range,
/// nonzero padding, or unconsumed trailing bits.
BitVec decode_stream(const ChannelSet& channels);

/// Bit accounting for a channel set (no decode performed).
ChannelStats channel_stats(const ChannelSet& channels);

}  // namespace bmc
