// SPDX-License-Identifier: Apache-2.0

#include "bmc/channel_transform.hpp"

#include <bit>

#include "bmc/block_codec.hpp"
#include "bmc/error.hpp"

namespace bmc {

namespace {

void check_params(const TransformParams& params) {
    if (params.block_size < kMinBlockSize || params.block_size > kMaxBlockSize) {
        throw ParamError("block size must be in [2, 64]");
    }
    if (params.form != FlagForm::one_flag && params.form != FlagForm::two_flag) {
        throw ParamError("unknown flag form");
    }
    if (params.iterations < 1) {
        throw ParamError("iterations must be at least 1");
    }
}

// Read one block's code from the core and rebuild the word. The prefix rule
// makes codes self-delimiting: given the flag k, an X code ends at its k-th
// one and a Y code at its (N-k)-th zero, always within N-1 bits.
BitVec decode_block(BitReader& core, unsigned flag, bool pflag_present, bool pflag,
                    unsigned block_size) {
    const unsigned n = block_size;
    if (flag >= n) {
        throw CorruptChannelError("flag value out of range");
    }
    BlockRecord rec;
    rec.flag = flag;
    if (pflag_present) {
        rec.pflag = pflag;
    }
    if (flag == 0) {
        if (core.remaining() < 1) {
            throw CorruptChannelError("core exhausted reading uniform block");
        }
        rec.code.push_back(core.read_bit());
    } else {
        unsigned ones = 0;
        unsigned zeros = 0;
        bool done = false;
        for (unsigned r = 1; r <= n - 1 && !done; ++r) {
            if (core.remaining() == 0) {
                throw CorruptChannelError("core exhausted mid-code");
            }
            const bool bit = core.read_bit();
            rec.code.push_back(bit);
            bit ? ++ones : ++zeros;
            if (bit && ones == flag) {
                done = true;  // class X terminator
            } else if (!bit && !pflag_present && zeros == n - flag) {
                done = true;  // class Y terminator (one-flag form only)
            }
        }
        if (!done) {
            throw CorruptChannelError("code did not terminate within block size");
        }
    }
    try {
        return pflag_present ? decode_word_two_flag(rec, n) : decode_word(rec, n);
    } catch (const MalformedRecordError& e) {
        throw CorruptChannelError(e.what());
    }
}

}  // namespace

unsigned flag_width(unsigned block_size) {
    return static_cast<unsigned>(std::bit_width(block_size - 1u));
}

ChannelSet encode_stream(const BitVec& input, TransformParams params) {
    check_params(params);
    params.original_bit_length = input.size();

    ChannelSet cs;
    cs.params = params;

    const unsigned n = params.block_size;
    const unsigned width = flag_width(n);
    const bool two = params.form == FlagForm::two_flag;

    BitVec current = input;
    for (unsigned round = 0; round < params.iterations; ++round) {
        if (current.size() % n != 0) {
            current.append(BitVec::repeated(false, n - current.size() % n));
        }
        const std::size_t blocks = current.size() / n;

        BitVec core;
        RoundChannels rc;
        for (std::size_t b = 0; b < blocks; ++b) {
            const BitVec word = current.slice(b * n, n);
            const BlockRecord rec = two ? encode_word_two_flag(word) : encode_word(word);
            core.append(rec.code);
            rc.flag1.push_uint(rec.flag, width);
            if (two) {
                rc.flag2.push_back(*rec.pflag);
            }
        }
        cs.rounds.push_back(std::move(rc));
        current = std::move(core);
    }
    cs.core = std::move(current);
    return cs;
}

BitVec decode_stream(const ChannelSet& channels) {
    check_params(channels.params);
    const unsigned n = channels.params.block_size;
    const unsigned width = flag_width(n);
    const bool two = channels.params.form == FlagForm::two_flag;

    if (channels.rounds.size() != channels.params.iterations) {
        throw CorruptChannelError("round count does not match params");
    }

    // Rounds unwind back to front. The stored core is exact; each earlier
    // round's core is the decoded output of the round after it, minus the
    // zero padding that round added.
    BitVec stream = channels.core;
    for (std::size_t round = channels.rounds.size(); round-- > 0;) {
        const RoundChannels& rc = channels.rounds[round];
        if (rc.flag1.size() % width != 0) {
            throw CorruptChannelError("flag1 length not a multiple of the flag width");
        }
        const std::size_t blocks = rc.flag1.size() / width;
        if (two ? rc.flag2.size() != blocks : !rc.flag2.empty()) {
            throw CorruptChannelError("flag2 length does not match block count");
        }

        BitReader core(stream);
        BitReader flags(rc.flag1);
        BitReader pflags(rc.flag2);
        BitVec output;
        for (std::size_t b = 0; b < blocks; ++b) {
            const unsigned flag = static_cast<unsigned>(flags.read_uint(width));
            const bool pflag = two && pflags.read_bit();
            output.append(decode_block(core, flag, two, pflag, n));
        }

        const bool last_round = round + 1 == channels.rounds.size();
        const std::size_t leftover = core.remaining();
        if (last_round) {
            if (leftover != 0) {
                throw CorruptChannelError("trailing unconsumed core bits");
            }
        } else {
            // leftover must be exactly the zero padding the next round added
            if (leftover >= n) {
                throw CorruptChannelError("padding longer than one block");
            }
            while (core.remaining() > 0) {
                if (core.read_bit()) {
                    throw CorruptChannelError("nonzero padding bits");
                }
            }
        }
        stream = std::move(output);
    }

    const std::uint64_t original = channels.params.original_bit_length;
    const std::size_t padded = stream.size();
    if (original > padded || (padded != 0 && padded - original >= n)) {
        throw CorruptChannelError("original length inconsistent with channels");
    }
    for (std::size_t i = original; i < stream.size(); ++i) {
        if (stream[i]) {
            throw CorruptChannelError("nonzero padding bits");
        }
    }
    stream.truncate(original);
    return stream;
}

ChannelStats channel_stats(const ChannelSet& channels) {
    check_params(channels.params);
    const unsigned width = flag_width(channels.params.block_size);

    ChannelStats stats;
    stats.original_bits = channels.params.original_bit_length;
    stats.core_bits = channels.core.size();
    for (const RoundChannels& rc : channels.rounds) {
        RoundStats rs;
        rs.block_count = rc.flag1.size() / width;
        rs.flag1_bits = rc.flag1.size();
        rs.flag2_bits = rc.flag2.size();
        stats.flag_bits += rs.flag1_bits + rs.flag2_bits;
        stats.rounds.push_back(rs);
    }
    if (stats.original_bits == 0) {
        stats.core_ratio = Ratio(0, 1);
        stats.flag_ratio = Ratio(0, 1);
        stats.total_ratio = Ratio(0, 1);
    } else {
        stats.core_ratio = Ratio(stats.core_bits, stats.original_bits);
        stats.flag_ratio = Ratio(stats.flag_bits, stats.original_bits);
        stats.total_ratio = Ratio(stats.core_bits + stats.flag_bits, stats.original_bits);
    }
    return stats;
}

}  // namespace bmc
