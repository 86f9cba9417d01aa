// SPDX-License-Identifier: Apache-2.0

#include "bmc/container.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "bmc/error.hpp"

namespace bmc {

namespace {

unsigned channels_per_set(const TransformParams& params) {
    return 1 + params.iterations * static_cast<unsigned>(params.form);
}

void put_u64_be(std::ostream& out, std::uint64_t value) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.put(static_cast<char>((value >> shift) & 0xFF));
    }
}

std::uint64_t get_u64_be(std::istream& in) {
    std::uint64_t value = 0;
    for (int i = 0; i < 8; ++i) {
        const int c = in.get();
        if (c == std::istream::traits_type::eof()) {
            throw TruncatedError("container ends inside a length field");
        }
        value = (value << 8) | static_cast<std::uint64_t>(c & 0xFF);
    }
    return value;
}

void write_header(std::ostream& out, const TransformParams& params, unsigned channel_count) {
    if (params.iterations > 255 || channel_count > 255) {
        throw ContainerError("iteration count does not fit the container header");
    }
    out.write(kContainerMagic, 4);
    out.put(static_cast<char>(kContainerVersion));
    out.put(static_cast<char>(params.block_size));
    out.put(static_cast<char>(params.form));
    out.put(static_cast<char>(params.iterations));
    put_u64_be(out, params.original_bit_length);
    out.put(static_cast<char>(channel_count));
}

std::uint64_t write_record(std::ostream& out, const BitVec& bits) {
    put_u64_be(out, bits.size());
    const auto& bytes = bits.bytes();
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    return 8 + bytes.size();
}

struct Header {
    TransformParams params;
    unsigned channel_count = 0;
};

Header read_header(std::istream& in) {
    char buf[kContainerHeaderSize];
    in.read(buf, kContainerHeaderSize);
    if (in.gcount() != static_cast<std::streamsize>(kContainerHeaderSize)) {
        throw TruncatedError("container shorter than its header");
    }
    if (std::memcmp(buf, kContainerMagic, 4) != 0) {
        throw BadMagicError("not a BMC1 container");
    }
    if (static_cast<std::uint8_t>(buf[4]) != kContainerVersion) {
        throw BadVersionError("unsupported container version");
    }
    Header h;
    h.params.block_size = static_cast<std::uint8_t>(buf[5]);
    const auto form = static_cast<std::uint8_t>(buf[6]);
    if (form != 1 && form != 2) {
        throw ContainerError("unknown flag form byte");
    }
    h.params.form = static_cast<FlagForm>(form);
    h.params.iterations = static_cast<std::uint8_t>(buf[7]);
    if (h.params.block_size < kMinBlockSize || h.params.block_size > kMaxBlockSize) {
        throw ContainerError("block size out of range");
    }
    if (h.params.iterations < 1) {
        throw ContainerError("iteration count must be at least 1");
    }
    std::uint64_t original = 0;
    for (int i = 0; i < 8; ++i) {
        original = (original << 8) | static_cast<std::uint64_t>(static_cast<std::uint8_t>(buf[8 + i]));
    }
    h.params.original_bit_length = original;
    h.channel_count = static_cast<std::uint8_t>(buf[16]);
    return h;
}

BitVec read_record(std::istream& in) {
    const std::uint64_t bit_length = get_u64_be(in);
    if (bit_length > std::numeric_limits<std::uint64_t>::max() - 7) {
        throw ContainerError("channel bit length out of range");
    }
    const std::uint64_t byte_length = (bit_length + 7) / 8;

    // Read in bounded chunks so a lying length field on a short stream
    // fails as truncation instead of a huge allocation.
    constexpr std::uint64_t kChunk = 1u << 20;
    std::vector<std::uint8_t> payload;
    for (std::uint64_t remaining = byte_length; remaining > 0;) {
        const std::uint64_t step = std::min(remaining, kChunk);
        const std::size_t old_size = payload.size();
        payload.resize(old_size + step);
        in.read(reinterpret_cast<char*>(payload.data() + old_size),
                static_cast<std::streamsize>(step));
        if (in.gcount() != static_cast<std::streamsize>(step)) {
            throw TruncatedError("container ends inside a channel payload");
        }
        remaining -= step;
    }
    if (bit_length % 8 != 0) {
        const std::uint8_t pad_mask = static_cast<std::uint8_t>(0xFFu >> (bit_length % 8));
        if ((payload.back() & pad_mask) != 0) {
            throw PaddingError("nonzero padding bits in channel payload");
        }
    }
    return BitVec::from_bytes(payload, bit_length);
}

void expect_eof(std::istream& in) {
    if (in.peek() != std::istream::traits_type::eof()) {
        throw ContainerError("trailing bytes after the last channel record");
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path.string());
    }
    return in;
}

ChannelSet read_single_channel(const std::filesystem::path& path, BitVec& out_bits) {
    std::ifstream in = open_input(path);
    const Header h = read_header(in);
    if (h.channel_count != 1) {
        throw ContainerError("expected a single-channel container: " + path.string());
    }
    out_bits = read_record(in);
    expect_eof(in);
    ChannelSet cs;
    cs.params = h.params;
    return cs;
}

}  // namespace

std::uint64_t write_container(const ChannelSet& channels, std::ostream& out) {
    const unsigned count = channels_per_set(channels.params);
    if (channels.rounds.size() != channels.params.iterations) {
        throw ContainerError("round count does not match params");
    }
    write_header(out, channels.params, count);
    std::uint64_t bytes = kContainerHeaderSize;
    bytes += write_record(out, channels.core);
    for (const RoundChannels& rc : channels.rounds) {
        bytes += write_record(out, rc.flag1);
        if (channels.params.form == FlagForm::two_flag) {
            bytes += write_record(out, rc.flag2);
        }
    }
    if (!out) {
        throw IoError("container write failed");
    }
    return bytes;
}

std::uint64_t write_container(const ChannelSet& channels, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    return write_container(channels, out);
}

ChannelSet read_container(std::istream& in) {
    const Header h = read_header(in);
    if (h.channel_count != channels_per_set(h.params)) {
        throw ContainerError("channel count does not match iterations and form");
    }
    ChannelSet cs;
    cs.params = h.params;
    cs.core = read_record(in);
    for (unsigned round = 0; round < h.params.iterations; ++round) {
        RoundChannels rc;
        rc.flag1 = read_record(in);
        if (h.params.form == FlagForm::two_flag) {
            rc.flag2 = read_record(in);
        }
        cs.rounds.push_back(std::move(rc));
    }
    expect_eof(in);
    return cs;
}

ChannelSet read_container(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    return read_container(in);
}

std::vector<std::filesystem::path> split_file_names(const TransformParams& params,
                                                    const std::filesystem::path& basename) {
    std::vector<std::filesystem::path> paths;
    const std::string base = basename.string();
    paths.emplace_back(base + ".core");
    for (unsigned round = 1; round <= params.iterations; ++round) {
        const std::string suffix = params.iterations > 1 ? ".round" + std::to_string(round) : "";
        paths.emplace_back(base + ".flag1" + suffix);
        if (params.form == FlagForm::two_flag) {
            paths.emplace_back(base + ".flag2" + suffix);
        }
    }
    return paths;
}

std::vector<std::filesystem::path> split_channels(const ChannelSet& channels,
                                                  const std::filesystem::path& basename) {
    if (channels.rounds.size() != channels.params.iterations) {
        throw ContainerError("round count does not match params");
    }
    const auto paths = split_file_names(channels.params, basename);

    auto write_one = [&](const std::filesystem::path& path, const BitVec& bits) {
        std::ofstream out = open_output(path);
        write_header(out, channels.params, 1);
        write_record(out, bits);
        if (!out) {
            throw IoError("container write failed: " + path.string());
        }
    };

    std::size_t index = 0;
    write_one(paths[index++], channels.core);
    for (const RoundChannels& rc : channels.rounds) {
        write_one(paths[index++], rc.flag1);
        if (channels.params.form == FlagForm::two_flag) {
            write_one(paths[index++], rc.flag2);
        }
    }
    return paths;
}

ChannelSet merge_channels(const std::filesystem::path& basename) {
    const std::filesystem::path core_path = basename.string() + ".core";
    BitVec core;
    ChannelSet cs = read_single_channel(core_path, core);
    cs.core = std::move(core);

    const auto paths = split_file_names(cs.params, basename);
    for (std::size_t i = 1; i < paths.size(); ++i) {
        BitVec bits;
        const ChannelSet piece = read_single_channel(paths[i], bits);
        if (piece.params != cs.params) {
            throw ContainerError("split files carry inconsistent headers: " + paths[i].string());
        }
        const std::size_t round = (i - 1) / static_cast<unsigned>(cs.params.form);
        if (cs.rounds.size() <= round) {
            cs.rounds.emplace_back();
        }
        if ((i - 1) % static_cast<unsigned>(cs.params.form) == 0) {
            cs.rounds[round].flag1 = std::move(bits);
        } else {
            cs.rounds[round].flag2 = std::move(bits);
        }
    }
    return cs;
}

}  // namespace bmc
