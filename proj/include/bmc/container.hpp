// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "bmc/channel_transform.hpp"

namespace bmc {

// Container layout, all integers big-endian:
//
//   header (17 bytes):
//     magic "BMC1" | version u8 = 1 | block size u8 | form u8 (1|2) |
//     iterations u8 | original bit length u64 | channel count u8
//   then `channel count` records, each:
//     bit length u64 | ceil(bit_length/8) payload bytes, bits packed
//     MSB-first, final byte zero-padded
//
// Record order: final core, then round-1 flag1 [, flag2], round-2 flags, ...
// A combined container has channel count 1 + iterations * form; split files
// are the same format with channel count 1.

inline constexpr char kContainerMagic[4] = {'B', 'M', 'C', '1'};
inline constexpr std::uint8_t kContainerVersion = 1;
inline constexpr std::size_t kContainerHeaderSize = 17;

/// Serialize a channel set. Returns the bytes written. Byte-identical
/// output for identical input.
std::uint64_t write_container(const ChannelSet& channels, std::ostream& out);
std::uint64_t write_container(const ChannelSet& channels, const std::filesystem::path& path);

/// Exact inverse of write_container. Throws BadMagicError, BadVersionError,
/// TruncatedError or PaddingError for the corresponding defect, and
/// ContainerError for any other structural problem (including trailing
/// bytes and a channel count that does not match iterations and form).
ChannelSet read_container(std::istream& in);
ChannelSet read_container(const std::filesystem::path& path);

/// Write each channel as a standalone single-channel container:
/// `<basename>.core`, `<basename>.flag1[.roundR]`, `<basename>.flag2[.roundR]`
/// (the round suffix appears only when iterations > 1). Returns the paths
/// in that order.
std::vector<std::filesystem::path> split_channels(const ChannelSet& channels,
                                                  const std::filesystem::path& basename);

/// Rebuild a channel set from files produced by split_channels. A missing
/// file throws IoError; mismatched headers across the files throw
/// ContainerError.
ChannelSet merge_channels(const std::filesystem::path& basename);

/// The file names split_channels would produce for these params.
std::vector<std::filesystem::path> split_file_names(const TransformParams& params,
                                                    const std::filesystem::path& basename);

}  // namespace bmc
