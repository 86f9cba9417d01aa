// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bmc {

/// Growable bit sequence, packed MSB-first: bit i lives in byte i/8 at
/// position 7 - i%8. The unused low bits of the last byte are kept zero,
/// so equal sequences compare equal byte-wise and to_bytes() needs no
/// extra masking.
class BitVec {
public:
    BitVec() = default;

    /// Parse a string of '0'/'1' characters. Anything else throws ParamError.
    static BitVec from_string(std::string_view s);

    /// Take the first `bit_count` bits of `bytes` (MSB-first). Throws
    /// ParamError if `bytes` is too short. Padding bits are dropped.
    static BitVec from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);

    /// `count` copies of `bit`.
    static BitVec repeated(bool bit, std::size_t count);

    void push_back(bool bit);
    void append(const BitVec& other);

    /// Append the low `width` bits of `value`, most significant first.
    void push_uint(std::uint64_t value, unsigned width);

    bool operator[](std::size_t i) const {
        return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
    }

    bool back() const { return (*this)[size_ - 1]; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    std::size_t popcount() const;

    /// Copy of bits [begin, begin + count).
    BitVec slice(std::size_t begin, std::size_t count) const;

    /// Drop all bits from index `count` on.
    void truncate(std::size_t count);

    /// Packed bytes, MSB-first, final byte zero-padded.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    std::string to_string() const;

    bool operator==(const BitVec& other) const {
        return size_ == other.size_ && bytes_ == other.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

/// Sequential MSB-first reader over a BitVec. Reading past the end is a
/// logic error; callers check remaining() first.
class BitReader {
public:
    explicit BitReader(const BitVec& bits) : bits_(&bits) {}

    bool read_bit();
    std::uint64_t read_uint(unsigned width);

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return bits_->size() - pos_; }

private:
    const BitVec* bits_;
    std::size_t pos_ = 0;
};

}  // namespace bmc
