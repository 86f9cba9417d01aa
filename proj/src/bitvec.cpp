// SPDX-License-Identifier: Apache-2.0

#include "bmc/bitvec.hpp"

#include <bit>
#include <stdexcept>

#include "bmc/error.hpp"

namespace bmc {

BitVec BitVec::from_string(std::string_view s) {
    BitVec v;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw ParamError("bit string may contain only '0' and '1'");
        }
        v.push_back(c == '1');
    }
    return v;
}

BitVec BitVec::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
    if (bytes.size() * 8 < bit_count) {
        throw ParamError("byte buffer shorter than requested bit count");
    }
    BitVec v;
    v.bytes_.assign(bytes.begin(), bytes.begin() + (bit_count + 7) / 8);
    v.size_ = bit_count;
    if (bit_count % 8 != 0) {
        v.bytes_.back() &= std::uint8_t(0xFFu << (8 - bit_count % 8));
    }
    return v;
}

BitVec BitVec::repeated(bool bit, std::size_t count) {
    BitVec v;
    for (std::size_t i = 0; i < count; ++i) {
        v.push_back(bit);
    }
    return v;
}

void BitVec::push_back(bool bit) {
    if (size_ % 8 == 0) {
        bytes_.push_back(0);
    }
    if (bit) {
        bytes_[size_ / 8] |= std::uint8_t(0x80u >> (size_ % 8));
    }
    ++size_;
}

void BitVec::append(const BitVec& other) {
    if (size_ % 8 == 0) {
        // Byte-aligned fast path: splice whole bytes.
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        size_ += other.size_;
        return;
    }
    for (std::size_t i = 0; i < other.size_; ++i) {
        push_back(other[i]);
    }
}

void BitVec::push_uint(std::uint64_t value, unsigned width) {
    if (width > 64) {
        throw ParamError("push_uint width exceeds 64");
    }
    for (unsigned i = width; i-- > 0;) {
        push_back((value >> i) & 1u);
    }
}

std::size_t BitVec::popcount() const {
    std::size_t count = 0;
    for (std::uint8_t b : bytes_) {
        count += static_cast<std::size_t>(std::popcount(b));
    }
    return count;  // padding bits are zero by invariant
}

BitVec BitVec::slice(std::size_t begin, std::size_t count) const {
    if (begin + count > size_) {
        throw ParamError("slice out of range");
    }
    BitVec v;
    for (std::size_t i = 0; i < count; ++i) {
        v.push_back((*this)[begin + i]);
    }
    return v;
}

void BitVec::truncate(std::size_t count) {
    if (count > size_) {
        throw ParamError("truncate beyond size");
    }
    size_ = count;
    bytes_.resize((count + 7) / 8);
    if (count % 8 != 0) {
        bytes_.back() &= std::uint8_t(0xFFu << (8 - count % 8));
    }
}

std::string BitVec::to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) {
        s.push_back((*this)[i] ? '1' : '0');
    }
    return s;
}

bool BitReader::read_bit() {
    if (pos_ >= bits_->size()) {
        throw std::out_of_range("BitReader: read past end");
    }
    return (*bits_)[pos_++];
}

std::uint64_t BitReader::read_uint(unsigned width) {
    std::uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i) {
        value = (value << 1) | std::uint64_t(read_bit());
    }
    return value;
}

}  // namespace bmc
