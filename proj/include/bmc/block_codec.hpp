// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "bmc/binomial.hpp"
#include "bmc/bitvec.hpp"

namespace bmc {

/// What one N-bit block becomes: a flag naming the alphabet used and the
/// stored variable-length code. flag == 0 marks a uniform block (all-zeros
/// or all-ones), stored as its single repeated bit; otherwise flag is the
/// block's weight k and the code belongs to B_{k,N}. `pflag` is present
/// only in the two-flag form and records whether the code was complemented.
struct BlockRecord {
    unsigned flag = 0;
    BitVec code;
    std::optional<bool> pflag;

    bool operator==(const BlockRecord&) const = default;
};

/// One-flag recoding of an N-bit word (N >= 2): uniform words collapse to a
/// single bit with flag 0; any other word drops its maximal trailing run of
/// identical bits and keeps its weight k as the flag. The result is a valid
/// code of B_{k,N} (class X when the word ended in zeros, Y when in ones),
/// and the map is a bijection from all 2^N words onto the union of the
/// B_{k,N} alphabets plus the two uniform codes.
BlockRecord encode_word(const BitVec& word);

/// Exact inverse of encode_word: flag 0 repeats the stored bit N times,
/// class X codes are padded with zeros to length N, class Y codes with
/// ones. Throws MalformedRecordError when the record cannot decode.
BitVec decode_word(const BlockRecord& record, unsigned block_size);

/// Two-flag recoding: like encode_word, but class Y codes are stored as
/// their bitwise complement (an X code of the dual weight N-k) with
/// pflag = 1. Every stored non-uniform code therefore ends in 1. Uniform
/// words keep pflag = 0.
BlockRecord encode_word_two_flag(const BitVec& word);

/// Exact inverse of encode_word_two_flag.
BitVec decode_word_two_flag(const BlockRecord& record, unsigned block_size);

}  // namespace bmc
