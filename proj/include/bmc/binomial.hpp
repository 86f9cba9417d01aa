// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "bmc/bitvec.hpp"

namespace bmc {

/// Radix parameters (n, k) of a binary binomial alphabet B_{k,n}.
/// Valid when 1 <= k <= n. k == n is the degenerate two-element alphabet
/// {0, 1}; most operations here require k < n and leave the degenerate
/// case to the block codec.
struct BinomialParams {
    unsigned n = 0;
    unsigned k = 0;

    bool operator==(const BinomialParams&) const = default;
};

enum class CodeClass : std::uint8_t { X, Y };

/// A binary binomial number: a variable-length bit string b_1..b_r
/// (b_1 leftmost) that satisfies exactly one of the two class rules for
/// its parameters:
///
///   class X: exactly k ones and the last bit is 1   (k <= r <= n-1)
///   class Y: exactly n-k zeros and the last bit is 0, with at most
///            k-1 ones
struct BinomialCode {
    BitVec bits;
    BinomialParams params;
    CodeClass cls = CodeClass::X;

    bool operator==(const BinomialCode&) const = default;
};

/// All C(n, k) codes of one alphabet, split by class. Each list is in
/// ascending code_value order.
struct AlphabetTable {
    BinomialParams params;
    std::vector<BinomialCode> x_class;
    std::vector<BinomialCode> y_class;
};

/// Exact C(n, k). Throws RangeError if the result does not fit in 64 bits;
/// never wraps silently.
std::uint64_t binomial_coefficient(unsigned n, unsigned k);

/// True iff `bits` is a valid code of B_{k,n}. Total in `bits`; throws
/// ParamError only for invalid params. For k == n the only valid codes are
/// the single bits "0" and "1".
bool is_valid_code(const BitVec& bits, BinomialParams params);

/// Class of a valid code: X iff the last bit is 1. Throws InvalidCodeError
/// if `bits` is not valid for `params`.
CodeClass classify_code(const BitVec& bits, BinomialParams params);

/// Validate `bits` against `params` and attach its class.
/// Throws InvalidCodeError on invalid input.
BinomialCode make_code(const BitVec& bits, BinomialParams params);

/// Positional value of a code: sum over set bits of C(n-j, k-q_j), where
/// j is the 1-based bit position and q_j counts the ones before it.
/// Bijective from B_{k,n} onto [0, C(n,k)). Requires k < n.
std::uint64_t code_value(const BinomialCode& code);

/// Inverse of code_value: unrank `value` into the code of B_{k,n} with that
/// value. Throws RangeError for value >= C(n,k) and ParamError for k >= n.
BinomialCode value_to_code(std::uint64_t value, BinomialParams params);

/// Bitwise complement. Maps a code of B_{k,n} to one of B_{n-k,n} with the
/// class flipped; an involution. Requires k < n.
BinomialCode complement(const BinomialCode& code);

/// Enumerate B_{k,n} for 1 <= k <= n-1, partitioned into classes, each list
/// ascending by code_value.
AlphabetTable enumerate_alphabet(BinomialParams params);

/// |B_{k,n}| = C(n, k), exact. Requires 1 <= k <= n-1.
std::uint64_t alphabet_size(BinomialParams params);

}  // namespace bmc
