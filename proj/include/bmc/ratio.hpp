// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

namespace bmc {

using uint128 = unsigned __int128;

/// Exact nonnegative rational. Stored as given (not auto-reduced); equality
/// and ordering compare values, not representations. 128-bit fields cover
/// every bit-count ratio this library produces (numerators up to N * 2^N
/// for N <= 64) without floating point.
class Ratio {
public:
    Ratio() = default;
    Ratio(uint128 numerator, uint128 denominator);

    uint128 numerator() const { return num_; }
    uint128 denominator() const { return den_; }

    Ratio reduced() const;

    bool operator==(const Ratio& other) const;
    bool operator<(const Ratio& other) const;
    bool operator<=(const Ratio& other) const { return *this == other || *this < other; }

    double to_double() const;

    /// "a/b" using the stored (unreduced) terms.
    std::string to_fraction_string() const;

    /// Exact decimal expansion with a parenthesized repetend when the
    /// expansion does not terminate, e.g. 65/96 -> "0.677083(3)".
    std::string to_repeating_decimal() const;

    /// Decimal expansion cut to at most `frac_digits` fractional digits,
    /// rounded half-up on the last digit. Trailing zeros are trimmed.
    std::string to_decimal_string(std::size_t frac_digits) const;

private:
    uint128 num_ = 0;
    uint128 den_ = 1;
};

std::string uint128_to_string(uint128 value);

}  // namespace bmc
