// SPDX-License-Identifier: Apache-2.0

#include "bmc/ratio.hpp"

#include <algorithm>
#include <map>

#include "bmc/error.hpp"

namespace bmc {

namespace {

uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint128 checked_mul(uint128 a, uint128 b) {
    uint128 result;
    if (__builtin_mul_overflow(a, b, &result)) {
        throw RangeError("ratio comparison overflows 128 bits");
    }
    return result;
}

}  // namespace

Ratio::Ratio(uint128 numerator, uint128 denominator) : num_(numerator), den_(denominator) {
    if (denominator == 0) {
        throw ParamError("ratio denominator must be positive");
    }
}

Ratio Ratio::reduced() const {
    if (num_ == 0) {
        return Ratio(0, 1);
    }
    const uint128 g = gcd128(num_, den_);
    return Ratio(num_ / g, den_ / g);
}

bool Ratio::operator==(const Ratio& other) const {
    const Ratio a = reduced();
    const Ratio b = other.reduced();
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool Ratio::operator<(const Ratio& other) const {
    const Ratio a = reduced();
    const Ratio b = other.reduced();
    return checked_mul(a.num_, b.den_) < checked_mul(b.num_, a.den_);
}

double Ratio::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Ratio::to_fraction_string() const {
    return uint128_to_string(num_) + "/" + uint128_to_string(den_);
}

std::string Ratio::to_repeating_decimal() const {
    const Ratio r = reduced();
    std::string out = uint128_to_string(r.num_ / r.den_);
    uint128 rem = r.num_ % r.den_;
    if (rem == 0) {
        return out;
    }
    out += '.';

    // Long division, tracking each remainder's digit index. When a
    // remainder repeats, one full cycle has been emitted; print it all and
    // parenthesize the repetend, e.g. 65/96 -> "0.677083(3)".
    std::string digits;
    std::map<uint128, std::size_t> seen;
    while (rem != 0) {
        auto [it, inserted] = seen.emplace(rem, digits.size());
        if (!inserted) {
            out += digits;
            out += '(';
            out += digits.substr(it->second);
            out += ')';
            return out;
        }
        rem *= 10;
        digits += static_cast<char>('0' + static_cast<unsigned>(rem / r.den_));
        rem %= r.den_;
    }
    return out + digits;
}

std::string Ratio::to_decimal_string(std::size_t frac_digits) const {
    const Ratio r = reduced();
    std::string integral = uint128_to_string(r.num_ / r.den_);
    uint128 rem = r.num_ % r.den_;
    if (rem == 0) {
        return integral;
    }

    std::string digits;
    for (std::size_t i = 0; i < frac_digits && rem != 0; ++i) {
        rem *= 10;
        digits += static_cast<char>('0' + static_cast<unsigned>(rem / r.den_));
        rem %= r.den_;
    }
    if (rem != 0) {
        // Round half-up on the digit after the cut, with carry.
        rem *= 10;
        if (rem / r.den_ >= 5) {
            std::size_t i = digits.size();
            while (i > 0 && digits[i - 1] == '9') {
                digits[--i] = '0';
            }
            if (i == 0) {
                integral = uint128_to_string(r.num_ / r.den_ + 1);
            } else {
                ++digits[i - 1];
            }
        }
    }
    while (!digits.empty() && digits.back() == '0') {
        digits.pop_back();
    }
    return digits.empty() ? integral : integral + "." + digits;
}

std::string uint128_to_string(uint128 value) {
    if (value == 0) {
        return "0";
    }
    std::string s;
    while (value != 0) {
        s += static_cast<char>('0' + static_cast<unsigned>(value % 10));
        value /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace bmc
