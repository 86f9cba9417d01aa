// SPDX-License-Identifier: Apache-2.0

#include "bmc/binomial.hpp"

#include <limits>

#include "bmc/error.hpp"

namespace bmc {

namespace {

void check_params(BinomialParams p) {
    if (p.k < 1 || p.k > p.n) {
        throw ParamError("binomial params require 1 <= k <= n");
    }
}

void check_nondegenerate(BinomialParams p) {
    check_params(p);
    if (p.k == p.n) {
        throw ParamError("degenerate alphabet (k == n) has no positional codes");
    }
}

}  // namespace

std::uint64_t binomial_coefficient(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    unsigned __int128 c = 1;
    for (unsigned i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;  // exact at every step
        if (c > std::numeric_limits<std::uint64_t>::max()) {
            throw RangeError("binomial coefficient exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(c);
}

bool is_valid_code(const BitVec& bits, BinomialParams params) {
    check_params(params);
    const std::size_t r = bits.size();
    if (r == 0) {
        return false;
    }
    if (params.k == params.n) {
        return r == 1;  // B_{n,n} = {0, 1}
    }
    if (r > params.n - 1) {
        return false;
    }
    const std::size_t ones = bits.popcount();
    const std::size_t zeros = r - ones;
    if (bits.back()) {
        return ones == params.k;  // class X; r >= k follows from the count
    }
    return zeros == params.n - params.k && ones <= params.k - 1;  // class Y
}

CodeClass classify_code(const BitVec& bits, BinomialParams params) {
    if (!is_valid_code(bits, params)) {
        throw InvalidCodeError("bit string is not a valid code for (n=" +
                               std::to_string(params.n) + ", k=" + std::to_string(params.k) + ")");
    }
    return bits.back() ? CodeClass::X : CodeClass::Y;
}

BinomialCode make_code(const BitVec& bits, BinomialParams params) {
    return BinomialCode{bits, params, classify_code(bits, params)};
}

std::uint64_t code_value(const BinomialCode& code) {
    check_nondegenerate(code.params);
    if (!is_valid_code(code.bits, code.params)) {
        throw InvalidCodeError("code_value: invalid code");
    }
    const unsigned n = code.params.n;
    const unsigned k = code.params.k;
    std::uint64_t value = 0;
    unsigned ones = 0;
    for (std::size_t j = 1; j <= code.bits.size(); ++j) {
        if (code.bits[j - 1]) {
            value += binomial_coefficient(n - static_cast<unsigned>(j), k - ones);
            ++ones;
        }
    }
    return value;
}

BinomialCode value_to_code(std::uint64_t value, BinomialParams params) {
    check_nondegenerate(params);
    const unsigned n = params.n;
    const unsigned k = params.k;
    if (value >= binomial_coefficient(n, k)) {
        throw RangeError("value outside [0, C(n,k))");
    }

    // Greedy unranking. At position j with q ones emitted, the codes that
    // continue with 0 occupy exactly the next C(n-j, k-q) values, which is
    // also the positional weight a 1 would contribute.
    BitVec bits;
    unsigned ones = 0;
    unsigned zeros = 0;
    for (unsigned j = 1; j <= n - 1; ++j) {
        const std::uint64_t weight = binomial_coefficient(n - j, k - ones);
        if (value < weight) {
            bits.push_back(false);
            ++zeros;
            if (zeros == n - k) {
                return BinomialCode{bits, params, CodeClass::Y};
            }
        } else {
            value -= weight;
            bits.push_back(true);
            ++ones;
            if (ones == k) {
                return BinomialCode{bits, params, CodeClass::X};
            }
        }
    }
    throw Error("value_to_code: unranking failed to terminate");  // unreachable
}

BinomialCode complement(const BinomialCode& code) {
    check_nondegenerate(code.params);
    if (!is_valid_code(code.bits, code.params)) {
        throw InvalidCodeError("complement: invalid code");
    }
    BitVec flipped;
    for (std::size_t i = 0; i < code.bits.size(); ++i) {
        flipped.push_back(!code.bits[i]);
    }
    return make_code(flipped, BinomialParams{code.params.n, code.params.n - code.params.k});
}

AlphabetTable enumerate_alphabet(BinomialParams params) {
    check_nondegenerate(params);
    AlphabetTable table;
    table.params = params;
    const std::uint64_t size = binomial_coefficient(params.n, params.k);
    for (std::uint64_t v = 0; v < size; ++v) {
        BinomialCode code = value_to_code(v, params);
        (code.cls == CodeClass::X ? table.x_class : table.y_class).push_back(std::move(code));
    }
    return table;
}

std::uint64_t alphabet_size(BinomialParams params) {
    check_nondegenerate(params);
    return binomial_coefficient(params.n, params.k);
}

}  // namespace bmc
