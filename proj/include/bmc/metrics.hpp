// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "bmc/bitvec.hpp"
#include "bmc/channel_transform.hpp"
#include "bmc/ratio.hpp"

namespace bmc {

/// Element counts of a constant-total recoding: counts[K-1] words of each
/// output length K in 1..N, with the counts summing to 2^N.
struct CloneDistribution {
    unsigned block_size = 0;
    std::vector<std::uint64_t> counts;

    /// The distribution the MV2 coefficient formula describes:
    /// M_K = 2^K for K < N and M_N = 2.
    static CloneDistribution mv2(unsigned block_size);
};

/// Every N-bit word exactly once, in ascending binary order: the reference
/// input for the coefficient table. N * 2^N bits, so N is capped at 20.
BitVec basic_file(unsigned block_size);

/// Compression coefficient of the binomial recoding on the basic file:
/// (2 + sum_{m=1}^{N-1} m * 2^m) / (N * 2^N), exact. This closed form
/// equals the measured core/original ratio bit for bit; see
/// coeff_binomial_alt for the diagnostic variant.
Ratio coeff_binomial(unsigned block_size);

/// Variant closed form with binomial-coefficient weights,
/// (2 + sum_{l=0}^{N-2} (l+1) * C(N, l+2)) / (N * 2^N). It disagrees with
/// the measured ratio for every N (e.g. 3/8 instead of 1/2 at N = 2) and is
/// exposed only for side-by-side diagnostics (`table --alt`).
Ratio coeff_binomial_alt(unsigned block_size);

/// MV2 coefficient: (2N + 2 * sum_{l=0}^{N-2} (l+1) * 2^l) / (N * 2^N).
Ratio coeff_mv2(unsigned block_size);

/// Clone coefficient sum_K K * M_K / (N * 2^N). Throws ParamError when the
/// counts do not sum to 2^N.
Ratio coeff_clone(const CloneDistribution& dist);

/// Measured core/original ratio of one transform round on the basic file.
Ratio coeff_empirical(unsigned block_size, FlagForm form);

/// Measured core/original ratio of one transform round on `input`.
Ratio coeff_empirical(unsigned block_size, FlagForm form, const BitVec& input);

}  // namespace bmc
