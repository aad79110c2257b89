// Copyright 2026 The paulipart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <bit>

#include "paulipart/simd/kernels.hpp"

namespace paulipart::simd {
namespace {

std::uint64_t and_popcount_scalar(const std::uint64_t *a, const std::uint64_t *b, std::size_t words) {
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < words; ++w) {
        total += static_cast<std::uint64_t>(std::popcount(a[w] & b[w]));
    }
    return total;
}

void commute_row_scalar(const MaskColumns &cols, const std::uint64_t *ax, const std::uint64_t *az, bool qwc,
                        std::uint64_t *out) {
    const std::size_t out_words = (cols.n_strings + 63) / 64;
    for (std::size_t w = 0; w < out_words; ++w) {
        out[w] = 0;
    }
    for (std::size_t i = 0; i < cols.n_strings; ++i) {
        std::uint64_t anti = 0;
        std::uint64_t parity = 0;
        for (std::size_t w = 0; w < cols.words; ++w) {
            std::uint64_t t = (ax[w] & cols.z[w * cols.stride + i]) ^ (az[w] & cols.x[w * cols.stride + i]);
            anti |= t;
            parity ^= t;
        }
        bool commutes = qwc ? anti == 0 : (std::popcount(parity) & 1) == 0;
        if (commutes) {
            out[i >> 6] |= std::uint64_t{1} << (i & 63);
        }
    }
}

void gather_bits_scalar(const std::uint64_t *bits, const std::uint32_t *idx, std::size_t n, std::uint64_t *out) {
    const std::size_t out_words = (n + 63) / 64;
    for (std::size_t w = 0; w < out_words; ++w) {
        out[w] = 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::uint32_t j = idx[k];
        std::uint64_t bit = (bits[j >> 6] >> (j & 63)) & 1;
        out[k >> 6] |= bit << (k & 63);
    }
}

void accumulate_bits_scalar(std::int32_t *acc, const std::uint64_t *bits, std::size_t n, std::int32_t delta) {
    for (std::size_t k = 0; k < n; ++k) {
        if ((bits[k >> 6] >> (k & 63)) & 1) {
            acc[k] += delta;
        }
    }
}

void classify_flips_scalar(const FlipInputs &in, FlipOutputs &out) {
    std::size_t nc = 0;
    std::size_t nm = 0;
    for (std::size_t i = 0; i < in.n; ++i) {
        double conf = static_cast<double>(in.selected - static_cast<std::int32_t>(in.state[i]) - in.commuting[i]);
        double sign = in.state[i] ? -1.0 : 1.0;
        double delta = sign * (in.penalty * conf - in.linear[i]);
        double shifted = delta - in.offset;
        if (shifted <= 0.0) {
            out.certain[nc++] = static_cast<std::uint32_t>(i);
        } else if (shifted < in.cutoff) {
            out.maybe[nm] = static_cast<std::uint32_t>(i);
            out.maybe_delta[nm] = shifted;
            ++nm;
        }
    }
    out.n_certain = nc;
    out.n_maybe = nm;
}

const KernelTable kScalar{
    "scalar",
    and_popcount_scalar,
    commute_row_scalar,
    gather_bits_scalar,
    accumulate_bits_scalar,
    classify_flips_scalar,
};

}  // namespace

const KernelTable &scalar_kernels() {
    return kScalar;
}

}  // namespace paulipart::simd
