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

#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// where the target supports it, an AVX2 version. Both versions must produce
// bit-identical results; tests/test_kernels.cpp checks this on random input.
//
// This header is deliberately free of standard library templates so that the
// AVX2 translation unit (compiled with -mavx2) does not emit inline template
// instantiations that the linker could fold into scalar callers.

#include <cstddef>
#include <cstdint>

namespace paulipart::simd {

/// Column-major (word-major) storage of the symplectic masks of a string set:
/// word w of string i lives at x[w * stride + i] / z[w * stride + i].
struct MaskColumns {
    const std::uint64_t *x;
    const std::uint64_t *z;
    std::size_t n_strings;
    std::size_t stride;
    std::size_t words;
};

/// Inputs of one annealer sweep. The flip delta of variable i is
///   conf_i  = selected - state_i - commuting_i
///   delta_i = (1 - 2 state_i) * (penalty * conf_i - linear_i)
/// and the offset-shifted value delta_i - offset is classified as
///   <= 0                -> certain (always eligible)
///   in (0, cutoff)      -> needs a Metropolis draw
///   >= cutoff           -> never eligible
struct FlipInputs {
    const std::uint8_t *state;
    const std::int32_t *commuting;
    const double *linear;
    std::size_t n;
    std::int32_t selected;
    double penalty;
    double offset;
    double cutoff;
};

struct FlipOutputs {
    std::uint32_t *certain;       // capacity n
    std::uint32_t *maybe;         // capacity n
    double *maybe_delta;          // capacity n, offset-shifted delta
    std::size_t n_certain;
    std::size_t n_maybe;
};

struct KernelTable {
    const char *name;

    /// popcount(a & b) over `words` words.
    std::uint64_t (*and_popcount)(const std::uint64_t *a, const std::uint64_t *b, std::size_t words);

    /// Bit i of `out` (for i < cols.n_strings) is set iff string i commutes
    /// with (ax, az): GC when qwc is false, qubit-wise otherwise. `out` must
    /// hold ceil(n_strings / 64) words; bits past n_strings are cleared.
    void (*commute_row)(const MaskColumns &cols, const std::uint64_t *ax, const std::uint64_t *az, bool qwc,
                        std::uint64_t *out);

    /// Bit k of `out` = bit idx[k] of `bits`, for k < n. Trailing bits of the
    /// last output word are cleared.
    void (*gather_bits)(const std::uint64_t *bits, const std::uint32_t *idx, std::size_t n, std::uint64_t *out);

    /// acc[k] += delta for every k < n whose bit is set in `bits`.
    void (*accumulate_bits)(std::int32_t *acc, const std::uint64_t *bits, std::size_t n, std::int32_t delta);

    /// Classify every single-bit flip of one annealer sweep. Index lists are
    /// written in ascending order.
    void (*classify_flips)(const FlipInputs &in, FlipOutputs &out);
};

const KernelTable &scalar_kernels();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable *avx2_kernels();

/// The table used by the library. Defaults to the widest supported variant;
/// the PAULIPART_KERNELS environment variable (`scalar` or `avx2`) overrides.
const KernelTable &kernels();

/// Force a variant for the rest of the process (tests and benchmarks).
void set_kernels(const KernelTable &table);

}  // namespace paulipart::simd
