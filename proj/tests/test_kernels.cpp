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

#include "paulipart/simd/kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace paulipart::simd;

namespace {

const KernelTable *avx2_or_skip() {
    return avx2_kernels();
}

std::vector<std::uint64_t> random_words(std::size_t n, std::mt19937_64 &rng) {
    std::vector<std::uint64_t> v(n);
    for (auto &w : v) {
        w = rng();
    }
    return v;
}

}  // namespace

TEST(kernels, default_table_is_widest_supported) {
    const KernelTable *avx2 = avx2_kernels();
    if (std::getenv("PAULIPART_KERNELS") == nullptr) {
        EXPECT_EQ(&kernels(), avx2 != nullptr ? avx2 : &scalar_kernels());
    }
    EXPECT_STREQ(scalar_kernels().name, "scalar");
}

TEST(kernels, and_popcount_matches_scalar) {
    const KernelTable *avx2 = avx2_or_skip();
    if (!avx2) {
        GTEST_SKIP() << "no AVX2";
    }
    std::mt19937_64 rng(1);
    for (std::size_t words : {0, 1, 2, 3, 4, 5, 7, 8, 15, 16, 17, 33, 100, 1024}) {
        auto a = random_words(words, rng);
        auto b = random_words(words, rng);
        EXPECT_EQ(avx2->and_popcount(a.data(), b.data(), words),
                  scalar_kernels().and_popcount(a.data(), b.data(), words))
            << words;
    }
}

TEST(kernels, commute_row_matches_scalar) {
    const KernelTable *avx2 = avx2_or_skip();
    if (!avx2) {
        GTEST_SKIP() << "no AVX2";
    }
    std::mt19937_64 rng(2);
    for (std::size_t words : {1, 2, 3}) {
        for (std::size_t n : {1, 3, 4, 5, 63, 64, 65, 130, 257}) {
            std::size_t stride = n + (rng() % 3);
            auto x = random_words(words * stride, rng);
            auto z = random_words(words * stride, rng);
            auto ax = random_words(words, rng);
            auto az = random_words(words, rng);
            if (rng() % 2) {
                for (std::size_t w = 0; w < words; ++w) {
                    for (std::size_t i = 0; i < n; ++i) {
                        x[w * stride + i] &= 0xF0F0;
                        z[w * stride + i] &= 0x0FF0;
                    }
                }
            }
            MaskColumns cols{x.data(), z.data(), n, stride, words};
            for (bool qwc : {false, true}) {
                std::vector<std::uint64_t> expect((n + 63) / 64, ~0ULL);
                std::vector<std::uint64_t> got((n + 63) / 64, ~0ULL);
                scalar_kernels().commute_row(cols, ax.data(), az.data(), qwc, expect.data());
                avx2->commute_row(cols, ax.data(), az.data(), qwc, got.data());
                EXPECT_EQ(got, expect) << "words=" << words << " n=" << n << " qwc=" << qwc;
            }
        }
    }
}

TEST(kernels, gather_bits_matches_scalar) {
    const KernelTable *avx2 = avx2_or_skip();
    if (!avx2) {
        GTEST_SKIP() << "no AVX2";
    }
    std::mt19937_64 rng(3);
    auto bits = random_words(300, rng);
    for (std::size_t n : {0, 1, 7, 8, 9, 63, 64, 65, 200, 1000}) {
        std::vector<std::uint32_t> idx(n);
        for (auto &i : idx) {
            i = static_cast<std::uint32_t>(rng() % (300 * 64));
        }
        std::vector<std::uint64_t> expect((n + 63) / 64 + 1, ~0ULL);
        std::vector<std::uint64_t> got((n + 63) / 64 + 1, ~0ULL);
        scalar_kernels().gather_bits(bits.data(), idx.data(), n, expect.data());
        avx2->gather_bits(bits.data(), idx.data(), n, got.data());
        EXPECT_EQ(got, expect) << n;
    }
}

TEST(kernels, accumulate_bits_matches_scalar) {
    const KernelTable *avx2 = avx2_or_skip();
    if (!avx2) {
        GTEST_SKIP() << "no AVX2";
    }
    std::mt19937_64 rng(4);
    for (std::size_t n : {0, 1, 7, 8, 9, 31, 64, 100, 513}) {
        auto bits = random_words((n + 63) / 64 + 1, rng);
        std::vector<std::int32_t> expect(n + 3);
        for (auto &v : expect) {
            v = static_cast<std::int32_t>(rng() % 100);
        }
        auto got = expect;
        for (std::int32_t delta : {1, -1, 7}) {
            scalar_kernels().accumulate_bits(expect.data(), bits.data(), n, delta);
            avx2->accumulate_bits(got.data(), bits.data(), n, delta);
            EXPECT_EQ(got, expect) << n;
        }
    }
}

TEST(kernels, classify_flips_matches_scalar) {
    const KernelTable *avx2 = avx2_or_skip();
    if (!avx2) {
        GTEST_SKIP() << "no AVX2";
    }
    std::mt19937_64 rng(5);
    for (std::size_t n : {1, 3, 4, 5, 16, 17, 100, 1001}) {
        std::vector<std::uint8_t> state(n);
        std::vector<std::int32_t> commuting(n);
        std::vector<double> linear(n);
        std::int32_t selected = 0;
        for (std::size_t i = 0; i < n; ++i) {
            state[i] = rng() % 2;
            selected += state[i];
            linear[i] = (rng() % 4 == 0) ? 0.5 * static_cast<double>(rng() % 5) : 1.0;
        }
        for (std::size_t i = 0; i < n; ++i) {
            commuting[i] = static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(selected + 1));
        }
        for (double offset : {0.0, 0.3, 2.0}) {
            for (double t : {0.05, 1.0, 4.0}) {
                FlipInputs in{state.data(), commuting.data(), linear.data(), n, selected, 2.0, offset,
                              54.0 * std::log(2.0) * t};
                std::vector<std::uint32_t> c1(n), m1(n), c2(n), m2(n);
                std::vector<double> d1(n), d2(n);
                FlipOutputs o1{c1.data(), m1.data(), d1.data(), 0, 0};
                FlipOutputs o2{c2.data(), m2.data(), d2.data(), 0, 0};
                scalar_kernels().classify_flips(in, o1);
                avx2->classify_flips(in, o2);
                ASSERT_EQ(o1.n_certain, o2.n_certain);
                ASSERT_EQ(o1.n_maybe, o2.n_maybe);
                c1.resize(o1.n_certain);
                c2.resize(o2.n_certain);
                m1.resize(o1.n_maybe);
                m2.resize(o2.n_maybe);
                d1.resize(o1.n_maybe);
                d2.resize(o2.n_maybe);
                EXPECT_EQ(c1, c2);
                EXPECT_EQ(m1, m2);
                EXPECT_EQ(d1, d2);
            }
        }
    }
}
