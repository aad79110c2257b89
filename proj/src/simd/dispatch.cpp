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

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "paulipart/simd/kernels.hpp"

namespace paulipart::simd {

#if defined(PAULIPART_HAVE_AVX2)
const KernelTable *avx2_table_unchecked();
#endif

const KernelTable *avx2_kernels() {
#if defined(PAULIPART_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
    return supported ? avx2_table_unchecked() : nullptr;
#else
    return nullptr;
#endif
}

namespace {

const KernelTable *select_default() {
    const KernelTable *avx2 = avx2_kernels();
    if (const char *env = std::getenv("PAULIPART_KERNELS")) {
        std::string_view choice(env);
        if (choice == "scalar") {
            return &scalar_kernels();
        }
        if (choice == "avx2" && avx2 != nullptr) {
            return avx2;
        }
    }
    return avx2 != nullptr ? avx2 : &scalar_kernels();
}

std::atomic<const KernelTable *> &active() {
    static std::atomic<const KernelTable *> table{select_default()};
    return table;
}

}  // namespace

const KernelTable &kernels() {
    return *active().load(std::memory_order_relaxed);
}

void set_kernels(const KernelTable &table) {
    active().store(&table, std::memory_order_relaxed);
}

}  // namespace paulipart::simd
