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

#include <cstdint>

#include "paulipart/qubo.hpp"

namespace paulipart {

/// Budget and schedule of the annealer. The temperature falls geometrically
/// from t_start to t_end over mc_steps sweeps.
struct AnnealParams {
    std::uint64_t mc_steps = 100000;
    double t_start = 4.0;
    double t_end = 0.05;
    double offset_increment = 0.1;
    std::uint64_t seed = 0;
    unsigned restarts = 4;
    /// Run restarts on separate threads. The result does not depend on it.
    bool parallel_restarts = false;

    /// Throws std::invalid_argument unless t_start >= t_end > 0, mc_steps >= 1,
    /// restarts >= 1 and offset_increment >= 0.
    void validate() const;
};

struct AnnealOutcome {
    Assignment best;
    double energy = 0.0;
    std::uint64_t flips = 0;
};

/// Digital-annealer style search. Each sweep evaluates every single-bit flip
/// in parallel; flips whose delta minus the current escape offset passes a
/// Metropolis test are eligible, and one eligible flip is applied uniformly at
/// random. A sweep with no eligible flip raises the offset by
/// offset_increment; any applied flip resets it. Restart r starts from the
/// all-zero assignment with seed + r. Returns the lowest-energy assignment
/// seen (earliest restart on ties).
AnnealOutcome anneal(const QuboProblem &problem, const AnnealParams &params);

inline Assignment solve_anneal(const QuboProblem &problem, const AnnealParams &params) {
    return anneal(problem, params).best;
}

}  // namespace paulipart
