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

#include "paulipart/annealer.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "paulipart/simd/kernels.hpp"

namespace paulipart {

void AnnealParams::validate() const {
    if (mc_steps < 1) {
        throw std::invalid_argument("mc_steps must be >= 1");
    }
    if (!(t_end > 0.0) || !(t_start >= t_end)) {
        throw std::invalid_argument("temperatures must satisfy t_start >= t_end > 0");
    }
    if (!(offset_increment >= 0.0)) {
        throw std::invalid_argument("offset_increment must be >= 0");
    }
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be >= 1");
    }
}

namespace {

// Uniform draws are (k + 0.5) * 2^-53, so exp(-d/T) must exceed 2^-54 for a
// flip to pass; anything at or above this many temperatures never does.
constexpr double kCutoffInTemperatures = 54.0 * std::numbers::ln2;

double open_unit(std::mt19937_64 &rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

std::size_t uniform_index(std::mt19937_64 &rng, std::size_t n) {
    return static_cast<std::size_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

AnnealOutcome run_restart(const QuboProblem &problem, const AnnealParams &params, std::uint64_t seed) {
    const std::size_t n = problem.size();
    const simd::KernelTable &k = simd::kernels();
    std::mt19937_64 rng(seed);

    Assignment state(n, 0);
    std::vector<std::int32_t> commuting(n, 0);
    std::vector<std::uint32_t> certain(n);
    std::vector<std::uint32_t> maybe(n);
    std::vector<double> maybe_delta(n);
    std::vector<std::uint32_t> eligible;
    eligible.reserve(n);

    std::int32_t selected = 0;
    double offset = 0.0;
    double current = 0.0;
    AnnealOutcome out{state, 0.0, 0};

    const double ratio = params.t_end / params.t_start;
    const double last = params.mc_steps > 1 ? static_cast<double>(params.mc_steps - 1) : 1.0;
    for (std::uint64_t step = 0; step < params.mc_steps; ++step) {
        const double temperature = params.t_start * std::pow(ratio, static_cast<double>(step) / last);
        simd::FlipInputs in{state.data(),    commuting.data(), problem.linear().data(),
                            n,               selected,         problem.penalty(),
                            offset,          kCutoffInTemperatures * temperature};
        simd::FlipOutputs res{certain.data(), maybe.data(), maybe_delta.data(), 0, 0};
        k.classify_flips(in, res);

        eligible.assign(certain.begin(), certain.begin() + static_cast<std::ptrdiff_t>(res.n_certain));
        for (std::size_t t = 0; t < res.n_maybe; ++t) {
            if (open_unit(rng) < std::exp(-maybe_delta[t] / temperature)) {
                eligible.push_back(maybe[t]);
            }
        }
        if (eligible.empty()) {
            offset += params.offset_increment;
            continue;
        }

        const std::uint32_t flip = eligible[uniform_index(rng, eligible.size())];
        const double conf = static_cast<double>(selected - static_cast<std::int32_t>(state[flip]) - commuting[flip]);
        const double sign = state[flip] ? -1.0 : 1.0;
        current += sign * (problem.penalty() * conf - problem.linear()[flip]);
        if (state[flip]) {
            state[flip] = 0;
            --selected;
            k.accumulate_bits(commuting.data(), problem.commuting().row(flip).data(), n, -1);
        } else {
            state[flip] = 1;
            ++selected;
            k.accumulate_bits(commuting.data(), problem.commuting().row(flip).data(), n, 1);
        }
        offset = 0.0;
        ++out.flips;
        if (current < out.energy - 1e-12) {
            out.energy = current;
            out.best = state;
        }
    }
    out.energy = energy(problem, out.best);
    return out;
}

}  // namespace

AnnealOutcome anneal(const QuboProblem &problem, const AnnealParams &params) {
    params.validate();
    std::vector<AnnealOutcome> outcomes(params.restarts);
    if (params.parallel_restarts && params.restarts > 1) {
        std::vector<std::future<AnnealOutcome>> futures;
        for (unsigned r = 0; r < params.restarts; ++r) {
            futures.push_back(std::async(std::launch::async, run_restart, std::cref(problem), std::cref(params),
                                         params.seed + r));
        }
        for (unsigned r = 0; r < params.restarts; ++r) {
            outcomes[r] = futures[r].get();
        }
    } else {
        for (unsigned r = 0; r < params.restarts; ++r) {
            outcomes[r] = run_restart(problem, params, params.seed + r);
        }
    }
    std::size_t best = 0;
    std::uint64_t flips = 0;
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        flips += outcomes[r].flips;
        if (outcomes[r].energy < outcomes[best].energy) {
            best = r;
        }
    }
    AnnealOutcome result = std::move(outcomes[best]);
    result.flips = flips;
    return result;
}

}  // namespace paulipart
