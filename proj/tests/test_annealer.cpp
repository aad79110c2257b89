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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "paulipart/simd/kernels.hpp"

using namespace paulipart;

namespace {

std::vector<Index> iota(std::size_t n) {
    std::vector<Index> v(n);
    for (Index i = 0; i < n; ++i) {
        v[i] = i;
    }
    return v;
}

}  // namespace

TEST(anneal_params, validation) {
    AnnealParams p;
    EXPECT_NO_THROW(p.validate());
    p.mc_steps = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.t_end = 0.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.t_start = 0.01;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.restarts = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.offset_increment = -1.0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(anneal, five_strings_reaches_ground_state) {
    auto g = CommutativityGraph::build(load_observable_file(PAULIPART_FIXTURES "/five_strings.txt"), CommutativityMode::gc);
    auto all = iota(5);
    QuboProblem p = build_qubo(g, all);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        AnnealParams params;
        params.seed = seed;
        AnnealOutcome out = anneal(p, params);
        EXPECT_EQ(out.energy, -3.0);
        EXPECT_EQ(energy(p, out.best), -3.0);
    }
}

TEST(anneal, zero_conflict_problem_selects_everything) {
    for (std::size_t k : {1, 5, 40}) {
        QuboProblem p(k, {});
        AnnealParams cold;
        cold.t_start = cold.t_end = 0.05;
        cold.mc_steps = k;
        cold.restarts = 1;
        EXPECT_EQ(solve_anneal(p, cold), Assignment(k, 1));
        EXPECT_EQ(solve_anneal(p, AnnealParams{}), Assignment(k, 1));
    }
}

TEST(anneal, deterministic_for_a_seed) {
    std::mt19937_64 rng(41);
    auto g = CommutativityGraph::from_edges(40, oracle::random_edges(40, 0.5, rng));
    auto all = iota(40);
    QuboProblem p = build_qubo(g, all);
    AnnealParams params;
    params.mc_steps = 3000;
    params.seed = 99;
    AnnealOutcome a = anneal(p, params);
    AnnealOutcome b = anneal(p, params);
    params.parallel_restarts = true;
    AnnealOutcome c = anneal(p, params);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.flips, b.flips);
    EXPECT_EQ(a.best, c.best);
    EXPECT_EQ(a.flips, c.flips);
}

TEST(anneal, scalar_and_simd_kernels_give_identical_runs) {
    const auto *avx2 = simd::avx2_kernels();
    if (!avx2) {
        GTEST_SKIP() << "no AVX2";
    }
    std::mt19937_64 rng(42);
    auto g = CommutativityGraph::from_edges(150, oracle::random_edges(150, 0.7, rng));
    auto all = iota(150);
    QuboProblem p = build_qubo(g, all);
    AnnealParams params;
    params.mc_steps = 5000;
    params.restarts = 2;
    const auto &saved = simd::kernels();
    simd::set_kernels(simd::scalar_kernels());
    AnnealOutcome a = anneal(p, params);
    simd::set_kernels(*avx2);
    AnnealOutcome b = anneal(p, params);
    simd::set_kernels(saved);
    EXPECT_EQ(a.best, b.best);
    EXPECT_EQ(a.flips, b.flips);
}

TEST(anneal, energy_is_that_of_the_best_assignment) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 5 + rng() % 50;
        auto g = CommutativityGraph::from_edges(n, oracle::random_edges(n, 0.5, rng));
        auto all = iota(n);
        QuboProblem p = build_qubo(g, all);
        AnnealParams params;
        params.mc_steps = 2000;
        params.seed = trial;
        AnnealOutcome out = anneal(p, params);
        EXPECT_EQ(out.energy, energy(p, out.best));
        EXPECT_LE(out.energy, 0.0);
    }
}

TEST(anneal, matches_exact_on_random_sixteen_variable_problems) {
    std::mt19937_64 rng(44);
    int matches = 0;
    const int problems = 50;
    for (int trial = 0; trial < problems; ++trial) {
        auto g = CommutativityGraph::from_edges(16, oracle::random_edges(16, 0.5, rng));
        auto all = iota(16);
        QuboProblem p = build_qubo(g, all);
        AnnealParams params;
        params.seed = static_cast<std::uint64_t>(trial);
        matches += energy(p, solve_anneal(p, params)) == energy(p, solve_exact(p));
    }
    EXPECT_GE(matches, problems * 9 / 10);
}
