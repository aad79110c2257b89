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

#include "paulipart/partitioner.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "paulipart/baselines.hpp"

using namespace paulipart;

namespace {

PartitionConfig exact_config(std::size_t n_bit = 8192) {
    PartitionConfig c;
    c.n_bit = n_bit;
    c.solver = SolverKind::exact;
    return c;
}

ObservableSet five_strings() {
    return load_observable_file(PAULIPART_FIXTURES "/five_strings.txt");
}

void expect_valid(const PartitionReport &r, const CommutativityGraph &g) {
    auto violation = validate_report(r, g);
    EXPECT_FALSE(violation.has_value()) << *violation;
}

}  // namespace

TEST(relative_dimension, examples) {
    EXPECT_DOUBLE_EQ(relative_dimension(65535, 8192), 65535.0 / 8192.0);
    EXPECT_NEAR(relative_dimension(65535, 8192), 8.00, 0.005);
    EXPECT_NEAR(relative_dimension(34622, 1024), 33.81, 0.005);
    EXPECT_EQ(relative_dimension(100, 8192), 1.0);
    EXPECT_EQ(relative_dimension(8192, 8192), 1.0);
}

TEST(partition_config, validation) {
    PartitionConfig c;
    EXPECT_NO_THROW(c.validate());
    c.n_bit = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.r = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.m = 1.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    EXPECT_EQ(parse_solver("exact"), SolverKind::exact);
    EXPECT_THROW(parse_solver("magic"), std::invalid_argument);
}

TEST(extract_partition, five_strings_one_pass) {
    auto g = CommutativityGraph::build(five_strings(), CommutativityMode::gc);
    std::vector<Index> all = {0, 1, 2, 3, 4};
    Extraction e = extract_partition(g, all, exact_config());
    EXPECT_EQ(e.partition.members, (std::vector<Index>{0, 1, 2}));
    EXPECT_EQ(e.solver_calls, 1u);
    EXPECT_FALSE(e.two_pass);
    EXPECT_FALSE(e.d_size.has_value());
}

TEST(extract_partition, singleton_remaining) {
    auto g = CommutativityGraph::build(five_strings(), CommutativityMode::gc);
    std::vector<Index> one = {3};
    for (SolverKind solver : {SolverKind::exact, SolverKind::anneal}) {
        PartitionConfig c = exact_config(1);
        c.solver = solver;
        c.anneal.mc_steps = 10;
        EXPECT_EQ(extract_partition(g, one, c).partition.members, one);
    }
}

TEST(extract_partition, two_pass_on_twenty_strings) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        ObservableSet set = oracle::random_set(4, 20, rng);
        auto g = CommutativityGraph::build(set, CommutativityMode::gc);
        std::vector<Index> all(20);
        for (Index i = 0; i < 20; ++i) {
            all[i] = i;
        }
        Extraction e = extract_partition(g, all, exact_config(8));
        EXPECT_EQ(e.solver_calls, 2u);
        EXPECT_TRUE(e.two_pass);
        ASSERT_TRUE(e.d_size.has_value());
        EXPECT_GE(e.partition.members.size(), *e.d_size);
        EXPECT_FALSE(e.fallback_used);
        EXPECT_TRUE(is_clique(g, e.partition.members));
        EXPECT_LE(e.partition.members.size(), 8u);
        std::vector<Index> first_window(all.begin(), all.begin() + 8);
        EXPECT_EQ(*e.d_size, bron_kerbosch_max_clique(g, first_window).size());
    }
}

TEST(extract_partition, refinement_count) {
    std::mt19937_64 rng(52);
    ObservableSet set = oracle::random_set(4, 30, rng);
    auto g = CommutativityGraph::build(set, CommutativityMode::gc);
    std::vector<Index> all(30);
    for (Index i = 0; i < 30; ++i) {
        all[i] = i;
    }
    PartitionConfig c = exact_config(10);
    c.r = 3;
    Extraction e = extract_partition(g, all, c);
    EXPECT_EQ(e.solver_calls, 4u);
    EXPECT_EQ(e.call_seconds.size(), 4u);
}

TEST(partition_all, five_strings) {
    ObservableSet set = five_strings();
    PartitionReport r = partition_all(set, exact_config());
    ASSERT_EQ(r.partitions.size(), 2u);
    EXPECT_EQ(r.partitions[0].members, (std::vector<Index>{0, 1, 2}));
    EXPECT_EQ(r.partitions[1].members, (std::vector<Index>{3, 4}));
    EXPECT_DOUBLE_EQ(r.reduction_factor, 2.5);
    EXPECT_EQ(r.solver_calls, 2u);
    EXPECT_EQ(r.algorithm, "ising");
    expect_valid(r, CommutativityGraph::build(set, CommutativityMode::gc));
}

TEST(partition_all, two_qubit_tomography) {
    ObservableSet set = gen_full_tomography(2);
    for (SolverKind solver : {SolverKind::exact, SolverKind::anneal}) {
        PartitionConfig c = exact_config();
        c.solver = solver;
        PartitionReport r = partition_all(set, c);
        ASSERT_EQ(r.partitions.size(), 5u);
        for (const auto &p : r.partitions) {
            EXPECT_EQ(p.members.size(), 3u);
        }
        EXPECT_DOUBLE_EQ(r.reduction_factor, 3.0);
        EXPECT_EQ(r.two_pass_fraction, 0.0);
        EXPECT_EQ(r.relative_dimension, 1.0);
    }
}

TEST(partition_all, anticommuting_singletons) {
    ObservableSet set = parse_observables("1.0 X\n1.0 Y\n1.0 Z\n");
    PartitionReport r = partition_all(set, exact_config());
    EXPECT_EQ(r.partitions.size(), 3u);
    EXPECT_DOUBLE_EQ(r.reduction_factor, 1.0);
}

TEST(partition_all, windowed_accounting_and_validity) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        ObservableSet set = oracle::random_set(4, 60, rng);
        auto g = CommutativityGraph::build(set, CommutativityMode::gc);
        PartitionConfig c = exact_config(8);
        PartitionReport r = partition_all(g, c);
        expect_valid(r, g);
        std::size_t two_pass = r.two_pass_count();
        std::size_t one_pass = r.partitions.size() - two_pass;
        EXPECT_EQ(r.solver_calls, one_pass + 2 * two_pass);
        EXPECT_EQ(r.per_call_durations.size(), r.solver_calls);
        EXPECT_EQ(r.refinement_fallbacks, 0u);
        for (std::size_t k = 0; k < r.partitions.size(); ++k) {
            if (r.per_partition_d_sizes[k]) {
                EXPECT_GE(r.partitions[k].members.size(), *r.per_partition_d_sizes[k]);
            }
            EXPECT_LE(r.partitions[k].members.size(), 8u);
        }
        EXPECT_LE(*r.gamma(), 1.0);
    }
}

TEST(partition_all, anneal_reports_are_valid) {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 5; ++trial) {
        ObservableSet set = oracle::random_set(5, 120, rng);
        auto g = CommutativityGraph::build(set, CommutativityMode::gc);
        PartitionConfig c;
        c.n_bit = 30;
        c.anneal.mc_steps = 500;
        c.anneal.restarts = 1;
        c.anneal.seed = trial;
        PartitionReport r = partition_all(g, c);
        expect_valid(r, g);
        PartitionReport again = partition_all(g, c);
        EXPECT_EQ(r.partitions, again.partitions);
    }
}

TEST(partition_all, qwc_partitions_are_gc_cliques) {
    std::mt19937_64 rng(55);
    ObservableSet set = oracle::random_set(4, 40, rng);
    auto gc = CommutativityGraph::build(set, CommutativityMode::gc);
    PartitionConfig c = exact_config(20);
    c.mode = CommutativityMode::qwc;
    PartitionReport qwc = partition_all(set, c);
    EXPECT_EQ(qwc.mode, CommutativityMode::qwc);
    EXPECT_FALSE(check_cliques(gc, qwc.partitions).has_value());
    c.mode = CommutativityMode::gc;
    PartitionReport general = partition_all(set, c);
    std::cout << "QWC F = " << qwc.reduction_factor << ", GC F = " << general.reduction_factor << "\n";
}
