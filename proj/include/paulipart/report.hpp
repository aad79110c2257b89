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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "paulipart/commutativity_graph.hpp"
#include "paulipart/pauli.hpp"

namespace paulipart {

/// A group of mutually commuting strings, ascending indices.
struct Partition {
    std::vector<Index> members;

    bool operator==(const Partition &other) const = default;
};

/// Result of one partitioning run, shared by every algorithm.
struct PartitionReport {
    std::string algorithm;  ///< "ising", "boppana_halldorsson" or "bron_kerbosch"
    CommutativityMode mode = CommutativityMode::gc;
    std::vector<Partition> partitions;  ///< extraction order
    std::size_t n_strings = 0;
    std::optional<std::size_t> n_bit;  ///< solver capacity; absent for the baselines
    double relative_dimension = 1.0;   ///< D
    double reduction_factor = 0.0;     ///< F = N / #partitions
    std::size_t solver_calls = 0;
    double two_pass_fraction = 0.0;  ///< s
    std::vector<double> per_call_durations;
    std::vector<std::size_t> per_partition_sizes;
    /// |D_k| for partitions built by the two-pass window, nullopt otherwise.
    std::vector<std::optional<std::size_t>> per_partition_d_sizes;
    /// Two-pass refinements that kept D because the second solve was smaller.
    std::size_t refinement_fallbacks = 0;
    double wall_seconds = 0.0;

    std::optional<double> gamma() const;
    std::size_t two_pass_count() const;
};

/// First violated property, or nullopt: partitions non-empty, pairwise
/// disjoint and covering 0..n_strings-1 exactly.
std::optional<std::string> check_exact_cover(std::size_t n_strings, const std::vector<Partition> &partitions);

/// First partition that is not a clique of `graph`, or nullopt.
std::optional<std::string> check_cliques(const CommutativityGraph &graph, const std::vector<Partition> &partitions);

/// Cover and clique checks plus consistency of every derived field (sizes,
/// F, D, gamma, s, capacity bound). Returns the first violation.
std::optional<std::string> validate_report(const PartitionReport &report, const CommutativityGraph &graph);

/// Fills n_strings, sizes, F and s from the partition list and d-sizes.
void finalize_metrics(PartitionReport &report);

}  // namespace paulipart
