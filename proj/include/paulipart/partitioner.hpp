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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paulipart/annealer.hpp"
#include "paulipart/commutativity_graph.hpp"
#include "paulipart/observable_set.hpp"
#include "paulipart/report.hpp"

namespace paulipart {

enum class SolverKind { exact, anneal };

std::string_view to_string(SolverKind kind);
SolverKind parse_solver(std::string_view text);

struct PartitionConfig {
    std::size_t n_bit = 8192;  ///< variables per solver call
    double m = 2.0;            ///< conflict penalty
    unsigned r = 1;            ///< refinement passes of the two-pass window
    SolverKind solver = SolverKind::anneal;
    AnnealParams anneal;
    CommutativityMode mode = CommutativityMode::gc;
    unsigned graph_threads = 0;

    /// Throws std::invalid_argument unless n_bit >= 1, r >= 1, m > 1 and the
    /// anneal parameters are valid.
    void validate() const;
};

/// D = N / n_bit when N > n_bit, else 1.
double relative_dimension(std::size_t n_strings, std::size_t n_bit);

struct Extraction {
    Partition partition;
    std::size_t solver_calls = 0;
    bool two_pass = false;
    std::optional<std::size_t> d_size;  ///< |D| of the first window solve
    bool fallback_used = false;         ///< a refinement kept D
    std::vector<double> call_seconds;
};

/// Extracts one commuting partition from `remaining` (ascending indices).
///
/// If |remaining| <= n_bit, one solve over all of it. Otherwise a first solve
/// over the n_bit smallest indices gives D; then, r times, every remaining
/// string is ranked by how many members of D it commutes with (itself
/// included), descending, D members first on ties, then by index; the top
/// n_bit strings are solved again and the result replaces D unless smaller.
/// An empty result falls back to the singleton of the first remaining index.
///
/// `call_index` numbers solver calls across a run so each gets its own seed.
Extraction extract_partition(const CommutativityGraph &graph, std::span<const Index> remaining,
                             const PartitionConfig &config, std::uint64_t call_index = 0);

/// Extracts partitions until every string is covered.
PartitionReport partition_all(const CommutativityGraph &graph, const PartitionConfig &config);

/// Builds the graph in config.mode, then partitions.
PartitionReport partition_all(const ObservableSet &set, const PartitionConfig &config);

}  // namespace paulipart
