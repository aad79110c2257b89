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
#include <limits>
#include <span>
#include <vector>

#include "paulipart/commutativity_graph.hpp"
#include "paulipart/report.hpp"

namespace paulipart {

/// Greedy recursive clique: pick a random pivot, recurse into the strings
/// that commute with it and into those that do not, and keep the larger of
/// {pivot} + commuting result and the anticommuting result (the commuting
/// side on ties). Returns members ascending; empty subset gives empty.
std::vector<Index> ramsey(const CommutativityGraph &graph, std::span<const Index> subset, std::uint64_t rng_seed);

/// Iterated ramsey extraction until every string is covered.
PartitionReport boppana_halldorsson_partition(const CommutativityGraph &graph, std::uint64_t rng_seed);

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

/// Maximum clique of the subgraph induced by `subset` (Bron-Kerbosch with
/// Tomita pivoting). Among maximum cliques the lexicographically smallest
/// ascending member list is returned. Throws BudgetExceeded once more than
/// `budget` search nodes have been expanded.
std::vector<Index> bron_kerbosch_max_clique(const CommutativityGraph &graph, std::span<const Index> subset,
                                            std::uint64_t budget = kUnlimitedBudget);

/// Iterated maximum-clique removal. The budget applies to each extraction.
PartitionReport bron_kerbosch_partition(const CommutativityGraph &graph, std::uint64_t budget = kUnlimitedBudget);

}  // namespace paulipart
