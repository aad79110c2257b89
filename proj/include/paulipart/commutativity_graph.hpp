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
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "paulipart/bit_matrix.hpp"
#include "paulipart/observable_set.hpp"
#include "paulipart/pauli.hpp"

namespace paulipart {

/// Index of a string within its ObservableSet (and of a node in the graph).
using Index = std::uint32_t;

/// Node i and node j are adjacent iff i != j and strings i and j commute under
/// the graph's mode. Immutable after construction.
class CommutativityGraph {
   public:
    /// Pairwise predicate over all strings, one SIMD row at a time. `threads`
    /// = 0 uses the hardware concurrency.
    static CommutativityGraph build(const ObservableSet &set, CommutativityMode mode, unsigned threads = 0);

    /// A graph with explicit edges, for problems that do not come from Pauli
    /// strings (random instances, tests). Self-loops and repeats are ignored.
    static CommutativityGraph from_edges(std::size_t n_nodes, std::span<const std::pair<Index, Index>> edges,
                                         CommutativityMode mode = CommutativityMode::gc);

    std::size_t size() const { return adjacency_.rows(); }
    CommutativityMode mode() const { return mode_; }
    const BitMatrix &adjacency() const { return adjacency_; }

    bool adjacent(Index i, Index j) const { return adjacency_.get(i, j); }
    std::span<const std::uint64_t> row(Index i) const { return adjacency_.row(i); }

    std::size_t degree(Index i) const;
    std::size_t edge_count() const;

    /// "i j" per line for every edge with i < j.
    void write_edge_list(std::ostream &out) const;

   private:
    CommutativityGraph(BitMatrix adjacency, CommutativityMode mode) : adjacency_(std::move(adjacency)), mode_(mode) {}

    BitMatrix adjacency_;
    CommutativityMode mode_;
};

/// True iff every unordered pair of members is adjacent. Empty and singleton
/// sets are cliques. Throws std::out_of_range on a bad index.
bool is_clique(const CommutativityGraph &graph, std::span<const Index> members);

/// |{i in subset : i == j or i adjacent to j}|; the string commutes with itself.
std::size_t count_commuting(const CommutativityGraph &graph, Index j, std::span<const Index> subset);

/// count_commuting for every node at once. `subset` must be duplicate-free.
std::vector<std::int32_t> count_commuting_all(const CommutativityGraph &graph, std::span<const Index> subset);

}  // namespace paulipart
