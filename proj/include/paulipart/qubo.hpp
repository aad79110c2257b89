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
#include <span>
#include <utility>
#include <vector>

#include "paulipart/bit_matrix.hpp"
#include "paulipart/commutativity_graph.hpp"

namespace paulipart {

/// One binary value (0 or 1) per active variable, in active order.
using Assignment = std::vector<std::uint8_t>;

/// Maximum-clique QUBO over a set of active strings:
///
///   f(x) = - sum_i b_i x_i + m * sum_{i<j, conflict(i,j)} x_i x_j
///
/// A conflict is a pair of active strings that do not commute. Each unordered
/// pair is counted once, so any m > 1 makes every global minimum conflict-free.
/// Strings outside the active set are fixed to 0 and do not appear.
class QuboProblem {
   public:
    /// Explicit problem over variables 0..n_vars-1 (active[i] == i).
    /// `linear` defaults to all ones.
    QuboProblem(std::size_t n_vars, std::span<const std::pair<Index, Index>> conflicts, double penalty = 2.0,
                std::vector<double> linear = {});

    std::size_t size() const { return active_.size(); }
    const std::vector<Index> &active() const { return active_; }
    const std::vector<double> &linear() const { return linear_; }
    double penalty() const { return penalty_; }

    /// Local adjacency: bit (a, b) set iff active[a] and active[b] commute,
    /// a != b. Conflicts are the off-diagonal zeros.
    const BitMatrix &commuting() const { return commuting_; }
    bool conflict(std::size_t a, std::size_t b) const { return a != b && !commuting_.get(a, b); }

    /// Conflict pairs as (smaller, larger) string indices, sorted.
    std::vector<std::pair<Index, Index>> conflicts() const;

   private:
    QuboProblem(std::vector<Index> active, BitMatrix commuting, double penalty);

    friend QuboProblem build_qubo(const CommutativityGraph &graph, std::span<const Index> active, double penalty);

    std::vector<Index> active_;
    std::vector<double> linear_;
    double penalty_;
    BitMatrix commuting_;
};

/// Builds the problem for `active` (non-empty, duplicate-free) with b_i = 1.
/// Throws std::invalid_argument for an empty active set or penalty <= 1.
QuboProblem build_qubo(const CommutativityGraph &graph, std::span<const Index> active, double penalty = 2.0);

/// Throws std::invalid_argument when x has the wrong length.
double energy(const QuboProblem &problem, const Assignment &x);

inline constexpr std::size_t kMaxExactVariables = 24;

/// Exhaustive global minimizer. Among equal energies the assignment with the
/// smallest binary value wins, variable 0 being the least significant bit.
/// Throws ProblemTooLarge above kMaxExactVariables.
Assignment solve_exact(const QuboProblem &problem);

/// Selected strings (active[i] with x_i = 1), in active order.
std::vector<Index> selected_members(std::span<const Index> active, const Assignment &x);

/// Turns an assignment into a clique: while a selected pair conflicts, drop
/// the selected string with the most conflicts (the larger index on ties).
/// Returns the survivors in ascending index order.
std::vector<Index> repair_to_clique(const CommutativityGraph &graph, std::span<const Index> active,
                                   const Assignment &x);

}  // namespace paulipart
