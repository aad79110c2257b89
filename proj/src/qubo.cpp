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

#include "paulipart/qubo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "paulipart/errors.hpp"
#include "paulipart/simd/kernels.hpp"

namespace paulipart {
namespace {

void check_penalty(double penalty) {
    if (!(penalty > 1.0)) {
        throw std::invalid_argument("penalty m must be > 1");
    }
}

}  // namespace

QuboProblem::QuboProblem(std::vector<Index> active, BitMatrix commuting, double penalty)
    : active_(std::move(active)), linear_(active_.size(), 1.0), penalty_(penalty), commuting_(std::move(commuting)) {}

QuboProblem::QuboProblem(std::size_t n_vars, std::span<const std::pair<Index, Index>> conflicts, double penalty,
                         std::vector<double> linear)
    : active_(n_vars), linear_(std::move(linear)), penalty_(penalty), commuting_(n_vars, n_vars) {
    if (n_vars == 0) {
        throw std::invalid_argument("a QUBO needs at least one variable");
    }
    check_penalty(penalty);
    if (linear_.empty()) {
        linear_.assign(n_vars, 1.0);
    }
    if (linear_.size() != n_vars) {
        throw std::invalid_argument("linear coefficient count does not match the variable count");
    }
    for (std::size_t i = 0; i < n_vars; ++i) {
        active_[i] = static_cast<Index>(i);
        for (std::size_t j = 0; j < n_vars; ++j) {
            commuting_.set(i, j, i != j);
        }
    }
    for (auto [a, b] : conflicts) {
        if (a >= n_vars || b >= n_vars || a == b) {
            throw std::invalid_argument("invalid conflict pair");
        }
        commuting_.set(a, b, false);
        commuting_.set(b, a, false);
    }
}

std::vector<std::pair<Index, Index>> QuboProblem::conflicts() const {
    std::vector<std::pair<Index, Index>> out;
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = a + 1; b < size(); ++b) {
            if (conflict(a, b)) {
                out.emplace_back(std::min(active_[a], active_[b]), std::max(active_[a], active_[b]));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

QuboProblem build_qubo(const CommutativityGraph &graph, std::span<const Index> active, double penalty) {
    if (active.empty()) {
        throw std::invalid_argument("active set is empty");
    }
    check_penalty(penalty);
    std::vector<Index> sorted(active.begin(), active.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("active set contains a repeated index");
    }
    if (sorted.back() >= graph.size()) {
        throw std::out_of_range("active index out of range");
    }
    const std::size_t n = active.size();
    BitMatrix local(n, n);
    const simd::KernelTable &k = simd::kernels();
    for (std::size_t a = 0; a < n; ++a) {
        k.gather_bits(graph.row(active[a]).data(), active.data(), n, local.row(a).data());
    }
    return QuboProblem(std::vector<Index>(active.begin(), active.end()), std::move(local), penalty);
}

double energy(const QuboProblem &problem, const Assignment &x) {
    if (x.size() != problem.size()) {
        throw std::invalid_argument("assignment has " + std::to_string(x.size()) + " bits, problem has " +
                                    std::to_string(problem.size()) + " variables");
    }
    double linear = 0.0;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) {
            linear += problem.linear()[i];
            on.push_back(i);
        }
    }
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < on.size(); ++a) {
        for (std::size_t b = a + 1; b < on.size(); ++b) {
            pairs += problem.conflict(on[a], on[b]);
        }
    }
    return -linear + problem.penalty() * static_cast<double>(pairs);
}

Assignment solve_exact(const QuboProblem &problem) {
    const std::size_t n = problem.size();
    if (n > kMaxExactVariables) {
        throw ProblemTooLarge("exact solver supports at most " + std::to_string(kMaxExactVariables) +
                              " variables, got " + std::to_string(n));
    }
    std::vector<std::uint32_t> conflict_mask(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (problem.conflict(a, b)) {
                conflict_mask[a] |= std::uint32_t{1} << b;
            }
        }
    }
    auto to_assignment = [n](std::uint32_t bits) {
        Assignment x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = (bits >> i) & 1;
        }
        return x;
    };

    // Gray-code walk with incremental energy; exact recomputation settles
    // every candidate that could beat or tie the incumbent.
    const double m = problem.penalty();
    const auto &b = problem.linear();
    std::uint32_t state = 0;
    double linear = 0.0;
    std::int64_t pairs = 0;
    std::uint32_t best_state = 0;
    double best_energy = 0.0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t step = 1; step < count; ++step) {
        const int k = std::countr_zero(step);
        const std::uint32_t bit = std::uint32_t{1} << k;
        const int overlap = std::popcount(conflict_mask[k] & state);
        if (state & bit) {
            linear -= b[k];
            pairs -= overlap;
        } else {
            linear += b[k];
            pairs += overlap;
        }
        state ^= bit;
        double approx = -linear + m * static_cast<double>(pairs);
        if (approx <= best_energy + 1e-9 * (1.0 + std::abs(best_energy))) {
            double exact = energy(problem, to_assignment(state));
            if (exact < best_energy || (exact == best_energy && state < best_state)) {
                best_energy = exact;
                best_state = state;
            }
        }
    }
    return to_assignment(best_state);
}

std::vector<Index> selected_members(std::span<const Index> active, const Assignment &x) {
    if (x.size() != active.size()) {
        throw std::invalid_argument("assignment length does not match the active set");
    }
    std::vector<Index> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) {
            out.push_back(active[i]);
        }
    }
    return out;
}

std::vector<Index> repair_to_clique(const CommutativityGraph &graph, std::span<const Index> active,
                                   const Assignment &x) {
    std::vector<Index> members = selected_members(active, x);
    std::sort(members.begin(), members.end());
    const std::size_t k = members.size();
    std::vector<std::size_t> conflicts(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            if (!graph.adjacent(members[a], members[b])) {
                ++conflicts[a];
                ++conflicts[b];
            }
        }
    }
    std::vector<bool> alive(k, true);
    while (true) {
        std::size_t worst = k;
        for (std::size_t a = 0; a < k; ++a) {
            // >= so that the larger index wins ties (members are ascending).
            if (alive[a] && conflicts[a] > 0 && (worst == k || conflicts[a] >= conflicts[worst])) {
                worst = a;
            }
        }
        if (worst == k) {
            break;
        }
        alive[worst] = false;
        for (std::size_t a = 0; a < k; ++a) {
            if (alive[a] && !graph.adjacent(members[a], members[worst])) {
                --conflicts[a];
            }
        }
    }
    std::vector<Index> out;
    for (std::size_t a = 0; a < k; ++a) {
        if (alive[a]) {
            out.push_back(members[a]);
        }
    }
    return out;
}

}  // namespace paulipart
