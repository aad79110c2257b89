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

#include "paulipart/commutativity_graph.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "paulipart/simd/kernels.hpp"

namespace paulipart {

CommutativityGraph CommutativityGraph::build(const ObservableSet &set, CommutativityMode mode, unsigned threads) {
    const std::size_t n = set.size();
    BitMatrix adjacency(n, n);
    const simd::MaskColumns cols = set.columns();
    const simd::KernelTable &k = simd::kernels();
    const bool qwc = mode == CommutativityMode::qwc;

    auto build_rows = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const PauliString &p = set[i];
            auto row = adjacency.row(i);
            k.commute_row(cols, p.x_words().data(), p.z_words().data(), qwc, row.data());
            row[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 256)));
    if (threads <= 1) {
        build_rows(0, n);
    } else {
        std::vector<std::jthread> workers;
        std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t begin = 0; begin < n; begin += chunk) {
            workers.emplace_back(build_rows, begin, std::min(n, begin + chunk));
        }
    }
    return CommutativityGraph(std::move(adjacency), mode);
}

CommutativityGraph CommutativityGraph::from_edges(std::size_t n_nodes, std::span<const std::pair<Index, Index>> edges,
                                                  CommutativityMode mode) {
    BitMatrix adjacency(n_nodes, n_nodes);
    for (auto [a, b] : edges) {
        if (a >= n_nodes || b >= n_nodes) {
            throw std::out_of_range("edge endpoint out of range");
        }
        if (a == b) {
            continue;
        }
        adjacency.set(a, b, true);
        adjacency.set(b, a, true);
    }
    return CommutativityGraph(std::move(adjacency), mode);
}

std::size_t CommutativityGraph::degree(Index i) const {
    std::size_t d = 0;
    for (auto w : row(i)) {
        d += static_cast<std::size_t>(std::popcount(w));
    }
    return d;
}

std::size_t CommutativityGraph::edge_count() const {
    std::size_t total = 0;
    for (Index i = 0; i < size(); ++i) {
        total += degree(i);
    }
    return total / 2;
}

void CommutativityGraph::write_edge_list(std::ostream &out) const {
    for (Index i = 0; i < size(); ++i) {
        for (Index j = i + 1; j < size(); ++j) {
            if (adjacent(i, j)) {
                out << i << ' ' << j << '\n';
            }
        }
    }
}

namespace {

void check_index(const CommutativityGraph &graph, Index i) {
    if (i >= graph.size()) {
        throw std::out_of_range("node index " + std::to_string(i) + " out of range for " +
                                std::to_string(graph.size()) + " nodes");
    }
}

}  // namespace

bool is_clique(const CommutativityGraph &graph, std::span<const Index> members) {
    for (Index m : members) {
        check_index(graph, m);
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (!graph.adjacent(members[a], members[b])) {
                return false;
            }
        }
    }
    return true;
}

std::size_t count_commuting(const CommutativityGraph &graph, Index j, std::span<const Index> subset) {
    check_index(graph, j);
    std::size_t count = 0;
    for (Index i : subset) {
        check_index(graph, i);
        if (i == j || graph.adjacent(i, j)) {
            ++count;
        }
    }
    return count;
}

std::vector<std::int32_t> count_commuting_all(const CommutativityGraph &graph, std::span<const Index> subset) {
    std::vector<std::int32_t> counts(graph.size(), 0);
    const simd::KernelTable &k = simd::kernels();
    for (Index d : subset) {
        check_index(graph, d);
        k.accumulate_bits(counts.data(), graph.row(d).data(), graph.size(), 1);
        counts[d] += 1;
    }
    return counts;
}

}  // namespace paulipart
