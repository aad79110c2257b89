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

#include "paulipart/baselines.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <stdexcept>

#include "paulipart/errors.hpp"
#include "paulipart/simd/kernels.hpp"

namespace paulipart {

namespace {

class RamseySearch {
   public:
    RamseySearch(const CommutativityGraph &graph, std::uint64_t seed) : graph_(graph), rng_(seed) {}

    // The anticommuting branch is unrolled into a loop so the recursion depth
    // is bounded by the clique size rather than by |subset|.
    std::vector<Index> run(std::vector<Index> subset) {
        std::vector<Index> best;
        while (!subset.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, subset.size() - 1);
            Index pivot = subset[pick(rng_)];
            std::vector<Index> commuting;
            std::vector<Index> rest;
            for (Index i : subset) {
                if (i == pivot) {
                    continue;
                }
                (graph_.adjacent(pivot, i) ? commuting : rest).push_back(i);
            }
            std::vector<Index> with_pivot = run(std::move(commuting));
            with_pivot.push_back(pivot);
            if (with_pivot.size() > best.size()) {
                best = std::move(with_pivot);
            }
            subset = std::move(rest);
        }
        return best;
    }

   private:
    const CommutativityGraph &graph_;
    std::mt19937_64 rng_;
};

std::vector<Index> checked_subset(const CommutativityGraph &graph, std::span<const Index> subset) {
    std::vector<Index> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("subset contains a duplicate index");
    }
    if (!sorted.empty() && sorted.back() >= graph.size()) {
        throw std::out_of_range("subset index " + std::to_string(sorted.back()) + " out of range");
    }
    return sorted;
}

using Bits = std::vector<std::uint64_t>;

class MaxCliqueSearch {
   public:
    MaxCliqueSearch(const CommutativityGraph &graph, const std::vector<Index> &nodes, std::uint64_t budget)
        : nodes_(nodes), n_(nodes.size()), words_((n_ + 63) / 64), budget_(budget), adj_(n_ * words_) {
        const auto &k = simd::kernels();
        for (std::size_t a = 0; a < n_; ++a) {
            k.gather_bits(graph.row(nodes[a]).data(), nodes.data(), n_, &adj_[a * words_]);
        }
    }

    std::vector<Index> run() {
        Bits p(words_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            p[i >> 6] |= std::uint64_t{1} << (i & 63);
        }
        Bits x(words_, 0);
        std::vector<std::uint32_t> r;
        expand(r, p, x);
        std::vector<Index> out;
        for (std::uint32_t local : best_) {
            out.push_back(nodes_[local]);
        }
        return out;
    }

   private:
    const std::uint64_t *row(std::size_t a) const { return &adj_[a * words_]; }

    std::size_t count(const Bits &s) const {
        std::size_t c = 0;
        for (auto w : s) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    void expand(std::vector<std::uint32_t> &r, Bits &p, Bits &x) {
        if (++expanded_ > budget_) {
            throw BudgetExceeded("Bron-Kerbosch exceeded its budget of " + std::to_string(budget_) +
                                 " node expansions");
        }
        const std::size_t p_size = count(p);
        if (p_size == 0) {
            if (count(x) == 0) {
                offer(r);
            }
            return;
        }
        if (r.size() + p_size < best_.size()) {
            return;
        }
        const auto &k = simd::kernels();
        std::size_t pivot = 0;
        std::uint64_t pivot_score = 0;
        bool have_pivot = false;
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t candidates = p[w] | x[w];
            while (candidates) {
                std::size_t u = w * 64 + static_cast<std::size_t>(std::countr_zero(candidates));
                candidates &= candidates - 1;
                std::uint64_t score = k.and_popcount(p.data(), row(u), words_);
                if (!have_pivot || score > pivot_score) {
                    pivot = u;
                    pivot_score = score;
                    have_pivot = true;
                }
            }
        }
        Bits branch(words_);
        for (std::size_t w = 0; w < words_; ++w) {
            branch[w] = p[w] & ~row(pivot)[w];
        }
        Bits next_p(words_);
        Bits next_x(words_);
        for (std::size_t w = 0; w < words_; ++w) {
            while (branch[w]) {
                std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(branch[w]));
                branch[w] &= branch[w] - 1;
                for (std::size_t i = 0; i < words_; ++i) {
                    next_p[i] = p[i] & row(v)[i];
                    next_x[i] = x[i] & row(v)[i];
                }
                r.push_back(static_cast<std::uint32_t>(v));
                expand(r, next_p, next_x);
                r.pop_back();
                p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
                x[v >> 6] |= std::uint64_t{1} << (v & 63);
            }
        }
    }

    void offer(const std::vector<std::uint32_t> &r) {
        if (r.size() < best_.size()) {
            return;
        }
        std::vector<std::uint32_t> sorted = r;
        std::sort(sorted.begin(), sorted.end());
        if (sorted.size() > best_.size() || sorted < best_) {
            best_ = std::move(sorted);
        }
    }

    const std::vector<Index> &nodes_;
    std::size_t n_;
    std::size_t words_;
    std::uint64_t budget_;
    std::uint64_t expanded_ = 0;
    Bits adj_;
    std::vector<std::uint32_t> best_;
};

template <typename Extract>
PartitionReport iterate_extraction(const CommutativityGraph &graph, const char *algorithm, Extract extract) {
    if (graph.size() == 0) {
        throw std::invalid_argument("cannot partition an empty graph");
    }
    auto start = std::chrono::steady_clock::now();
    PartitionReport report;
    report.algorithm = algorithm;
    report.mode = graph.mode();
    report.n_strings = graph.size();

    std::vector<Index> remaining(graph.size());
    for (Index i = 0; i < remaining.size(); ++i) {
        remaining[i] = i;
    }
    std::vector<std::uint8_t> taken(graph.size(), 0);
    while (!remaining.empty()) {
        auto call_start = std::chrono::steady_clock::now();
        std::vector<Index> clique = extract(remaining, report.solver_calls);
        std::chrono::duration<double> call = std::chrono::steady_clock::now() - call_start;
        ++report.solver_calls;
        report.per_call_durations.push_back(call.count());
        if (clique.empty()) {
            clique = {remaining.front()};
        }
        std::sort(clique.begin(), clique.end());
        for (Index i : clique) {
            taken[i] = 1;
        }
        std::erase_if(remaining, [&](Index i) { return taken[i] != 0; });
        report.per_partition_d_sizes.push_back(std::nullopt);
        report.partitions.push_back(Partition{std::move(clique)});
    }
    finalize_metrics(report);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.wall_seconds = elapsed.count();
    return report;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::vector<Index> ramsey(const CommutativityGraph &graph, std::span<const Index> subset, std::uint64_t rng_seed) {
    std::vector<Index> members = checked_subset(graph, subset);
    RamseySearch search(graph, rng_seed);
    std::vector<Index> clique = search.run(std::move(members));
    std::sort(clique.begin(), clique.end());
    return clique;
}

PartitionReport boppana_halldorsson_partition(const CommutativityGraph &graph, std::uint64_t rng_seed) {
    return iterate_extraction(graph, "boppana_halldorsson", [&](const std::vector<Index> &remaining, std::size_t k) {
        RamseySearch search(graph, splitmix64(rng_seed ^ splitmix64(k)));
        return search.run(remaining);
    });
}

std::vector<Index> bron_kerbosch_max_clique(const CommutativityGraph &graph, std::span<const Index> subset,
                                            std::uint64_t budget) {
    std::vector<Index> nodes = checked_subset(graph, subset);
    if (nodes.empty()) {
        return {};
    }
    MaxCliqueSearch search(graph, nodes, budget);
    return search.run();
}

PartitionReport bron_kerbosch_partition(const CommutativityGraph &graph, std::uint64_t budget) {
    return iterate_extraction(graph, "bron_kerbosch", [&](const std::vector<Index> &remaining, std::size_t) {
        MaxCliqueSearch search(graph, remaining, budget);
        return search.run();
    });
}

}  // namespace paulipart
