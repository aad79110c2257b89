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

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "paulipart/errors.hpp"
#include "paulipart/qubo.hpp"

namespace paulipart {

std::string_view to_string(SolverKind kind) {
    return kind == SolverKind::exact ? "exact" : "anneal";
}

SolverKind parse_solver(std::string_view text) {
    if (text == "exact") {
        return SolverKind::exact;
    }
    if (text == "anneal") {
        return SolverKind::anneal;
    }
    throw ParseError("unknown solver '" + std::string(text) + "' (expected exact or anneal)");
}

void PartitionConfig::validate() const {
    if (n_bit < 1) {
        throw std::invalid_argument("n_bit must be >= 1");
    }
    if (r < 1) {
        throw std::invalid_argument("r must be >= 1");
    }
    if (!(m > 1.0)) {
        throw std::invalid_argument("m must be > 1");
    }
    anneal.validate();
}

double relative_dimension(std::size_t n_strings, std::size_t n_bit) {
    if (n_bit == 0) {
        throw std::invalid_argument("n_bit must be >= 1");
    }
    return n_strings > n_bit ? static_cast<double>(n_strings) / static_cast<double>(n_bit) : 1.0;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct WindowSolve {
    std::vector<Index> clique;
    double seconds;
};

WindowSolve solve_window(const CommutativityGraph &graph, std::span<const Index> active, const PartitionConfig &config,
                         std::uint64_t call_index) {
    auto start = std::chrono::steady_clock::now();
    QuboProblem problem = build_qubo(graph, active, config.m);
    Assignment x;
    if (config.solver == SolverKind::exact) {
        x = solve_exact(problem);
    } else {
        AnnealParams params = config.anneal;
        params.seed = splitmix64(config.anneal.seed ^ splitmix64(call_index));
        x = solve_anneal(problem, params);
    }
    std::vector<Index> clique = repair_to_clique(graph, active, x);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return {std::move(clique), elapsed.count()};
}

}  // namespace

Extraction extract_partition(const CommutativityGraph &graph, std::span<const Index> remaining,
                             const PartitionConfig &config, std::uint64_t call_index) {
    if (remaining.empty()) {
        throw std::invalid_argument("nothing left to partition");
    }
    Extraction out;
    std::vector<Index> pool(remaining.begin(), remaining.end());
    std::sort(pool.begin(), pool.end());

    auto solve = [&](std::span<const Index> active) {
        WindowSolve w = solve_window(graph, active, config, call_index + out.solver_calls);
        ++out.solver_calls;
        out.call_seconds.push_back(w.seconds);
        return std::move(w.clique);
    };

    std::vector<Index> result;
    if (pool.size() <= config.n_bit) {
        result = solve(pool);
    } else {
        out.two_pass = true;
        std::vector<Index> window(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(config.n_bit));
        std::vector<Index> d = solve(window);
        out.d_size = d.size();
        for (unsigned pass = 0; pass < config.r; ++pass) {
            std::vector<std::int32_t> commuting = count_commuting_all(graph, d);
            std::vector<std::uint8_t> in_d(graph.size(), 0);
            for (Index i : d) {
                in_d[i] = 1;
            }
            std::vector<Index> ranked = pool;
            std::sort(ranked.begin(), ranked.end(), [&](Index a, Index b) {
                if (commuting[a] != commuting[b]) {
                    return commuting[a] > commuting[b];
                }
                if (in_d[a] != in_d[b]) {
                    return in_d[a] > in_d[b];
                }
                return a < b;
            });
            ranked.resize(config.n_bit);
            std::vector<Index> candidate = solve(ranked);
            if (candidate.size() >= d.size()) {
                d = std::move(candidate);
            } else {
                out.fallback_used = true;
            }
        }
        result = std::move(d);
    }
    if (result.empty()) {
        result = {pool.front()};
    }
    std::sort(result.begin(), result.end());
    out.partition.members = std::move(result);
    return out;
}

PartitionReport partition_all(const CommutativityGraph &graph, const PartitionConfig &config) {
    config.validate();
    auto start = std::chrono::steady_clock::now();
    PartitionReport report;
    report.algorithm = "ising";
    report.mode = graph.mode();
    report.n_strings = graph.size();
    report.n_bit = config.n_bit;

    std::vector<Index> remaining(graph.size());
    for (Index i = 0; i < remaining.size(); ++i) {
        remaining[i] = i;
    }
    std::vector<std::uint8_t> taken(graph.size(), 0);
    while (!remaining.empty()) {
        Extraction e = extract_partition(graph, remaining, config, report.solver_calls);
        report.solver_calls += e.solver_calls;
        report.refinement_fallbacks += e.fallback_used;
        report.per_call_durations.insert(report.per_call_durations.end(), e.call_seconds.begin(),
                                         e.call_seconds.end());
        report.per_partition_d_sizes.push_back(e.d_size);
        for (Index i : e.partition.members) {
            taken[i] = 1;
        }
        std::erase_if(remaining, [&](Index i) { return taken[i] != 0; });
        report.partitions.push_back(std::move(e.partition));
    }
    finalize_metrics(report);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.wall_seconds = elapsed.count();
    return report;
}

PartitionReport partition_all(const ObservableSet &set, const PartitionConfig &config) {
    config.validate();
    auto start = std::chrono::steady_clock::now();
    CommutativityGraph graph = CommutativityGraph::build(set, config.mode, config.graph_threads);
    PartitionReport report = partition_all(graph, config);
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.wall_seconds = elapsed.count();
    return report;
}

}  // namespace paulipart
