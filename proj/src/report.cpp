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

#include "paulipart/report.hpp"

#include <cmath>

#include "paulipart/partitioner.hpp"

namespace paulipart {

std::optional<double> PartitionReport::gamma() const {
    if (!n_bit || *n_bit == 0) {
        return std::nullopt;
    }
    return reduction_factor / static_cast<double>(*n_bit);
}

std::size_t PartitionReport::two_pass_count() const {
    std::size_t count = 0;
    for (const auto &d : per_partition_d_sizes) {
        count += d.has_value();
    }
    return count;
}

std::optional<std::string> check_exact_cover(std::size_t n_strings, const std::vector<Partition> &partitions) {
    std::vector<std::size_t> owner(n_strings, partitions.size());
    for (std::size_t p = 0; p < partitions.size(); ++p) {
        if (partitions[p].members.empty()) {
            return "partition " + std::to_string(p) + " is empty";
        }
        for (Index i : partitions[p].members) {
            if (i >= n_strings) {
                return "partition " + std::to_string(p) + " contains index " + std::to_string(i) +
                       " outside 0.." + std::to_string(n_strings - 1);
            }
            if (owner[i] != partitions.size()) {
                return "index " + std::to_string(i) + " appears in partition " + std::to_string(owner[i]) +
                       " and partition " + std::to_string(p);
            }
            owner[i] = p;
        }
    }
    for (std::size_t i = 0; i < n_strings; ++i) {
        if (owner[i] == partitions.size()) {
            return "index " + std::to_string(i) + " is not covered";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_cliques(const CommutativityGraph &graph, const std::vector<Partition> &partitions) {
    for (std::size_t p = 0; p < partitions.size(); ++p) {
        const auto &m = partitions[p].members;
        for (Index i : m) {
            if (i >= graph.size()) {
                return "partition " + std::to_string(p) + " contains index " + std::to_string(i) + " out of range";
            }
        }
        for (std::size_t a = 0; a < m.size(); ++a) {
            for (std::size_t b = a + 1; b < m.size(); ++b) {
                if (!graph.adjacent(m[a], m[b])) {
                    return "partition " + std::to_string(p) + " is not a clique: strings " + std::to_string(m[a]) +
                           " and " + std::to_string(m[b]) + " do not commute";
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

bool close(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

}  // namespace

std::optional<std::string> validate_report(const PartitionReport &report, const CommutativityGraph &graph) {
    if (report.n_strings != graph.size()) {
        return "report covers " + std::to_string(report.n_strings) + " strings, input has " +
               std::to_string(graph.size());
    }
    if (auto err = check_exact_cover(report.n_strings, report.partitions)) {
        return err;
    }
    if (auto err = check_cliques(graph, report.partitions)) {
        return err;
    }
    const std::size_t n_parts = report.partitions.size();
    if (report.per_partition_sizes.size() != n_parts) {
        return std::string("per_partition_sizes length does not match the partition count");
    }
    for (std::size_t p = 0; p < n_parts; ++p) {
        if (report.per_partition_sizes[p] != report.partitions[p].members.size()) {
            return "per_partition_sizes[" + std::to_string(p) + "] = " + std::to_string(report.per_partition_sizes[p]) +
                   " but the partition has " + std::to_string(report.partitions[p].members.size()) + " members";
        }
    }
    double f = static_cast<double>(report.n_strings) / static_cast<double>(n_parts);
    if (!close(report.reduction_factor, f)) {
        return "reduction_factor " + std::to_string(report.reduction_factor) + " != N / partitions = " +
               std::to_string(f);
    }
    if (!report.per_partition_d_sizes.empty() && report.per_partition_d_sizes.size() != n_parts) {
        return std::string("per_partition_d_sizes length does not match the partition count");
    }
    double s = static_cast<double>(report.two_pass_count()) / static_cast<double>(n_parts);
    if (!close(report.two_pass_fraction, s) || report.two_pass_fraction < 0.0 || report.two_pass_fraction > 1.0) {
        return "two_pass_fraction " + std::to_string(report.two_pass_fraction) + " inconsistent with d-sizes (" +
               std::to_string(s) + ")";
    }
    if (report.n_bit) {
        const std::size_t n_bit = *report.n_bit;
        if (!close(report.relative_dimension, relative_dimension(report.n_strings, n_bit))) {
            return "relative dimension " + std::to_string(report.relative_dimension) + " != " +
                   std::to_string(relative_dimension(report.n_strings, n_bit));
        }
        for (std::size_t p = 0; p < n_parts; ++p) {
            if (report.partitions[p].members.size() > n_bit) {
                return "partition " + std::to_string(p) + " exceeds the capacity n_bit = " + std::to_string(n_bit);
            }
        }
        if (*report.gamma() > 1.0 + 1e-12) {
            return std::string("gamma exceeds 1");
        }
    }
    return std::nullopt;
}

void finalize_metrics(PartitionReport &report) {
    report.per_partition_sizes.clear();
    for (const auto &p : report.partitions) {
        report.per_partition_sizes.push_back(p.members.size());
    }
    const double parts = static_cast<double>(report.partitions.size());
    report.reduction_factor = parts > 0 ? static_cast<double>(report.n_strings) / parts : 0.0;
    report.two_pass_fraction = parts > 0 ? static_cast<double>(report.two_pass_count()) / parts : 0.0;
    report.relative_dimension = report.n_bit ? relative_dimension(report.n_strings, *report.n_bit) : 1.0;
}

}  // namespace paulipart
