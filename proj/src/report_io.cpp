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

#include "paulipart/report_io.hpp"

#include "paulipart/errors.hpp"

namespace paulipart {

nlohmann::ordered_json report_to_json(const PartitionReport &report) {
    nlohmann::ordered_json j;
    j["algorithm"] = report.algorithm;
    j["mode"] = std::string(to_string(report.mode));
    j["n_strings"] = report.n_strings;
    j["n_bit"] = report.n_bit ? nlohmann::ordered_json(*report.n_bit) : nlohmann::ordered_json(nullptr);
    j["n_partitions"] = report.partitions.size();
    j["relative_dimension"] = report.relative_dimension;
    j["reduction_factor"] = report.reduction_factor;
    auto g = report.gamma();
    j["gamma"] = g ? nlohmann::ordered_json(*g) : nlohmann::ordered_json(nullptr);
    j["solver_calls"] = report.solver_calls;
    j["two_pass_fraction"] = report.two_pass_fraction;
    j["refinement_fallbacks"] = report.refinement_fallbacks;
    j["wall_seconds"] = report.wall_seconds;
    j["per_call_durations"] = report.per_call_durations;
    j["per_partition_sizes"] = report.per_partition_sizes;
    auto d_sizes = nlohmann::ordered_json::array();
    for (const auto &d : report.per_partition_d_sizes) {
        d_sizes.push_back(d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr));
    }
    j["per_partition_d_sizes"] = std::move(d_sizes);
    auto parts = nlohmann::ordered_json::array();
    for (const auto &p : report.partitions) {
        parts.push_back(p.members);
    }
    j["partitions"] = std::move(parts);
    return j;
}

namespace {

const nlohmann::json &field(const nlohmann::json &doc, const char *key) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        throw ParseError(std::string("report is missing '") + key + "'");
    }
    return *it;
}

template <typename T>
T get(const nlohmann::json &doc, const char *key) {
    try {
        return field(doc, key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("report field '") + key + "': " + e.what());
    }
}

}  // namespace

PartitionReport report_from_json(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw ParseError("report is not a JSON object");
    }
    PartitionReport r;
    r.algorithm = get<std::string>(doc, "algorithm");
    r.mode = parse_mode(get<std::string>(doc, "mode"));
    r.n_strings = get<std::size_t>(doc, "n_strings");
    if (!field(doc, "n_bit").is_null()) {
        r.n_bit = get<std::size_t>(doc, "n_bit");
    }
    r.relative_dimension = get<double>(doc, "relative_dimension");
    r.reduction_factor = get<double>(doc, "reduction_factor");
    r.solver_calls = get<std::size_t>(doc, "solver_calls");
    r.two_pass_fraction = get<double>(doc, "two_pass_fraction");
    r.refinement_fallbacks = get<std::size_t>(doc, "refinement_fallbacks");
    r.wall_seconds = get<double>(doc, "wall_seconds");
    r.per_call_durations = get<std::vector<double>>(doc, "per_call_durations");
    r.per_partition_sizes = get<std::vector<std::size_t>>(doc, "per_partition_sizes");
    const auto &d_sizes = field(doc, "per_partition_d_sizes");
    if (!d_sizes.is_array()) {
        throw ParseError("report field 'per_partition_d_sizes' is not an array");
    }
    for (const auto &d : d_sizes) {
        if (d.is_null()) {
            r.per_partition_d_sizes.push_back(std::nullopt);
        } else if (d.is_number_unsigned()) {
            r.per_partition_d_sizes.push_back(d.get<std::size_t>());
        } else {
            throw ParseError("report field 'per_partition_d_sizes' has a non-integer entry");
        }
    }
    for (const auto &members : get<std::vector<std::vector<Index>>>(doc, "partitions")) {
        r.partitions.push_back(Partition{members});
    }
    return r;
}

}  // namespace paulipart
