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
#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "paulipart/baselines.hpp"
#include "paulipart/partitioner.hpp"

namespace paulipart::cli {

enum class Algorithm { ising, bh, bk };

std::string_view to_string(Algorithm algo);
Algorithm parse_algorithm(std::string_view text);

/// Everything a run needs besides its input. Values are layered: built-in
/// defaults, then the config file, then command-line flags.
struct RunSettings {
    Algorithm algo = Algorithm::ising;
    PartitionConfig partition;
    std::uint64_t budget = kUnlimitedBudget;

    /// Set when m or t_start were given explicitly, so that resolve() can
    /// derive t_start = 2m when only m was.
    bool m_given = false;
    bool t_start_given = false;

    /// Applies derived defaults and validates; throws std::invalid_argument.
    void resolve();
};

/// Reads an INI file with sections [anneal] (mc_steps, t_start, t_end,
/// offset_increment, seed, restarts, parallel_restarts) and [partition]
/// (algo, n_bit, m, r, solver, mode, budget). Unknown sections or keys and
/// malformed values throw ParseError; an unreadable file throws
/// std::runtime_error.
void apply_config_file(RunSettings &settings, const std::filesystem::path &path);

/// Applies one `key = value` setting from the given section.
void apply_setting(RunSettings &settings, std::string_view section, std::string_view key, std::string_view value);

/// Effective settings, for the report manifest.
nlohmann::ordered_json settings_snapshot(const RunSettings &settings);

}  // namespace paulipart::cli
