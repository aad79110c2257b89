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

#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>

#include "paulipart/errors.hpp"

namespace paulipart::cli {

std::string_view to_string(Algorithm algo) {
    switch (algo) {
        case Algorithm::ising:
            return "ising";
        case Algorithm::bh:
            return "bh";
        case Algorithm::bk:
            return "bk";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view text) {
    if (text == "ising") {
        return Algorithm::ising;
    }
    if (text == "bh") {
        return Algorithm::bh;
    }
    if (text == "bk") {
        return Algorithm::bk;
    }
    throw ParseError("unknown algorithm '" + std::string(text) + "' (expected ising, bh or bk)");
}

void RunSettings::resolve() {
    if (m_given && !t_start_given) {
        partition.anneal.t_start = 2.0 * partition.m;
        if (partition.anneal.t_start < partition.anneal.t_end) {
            partition.anneal.t_start = partition.anneal.t_end;
        }
    }
    partition.validate();
    if (budget == 0) {
        throw std::invalid_argument("budget must be >= 1");
    }
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("invalid value '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1") {
        return true;
    }
    if (text == "false" || text == "0") {
        return false;
    }
    throw ParseError("invalid value '" + std::string(text) + "' for " + std::string(key));
}

}  // namespace

void apply_setting(RunSettings &s, std::string_view section, std::string_view key, std::string_view value) {
    auto &a = s.partition.anneal;
    auto &p = s.partition;
    std::string name = std::string(section) + "." + std::string(key);
    if (section == "anneal") {
        if (key == "mc_steps") {
            a.mc_steps = parse_number<std::uint64_t>(name, value);
        } else if (key == "t_start") {
            a.t_start = parse_number<double>(name, value);
            s.t_start_given = true;
        } else if (key == "t_end") {
            a.t_end = parse_number<double>(name, value);
        } else if (key == "offset_increment") {
            a.offset_increment = parse_number<double>(name, value);
        } else if (key == "seed") {
            a.seed = parse_number<std::uint64_t>(name, value);
        } else if (key == "restarts") {
            a.restarts = parse_number<unsigned>(name, value);
        } else if (key == "parallel_restarts") {
            a.parallel_restarts = parse_bool(name, value);
        } else {
            throw ParseError("unknown setting " + name);
        }
    } else if (section == "partition") {
        if (key == "algo") {
            s.algo = parse_algorithm(value);
        } else if (key == "n_bit") {
            p.n_bit = parse_number<std::size_t>(name, value);
        } else if (key == "m") {
            p.m = parse_number<double>(name, value);
            s.m_given = true;
        } else if (key == "r") {
            p.r = parse_number<unsigned>(name, value);
        } else if (key == "solver") {
            p.solver = parse_solver(value);
        } else if (key == "mode") {
            p.mode = parse_mode(value);
        } else if (key == "budget") {
            s.budget = parse_number<std::uint64_t>(name, value);
        } else {
            throw ParseError("unknown setting " + name);
        }
    } else {
        throw ParseError("unknown config section [" + std::string(section) + "]");
    }
}

void apply_config_file(RunSettings &settings, const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read config file " + path.string());
    }
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error &e) {
        throw ParseError(path.string() + ": " + e.message(), e.line());
    }
    for (const auto &[section, entries] : tree) {
        if (entries.empty()) {
            throw ParseError(path.string() + ": setting '" + section + "' is outside any section");
        }
        for (const auto &[key, node] : entries) {
            apply_setting(settings, section, key, node.data());
        }
    }
}

nlohmann::ordered_json settings_snapshot(const RunSettings &s) {
    const auto &p = s.partition;
    const auto &a = p.anneal;
    nlohmann::ordered_json j;
    j["algo"] = std::string(to_string(s.algo));
    j["mode"] = std::string(to_string(p.mode));
    if (s.algo == Algorithm::ising) {
        j["n_bit"] = p.n_bit;
        j["m"] = p.m;
        j["r"] = p.r;
        j["solver"] = std::string(to_string(p.solver));
        if (p.solver == SolverKind::anneal) {
            j["anneal"] = {{"mc_steps", a.mc_steps},   {"t_start", a.t_start},
                           {"t_end", a.t_end},         {"offset_increment", a.offset_increment},
                           {"seed", a.seed},           {"restarts", a.restarts}};
        }
    } else if (s.algo == Algorithm::bh) {
        j["seed"] = a.seed;
    } else {
        j["budget"] = s.budget == kUnlimitedBudget ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(s.budget);
    }
    return j;
}

}  // namespace paulipart::cli
