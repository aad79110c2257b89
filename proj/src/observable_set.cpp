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

#include "paulipart/observable_set.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "paulipart/errors.hpp"

namespace paulipart {

ObservableSet::ObservableSet(std::size_t n_qubits, std::vector<Term> terms, std::string source_label)
    : n_qubits_(n_qubits), terms_(std::move(terms)), source_label_(std::move(source_label)) {
    if (terms_.empty()) {
        throw std::invalid_argument("no terms");
    }
    std::unordered_map<PauliString, std::size_t> seen;
    seen.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const PauliString &p = terms_[i].string;
        if (p.n_qubits() != n_qubits_) {
            throw std::invalid_argument("term " + std::to_string(i) + " acts on " + std::to_string(p.n_qubits()) +
                                        " qubits, expected " + std::to_string(n_qubits_));
        }
        if (p.is_identity()) {
            throw std::invalid_argument("term " + std::to_string(i) + " is the identity");
        }
        auto [it, inserted] = seen.emplace(p, i);
        if (!inserted) {
            throw std::invalid_argument("term " + std::to_string(i) + " duplicates term " + std::to_string(it->second) +
                                        " (" + p.str_dense() + ")");
        }
    }
    const std::size_t n = terms_.size();
    const std::size_t words = terms_[0].string.num_words();
    x_columns_.assign(words * n, 0);
    z_columns_.assign(words * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t w = 0; w < words; ++w) {
            x_columns_[w * n + i] = terms_[i].string.x_words()[w];
            z_columns_[w * n + i] = terms_[i].string.z_words()[w];
        }
    }
}

simd::MaskColumns ObservableSet::columns() const {
    return {x_columns_.data(), z_columns_.data(), terms_.size(), terms_.size(), terms_[0].string.num_words()};
}

std::uint64_t tomography_key(const PauliString &p) {
    const std::size_t n = p.n_qubits();
    if (n > 30) {
        throw std::invalid_argument("tomography_key overflows beyond 30 qubits");
    }
    std::uint64_t key = 0;
    for (std::size_t q = 0; q < n; ++q) {
        std::uint64_t digit = 0;
        switch (p.letter(q)) {
            case 'X': digit = 1; break;
            case 'Y': digit = 2; break;
            case 'Z': digit = 3; break;
            default: break;
        }
        key += digit << (2 * (n - q));
    }
    return key;
}

ObservableSet gen_full_tomography(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxTomographyQubits) {
        throw std::invalid_argument("full tomography needs 1 <= n <= " + std::to_string(kMaxTomographyQubits));
    }
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    const std::uint64_t count = std::uint64_t{1} << (2 * n_qubits);
    std::vector<Term> terms;
    terms.reserve(count - 1);
    // Counting in base 4 with qubit 0 as the most significant digit visits
    // the strings in ascending tomography_key order (key = 4 * counter).
    for (std::uint64_t k = 1; k < count; ++k) {
        PauliString p(n_qubits);
        for (std::size_t q = 0; q < n_qubits; ++q) {
            p.set_letter(q, kLetters[(k >> (2 * (n_qubits - 1 - q))) & 3]);
        }
        terms.push_back({1.0, std::move(p)});
    }
    return ObservableSet(n_qubits, std::move(terms), "tomography-" + std::to_string(n_qubits));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_dense_token(std::string_view token) {
    if (token.empty()) {
        return false;
    }
    for (char c : token) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            return false;
        }
    }
    return true;
}

}  // namespace

ObservableSet parse_observables(std::string_view content, std::string source_label) {
    std::size_t n_qubits = 0;
    bool have_header = false;
    std::vector<Term> terms;
    std::unordered_map<PauliString, std::size_t> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t end = content.find('\n', pos);
        if (end == std::string_view::npos) {
            end = content.size();
        }
        std::string_view line = trim(content.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (line.starts_with("qubits:")) {
            if (have_header || !terms.empty()) {
                throw ParseError("'qubits:' header must appear once, before any term", line_no);
            }
            std::string_view value = trim(line.substr(7));
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n_qubits);
            if (ec != std::errc{} || ptr != value.data() + value.size() || n_qubits == 0) {
                throw ParseError("malformed qubit count '" + std::string(value) + "'", line_no);
            }
            have_header = true;
            continue;
        }

        std::size_t split = 0;
        while (split < line.size() && !std::isspace(static_cast<unsigned char>(line[split]))) {
            ++split;
        }
        std::string_view weight_text = line.substr(0, split);
        std::string_view term_text = trim(line.substr(split));
        double weight = 0.0;
        auto [ptr, ec] = std::from_chars(weight_text.data(), weight_text.data() + weight_text.size(), weight);
        if (ec != std::errc{} || ptr != weight_text.data() + weight_text.size()) {
            throw ParseError("malformed weight '" + std::string(weight_text) + "'", line_no);
        }

        bool dense = is_dense_token(term_text);
        if (dense && n_qubits == 0) {
            n_qubits = term_text.size();
        }
        if (!dense && !have_header) {
            if (term_text.empty()) {
                throw ParseError("identity term", line_no);
            }
            throw ParseError("sparse terms require a 'qubits: <n>' header", line_no);
        }
        PauliString p = [&] {
            try {
                return parse_pauli(term_text, n_qubits);
            } catch (const ParseError &e) {
                throw ParseError(e.what(), line_no);
            }
        }();
        if (p.is_identity()) {
            throw ParseError("identity term", line_no);
        }
        auto [it, inserted] = seen.emplace(p, line_no);
        if (!inserted) {
            throw ParseError("duplicate string " + p.str_dense() + " (first seen on line " +
                                 std::to_string(it->second) + ")",
                             line_no);
        }
        terms.push_back({weight, std::move(p)});
    }
    if (terms.empty()) {
        throw ParseError("no terms");
    }
    return ObservableSet(n_qubits, std::move(terms), std::move(source_label));
}

ObservableSet load_observable_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_observables(buffer.str(), path.filename().string());
}

std::string format_weight(double weight) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), weight);
    std::string text(buf, ptr);
    if (text.find_first_of(".ein") == std::string::npos) {
        text += ".0";
    }
    return text;
}

void write_observables(const ObservableSet &set, std::ostream &out) {
    for (const Term &t : set.terms()) {
        out << format_weight(t.weight) << ' ' << t.string.str_dense() << '\n';
    }
}

}  // namespace paulipart
