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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "paulipart/pauli.hpp"
#include "paulipart/simd/kernels.hpp"

namespace paulipart {

struct Term {
    double weight = 1.0;
    PauliString string;
};

/// An ordered list of weighted, distinct, non-identity Pauli strings on a
/// common number of qubits. List position is the string's index everywhere
/// else in the library. Weights are carried for reporting only.
class ObservableSet {
   public:
    /// Throws std::invalid_argument on an empty list, a duplicate string, an
    /// identity string or a string on the wrong number of qubits.
    ObservableSet(std::size_t n_qubits, std::vector<Term> terms, std::string source_label = {});

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term> &terms() const { return terms_; }
    const PauliString &operator[](std::size_t index) const { return terms_[index].string; }
    const std::string &source_label() const { return source_label_; }

    /// Word-major mask columns for the SIMD kernels; valid while *this lives.
    simd::MaskColumns columns() const;

   private:
    std::size_t n_qubits_;
    std::vector<Term> terms_;
    std::string source_label_;
    std::vector<std::uint64_t> x_columns_;
    std::vector<std::uint64_t> z_columns_;
};

/// Ordering key of the full-tomography set: sum over qubit labels q of
/// p(q) * 4^(n - q) with p = 0, 1, 2, 3 for I, X, Y, Z.
std::uint64_t tomography_key(const PauliString &p);

inline constexpr std::size_t kMaxTomographyQubits = 8;

/// All 4^n - 1 non-identity strings on n qubits, unit weights, in ascending
/// tomography_key order. 1 <= n <= kMaxTomographyQubits.
ObservableSet gen_full_tomography(std::size_t n_qubits);

/// Parses the observable text format:
///   # comment
///   qubits: 4           (required before any sparse term)
///   0.5 X0 Z3           (sparse)
///   -1.25 XIZZ          (dense; n inferred from the first dense token)
/// Throws ParseError carrying the 1-based line number.
ObservableSet parse_observables(std::string_view content, std::string source_label = {});

/// Reads and parses a file; throws std::runtime_error if it cannot be read.
ObservableSet load_observable_file(const std::filesystem::path &path);

/// Writes one dense term per line, no header, so the output round-trips.
void write_observables(const ObservableSet &set, std::ostream &out);

/// Shortest round-trip text of a double (always contains '.', 'e', "inf" or "nan").
std::string format_weight(double weight);

}  // namespace paulipart
