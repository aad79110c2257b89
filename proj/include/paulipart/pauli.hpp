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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace paulipart {

enum class CommutativityMode {
    gc,   ///< general commutativity: the operators commute as a whole
    qwc,  ///< qubit-wise commutativity: every qubit pair commutes
};

std::string_view to_string(CommutativityMode mode);
CommutativityMode parse_mode(std::string_view text);

/// An n-qubit Pauli operator without phase, in symplectic form. Bit q of the
/// x mask is set iff qubit q carries X or Y; bit q of the z mask iff it
/// carries Z or Y. Qubit labels are 0-based and label 0 is the leftmost
/// letter of the dense form.
class PauliString {
   public:
    /// The identity on `n_qubits` qubits.
    explicit PauliString(std::size_t n_qubits);

    std::size_t n_qubits() const { return n_qubits_; }
    std::size_t num_words() const { return words_.size() / 2; }
    std::span<const std::uint64_t> x_words() const { return {words_.data(), num_words()}; }
    std::span<const std::uint64_t> z_words() const { return {words_.data() + num_words(), num_words()}; }

    /// One of 'I', 'X', 'Y', 'Z'.
    char letter(std::size_t qubit) const;
    void set_letter(std::size_t qubit, char letter);

    bool is_identity() const;
    /// Number of non-identity qubits.
    std::size_t weight() const;

    /// Dense form, one letter per qubit, qubit 0 first ("XIZ").
    std::string str_dense() const;
    /// Sparse form, non-identity letters with labels ("X0 Z2"); "" for identity.
    std::string str_sparse() const;

    bool operator==(const PauliString &other) const = default;

   private:
    std::size_t n_qubits_;
    std::vector<std::uint64_t> words_;  // x words followed by z words
};

/// Parses sparse ("X0 Z3") or dense ("XIZZ") text. Whitespace-only text is
/// the identity. Throws ParseError on malformed letters, labels out of range,
/// repeated labels, or a dense token whose length differs from n_qubits.
PauliString parse_pauli(std::string_view text, std::size_t n_qubits);

/// True iff the number of qubits with anticommuting letters is even.
bool commutes_gc(const PauliString &a, const PauliString &b);

/// True iff at every qubit the letters are equal or one is the identity.
bool commutes_qwc(const PauliString &a, const PauliString &b);

bool commutes(const PauliString &a, const PauliString &b, CommutativityMode mode);

/// Row-major complex square matrix.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<std::complex<double>> data;

    std::complex<double> &at(std::size_t row, std::size_t col) { return data[row * dim + col]; }
    const std::complex<double> &at(std::size_t row, std::size_t col) const { return data[row * dim + col]; }

    DenseMatrix operator*(const DenseMatrix &rhs) const;
    bool operator==(const DenseMatrix &rhs) const = default;
};

inline constexpr std::size_t kMaxDenseQubits = 3;

/// Kronecker product of the single-qubit matrices, qubit 0 as the leftmost
/// factor. Only for n_qubits <= kMaxDenseQubits; used as a test oracle.
DenseMatrix dense_matrix(const PauliString &p);

}  // namespace paulipart

template <>
struct std::hash<paulipart::PauliString> {
    std::size_t operator()(const paulipart::PauliString &p) const noexcept;
};
