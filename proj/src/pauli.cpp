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

#include "paulipart/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

#include "paulipart/errors.hpp"

namespace paulipart {

std::string_view to_string(CommutativityMode mode) {
    return mode == CommutativityMode::gc ? "gc" : "qwc";
}

CommutativityMode parse_mode(std::string_view text) {
    if (text == "gc" || text == "GC") {
        return CommutativityMode::gc;
    }
    if (text == "qwc" || text == "QWC") {
        return CommutativityMode::qwc;
    }
    throw ParseError("unknown commutativity mode '" + std::string(text) + "' (expected gc or qwc)");
}

PauliString::PauliString(std::size_t n_qubits) : n_qubits_(n_qubits), words_(2 * ((n_qubits + 63) / 64), 0) {
    if (n_qubits == 0) {
        throw std::invalid_argument("a Pauli string needs at least one qubit");
    }
}

char PauliString::letter(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    bool x = (x_words()[qubit >> 6] >> (qubit & 63)) & 1;
    bool z = (z_words()[qubit >> 6] >> (qubit & 63)) & 1;
    return "IXZY"[x | (z << 1)];
}

void PauliString::set_letter(std::size_t qubit, char letter) {
    if (qubit >= n_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    bool x;
    bool z;
    switch (letter) {
        case 'I': x = false; z = false; break;
        case 'X': x = true; z = false; break;
        case 'Y': x = true; z = true; break;
        case 'Z': x = false; z = true; break;
        default: throw ParseError(std::string("invalid Pauli letter '") + letter + "'");
    }
    std::uint64_t bit = std::uint64_t{1} << (qubit & 63);
    std::size_t w = qubit >> 6;
    std::size_t nw = num_words();
    words_[w] = x ? (words_[w] | bit) : (words_[w] & ~bit);
    words_[nw + w] = z ? (words_[nw + w] | bit) : (words_[nw + w] & ~bit);
}

bool PauliString::is_identity() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t PauliString::weight() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < num_words(); ++w) {
        total += static_cast<std::size_t>(std::popcount(x_words()[w] | z_words()[w]));
    }
    return total;
}

std::string PauliString::str_dense() const {
    std::string out(n_qubits_, 'I');
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        out[q] = letter(q);
    }
    return out;
}

std::string PauliString::str_sparse() const {
    std::string out;
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        char c = letter(q);
        if (c == 'I') {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += c;
        out += std::to_string(q);
    }
    return out;
}

namespace {

std::vector<std::string_view> split_whitespace(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (i > start) {
            tokens.push_back(text.substr(start, i - start));
        }
    }
    return tokens;
}

bool is_dense_token(std::string_view token) {
    return std::all_of(token.begin(), token.end(), [](char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; });
}

}  // namespace

PauliString parse_pauli(std::string_view text, std::size_t n_qubits) {
    PauliString result(n_qubits);
    auto tokens = split_whitespace(text);
    if (tokens.size() == 1 && is_dense_token(tokens[0])) {
        if (tokens[0].size() != n_qubits) {
            throw ParseError("dense Pauli string '" + std::string(tokens[0]) + "' has " +
                             std::to_string(tokens[0].size()) + " letters, expected " + std::to_string(n_qubits));
        }
        for (std::size_t q = 0; q < n_qubits; ++q) {
            result.set_letter(q, tokens[0][q]);
        }
        return result;
    }
    std::vector<bool> seen(n_qubits, false);
    for (auto token : tokens) {
        char letter = token[0];
        if (letter != 'X' && letter != 'Y' && letter != 'Z') {
            throw ParseError("malformed Pauli term '" + std::string(token) + "'");
        }
        std::string_view digits = token.substr(1);
        std::size_t qubit = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), qubit);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw ParseError("malformed Pauli term '" + std::string(token) + "'");
        }
        if (qubit >= n_qubits) {
            throw ParseError("qubit index " + std::to_string(qubit) + " out of range for " + std::to_string(n_qubits) +
                             " qubits");
        }
        if (seen[qubit]) {
            throw ParseError("qubit index " + std::to_string(qubit) + " repeated");
        }
        seen[qubit] = true;
        result.set_letter(qubit, letter);
    }
    return result;
}

namespace {

void require_same_size(const PauliString &a, const PauliString &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("Pauli strings act on different numbers of qubits (" +
                                    std::to_string(a.n_qubits()) + " vs " + std::to_string(b.n_qubits()) + ")");
    }
}

}  // namespace

bool commutes_gc(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    std::uint64_t parity = 0;
    for (std::size_t w = 0; w < a.num_words(); ++w) {
        parity ^= (a.x_words()[w] & b.z_words()[w]) ^ (a.z_words()[w] & b.x_words()[w]);
    }
    return (std::popcount(parity) & 1) == 0;
}

bool commutes_qwc(const PauliString &a, const PauliString &b) {
    require_same_size(a, b);
    for (std::size_t w = 0; w < a.num_words(); ++w) {
        if ((a.x_words()[w] & b.z_words()[w]) ^ (a.z_words()[w] & b.x_words()[w])) {
            return false;
        }
    }
    return true;
}

bool commutes(const PauliString &a, const PauliString &b, CommutativityMode mode) {
    return mode == CommutativityMode::gc ? commutes_gc(a, b) : commutes_qwc(a, b);
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (dim != rhs.dim) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    DenseMatrix out{dim, std::vector<std::complex<double>>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t k = 0; k < dim; ++k) {
            auto a = at(r, k);
            if (a == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < dim; ++c) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

DenseMatrix dense_matrix(const PauliString &p) {
    if (p.n_qubits() > kMaxDenseQubits) {
        throw ProblemTooLarge("dense_matrix supports at most " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    using C = std::complex<double>;
    const C i{0.0, 1.0};
    auto single = [&](char letter) {
        DenseMatrix m{2, std::vector<C>(4)};
        switch (letter) {
            case 'I': m.at(0, 0) = 1.0; m.at(1, 1) = 1.0; break;
            case 'X': m.at(0, 1) = 1.0; m.at(1, 0) = 1.0; break;
            case 'Y': m.at(0, 1) = -i; m.at(1, 0) = i; break;
            case 'Z': m.at(0, 0) = 1.0; m.at(1, 1) = -1.0; break;
        }
        return m;
    };
    DenseMatrix acc{1, {C{1.0}}};
    for (std::size_t q = 0; q < p.n_qubits(); ++q) {
        DenseMatrix factor = single(p.letter(q));
        DenseMatrix next{acc.dim * 2, std::vector<C>(acc.dim * 2 * acc.dim * 2)};
        for (std::size_t r = 0; r < acc.dim; ++r) {
            for (std::size_t c = 0; c < acc.dim; ++c) {
                for (std::size_t fr = 0; fr < 2; ++fr) {
                    for (std::size_t fc = 0; fc < 2; ++fc) {
                        next.at(r * 2 + fr, c * 2 + fc) = acc.at(r, c) * factor.at(fr, fc);
                    }
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace paulipart

std::size_t std::hash<paulipart::PauliString>::operator()(const paulipart::PauliString &p) const noexcept {
    std::size_t h = p.n_qubits();
    auto mix = [&h](std::uint64_t v) { h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (auto w : p.x_words()) {
        mix(w);
    }
    for (auto w : p.z_words()) {
        mix(w);
    }
    return h;
}
