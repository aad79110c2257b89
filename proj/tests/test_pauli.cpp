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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "paulipart/errors.hpp"

using namespace paulipart;

TEST(pauli_string, parse_dense_and_sparse_agree) {
    EXPECT_EQ(parse_pauli("X0 Z1", 2), parse_pauli("XZ", 2));
    EXPECT_EQ(parse_pauli("Z3 X0", 4), parse_pauli("XIIZ", 4));
    EXPECT_TRUE(parse_pauli("IIII", 4).is_identity());
    EXPECT_TRUE(parse_pauli("", 3).is_identity());
}

TEST(pauli_string, y_sets_both_masks) {
    PauliString y = parse_pauli("Y0", 1);
    EXPECT_EQ(y.x_words()[0], 1u);
    EXPECT_EQ(y.z_words()[0], 1u);
    PauliString x = parse_pauli("X2", 3);
    EXPECT_EQ(x.x_words()[0], 4u);
    EXPECT_EQ(x.z_words()[0], 0u);
}

TEST(pauli_string, parse_errors) {
    EXPECT_THROW(parse_pauli("Q0", 2), ParseError);
    EXPECT_THROW(parse_pauli("X2", 2), ParseError);
    EXPECT_THROW(parse_pauli("X0 Z0", 2), ParseError);
    EXPECT_THROW(parse_pauli("XZI", 2), ParseError);
    EXPECT_THROW(parse_pauli("XQ", 2), ParseError);
    EXPECT_THROW(parse_pauli("X", 2), ParseError);
    EXPECT_THROW(parse_pauli("X-1", 2), ParseError);
}

TEST(pauli_string, round_trip_both_forms) {
    std::mt19937_64 rng(7);
    for (std::size_t n : {1, 2, 5, 63, 64, 65, 130}) {
        for (int k = 0; k < 50; ++k) {
            PauliString p = parse_pauli(oracle::random_letters(n, rng, true), n);
            EXPECT_EQ(parse_pauli(p.str_dense(), n), p);
            EXPECT_EQ(parse_pauli(p.str_sparse(), n), p);
        }
    }
}

TEST(pauli_string, letters_and_weight) {
    PauliString p = parse_pauli("XIYZ", 4);
    EXPECT_EQ(p.letter(0), 'X');
    EXPECT_EQ(p.letter(1), 'I');
    EXPECT_EQ(p.letter(2), 'Y');
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.str_sparse(), "X0 Y2 Z3");
    p.set_letter(1, 'Z');
    EXPECT_EQ(p.str_dense(), "XZYZ");
}

TEST(commutation, examples) {
    auto p = [](const char *s) { return parse_pauli(s, 2); };
    EXPECT_TRUE(commutes_gc(p("Z0 Z1"), p("X0 X1")));
    EXPECT_FALSE(commutes_gc(p("X0"), p("Z0")));
    EXPECT_TRUE(commutes_qwc(p("Z0 Z1"), p("Z1")));
    EXPECT_FALSE(commutes_qwc(p("Z0 Z1"), p("X0 X1")));
    EXPECT_THROW(commutes_gc(parse_pauli("X", 1), p("XX")), std::invalid_argument);
    EXPECT_THROW(commutes_qwc(parse_pauli("X", 1), p("XX")), std::invalid_argument);
}

TEST(commutation, five_strings_pairs) {
    std::vector<PauliString> s = {parse_pauli("Z0 Z1", 2), parse_pauli("X0 X1", 2), parse_pauli("Y0 Y1", 2),
                                  parse_pauli("Z1", 2), parse_pauli("Z0", 2)};
    auto expected = [](int i, int j) {
        if (i == 0 || j == 0) {
            return true;
        }
        return (i == 1 && j == 2) || (i == 2 && j == 1) || (i == 3 && j == 4) || (i == 4 && j == 3);
    };
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            if (i != j) {
                EXPECT_EQ(commutes_gc(s[i], s[j]), expected(i, j)) << i << "," << j;
            }
        }
    }
}

TEST(commutation, matrix_oracle_all_two_qubit_pairs) {
    auto strings = oracle::tomography_letters(2);
    ASSERT_EQ(strings.size(), 15u);
    int pairs = 0;
    for (const auto &a : strings) {
        for (const auto &b : strings) {
            EXPECT_EQ(commutes_gc(parse_pauli(a, 2), parse_pauli(b, 2)), oracle::matrices_commute(a, b))
                << a << " " << b;
            ++pairs;
        }
    }
    EXPECT_EQ(pairs, 225);
}

TEST(commutation, matrix_oracle_random_three_qubit_pairs) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 1000; ++k) {
        std::string a = oracle::random_letters(3, rng, true);
        std::string b = oracle::random_letters(3, rng, true);
        EXPECT_EQ(commutes_gc(parse_pauli(a, 3), parse_pauli(b, 3)), oracle::matrices_commute(a, b)) << a << " " << b;
    }
}

TEST(commutation, properties_on_wide_strings) {
    std::mt19937_64 rng(12);
    for (std::size_t n : {7, 64, 100, 200}) {
        for (int k = 0; k < 300; ++k) {
            std::string a = oracle::random_letters(n, rng);
            std::string b = oracle::random_letters(n, rng);
            if (k % 3 == 0) {
                for (std::size_t q = 0; q < n; ++q) {
                    if (rng() % 4 != 0) {
                        b[q] = rng() % 2 ? a[q] : 'I';
                    }
                }
            }
            PauliString pa = parse_pauli(a, n);
            PauliString pb = parse_pauli(b, n);
            bool gc = commutes_gc(pa, pb);
            bool qwc = commutes_qwc(pa, pb);
            EXPECT_EQ(gc, oracle::letters_commute_gc(a, b));
            EXPECT_EQ(qwc, oracle::letters_commute_qwc(a, b));
            EXPECT_EQ(gc, commutes_gc(pb, pa));
            EXPECT_TRUE(!qwc || gc);
            EXPECT_TRUE(commutes_gc(pa, pa));
            EXPECT_TRUE(commutes_qwc(pa, pa));
        }
    }
}

TEST(dense_matrix, single_qubit_and_identity) {
    DenseMatrix z = dense_matrix(parse_pauli("Z", 1));
    ASSERT_EQ(z.dim, 2u);
    EXPECT_EQ(z.at(0, 0), 1.0);
    EXPECT_EQ(z.at(1, 1), -1.0);
    EXPECT_EQ(z.at(0, 1), 0.0);
    DenseMatrix y = dense_matrix(parse_pauli("Y", 1));
    EXPECT_EQ(y.at(0, 1), std::complex<double>(0, -1));
    EXPECT_EQ(y.at(1, 0), std::complex<double>(0, 1));
    DenseMatrix id = dense_matrix(PauliString(2));
    ASSERT_EQ(id.dim, 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_EQ(id.at(i, j), i == j ? 1.0 : 0.0);
        }
    }
    EXPECT_THROW(dense_matrix(PauliString(4)), std::invalid_argument);
}

TEST(dense_matrix, matches_independent_kronecker) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 50; ++k) {
        std::string s = oracle::random_letters(3, rng, true);
        DenseMatrix m = dense_matrix(parse_pauli(s, 3));
        auto expect = oracle::letters_matrix(s);
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = 0; j < 8; ++j) {
                EXPECT_EQ(m.at(i, j), expect[i][j]) << s;
            }
        }
    }
}

TEST(pauli_string, mode_names) {
    EXPECT_EQ(parse_mode("gc"), CommutativityMode::gc);
    EXPECT_EQ(parse_mode("qwc"), CommutativityMode::qwc);
    EXPECT_EQ(to_string(CommutativityMode::qwc), "qwc");
    EXPECT_THROW(parse_mode("xyz"), ParseError);
}
