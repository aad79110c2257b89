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

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "paulipart/errors.hpp"

using namespace paulipart;

namespace {

std::size_t error_line(const std::string &text) {
    try {
        parse_observables(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(observable_set, five_strings_file) {
    ObservableSet set = load_observable_file(PAULIPART_FIXTURES "/five_strings.txt");
    ASSERT_EQ(set.size(), 5u);
    EXPECT_EQ(set.n_qubits(), 2u);
    EXPECT_EQ(set[0].str_dense(), "ZZ");
    EXPECT_EQ(set[1].str_dense(), "XX");
    EXPECT_EQ(set[2].str_dense(), "YY");
    EXPECT_EQ(set[3].str_dense(), "IZ");
    EXPECT_EQ(set[4].str_dense(), "ZI");
    EXPECT_EQ(set.source_label(), "five_strings.txt");
}

TEST(observable_set, parse_formats) {
    ObservableSet dense = parse_observables("# comment\n\n-1.25 XIZZ\n0.5 IIIX\n");
    EXPECT_EQ(dense.n_qubits(), 4u);
    EXPECT_EQ(dense.terms()[0].weight, -1.25);
    ObservableSet sparse = parse_observables("qubits: 3\n2 X0 Z2\n1e-3 Y1\n");
    EXPECT_EQ(sparse[0].str_dense(), "XIZ");
    EXPECT_EQ(sparse.terms()[1].weight, 1e-3);
    ObservableSet mixed = parse_observables("qubits: 2\n1.0 XZ\n1.0 Z0\n");
    EXPECT_EQ(mixed.size(), 2u);
}

TEST(observable_set, errors_carry_line_numbers) {
    EXPECT_EQ(error_line(""), 0u);
    EXPECT_THROW(parse_observables("# only comments\n"), ParseError);
    EXPECT_EQ(error_line("qubits: 2\n1.0 Z0\n1.0 Z0\n"), 3u);
    EXPECT_EQ(error_line("qubits: 2\n1.0 Z0\n1.0 II\n"), 3u);
    EXPECT_EQ(error_line("1.0 XX\n1.0 XXX\n"), 2u);
    EXPECT_EQ(error_line("1.0 X0\n"), 1u);
    EXPECT_EQ(error_line("abc XX\n"), 1u);
    EXPECT_EQ(error_line("1.0\n"), 1u);
    EXPECT_EQ(error_line("qubits: 2\n1.0 Z0\nqubits: 3\n"), 3u);
    EXPECT_EQ(error_line("1.0 XX\nqubits: 2\n"), 2u);
    EXPECT_EQ(error_line("qubits: 2\n1.0 Z5\n"), 2u);
}

TEST(observable_set, empty_file_message) {
    try {
        parse_observables("\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("no terms"), std::string::npos);
    }
}

TEST(observable_set, constructor_validation) {
    std::vector<Term> dup = {{1.0, parse_pauli("X0", 1)}, {1.0, parse_pauli("X0", 1)}};
    EXPECT_THROW(ObservableSet(1, dup), std::invalid_argument);
    EXPECT_THROW(ObservableSet(1, {{1.0, PauliString(1)}}), std::invalid_argument);
    EXPECT_THROW(ObservableSet(1, {}), std::invalid_argument);
    EXPECT_THROW(ObservableSet(1, {{1.0, parse_pauli("XX", 2)}}), std::invalid_argument);
}

TEST(observable_set, write_round_trip) {
    std::mt19937_64 rng(3);
    ObservableSet set = oracle::random_set(6, 40, rng);
    std::ostringstream out;
    write_observables(set, out);
    ObservableSet back = parse_observables(out.str());
    ASSERT_EQ(back.size(), set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        EXPECT_EQ(back[i], set[i]);
        EXPECT_EQ(back.terms()[i].weight, set.terms()[i].weight);
    }
    EXPECT_EQ(format_weight(1.0), "1.0");
    EXPECT_EQ(format_weight(-0.125), "-0.125");
    EXPECT_EQ(std::stod(format_weight(0.1)), 0.1);
}

TEST(tomography, small_sets) {
    ObservableSet one = gen_full_tomography(1);
    ASSERT_EQ(one.size(), 3u);
    EXPECT_EQ(one[0].str_dense(), "X");
    EXPECT_EQ(one[1].str_dense(), "Y");
    EXPECT_EQ(one[2].str_dense(), "Z");
    EXPECT_EQ(tomography_key(one[0]), 4u);
    EXPECT_EQ(tomography_key(one[1]), 8u);
    EXPECT_EQ(tomography_key(one[2]), 12u);
    ObservableSet two = gen_full_tomography(2);
    ASSERT_EQ(two.size(), 15u);
    const char *first[] = {"IX", "IY", "IZ", "XI", "XX"};
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(two[i].str_dense(), first[i]);
    }
}

TEST(tomography, matches_key_sort_oracle) {
    for (std::size_t n = 1; n <= 5; ++n) {
        ObservableSet set = gen_full_tomography(n);
        auto expect = oracle::tomography_letters(n);
        ASSERT_EQ(set.size(), expect.size());
        for (std::size_t i = 0; i < set.size(); ++i) {
            ASSERT_EQ(set[i].str_dense(), expect[i]) << n << " " << i;
        }
        for (std::size_t i = 1; i < set.size(); ++i) {
            EXPECT_LT(tomography_key(set[i - 1]), tomography_key(set[i]));
        }
    }
}

TEST(tomography, range_and_size) {
    EXPECT_THROW(gen_full_tomography(0), std::invalid_argument);
    EXPECT_THROW(gen_full_tomography(9), std::invalid_argument);
    ObservableSet eight = gen_full_tomography(8);
    EXPECT_EQ(eight.size(), 65535u);
    for (const auto &t : eight.terms()) {
        ASSERT_FALSE(t.string.is_identity());
        ASSERT_EQ(t.weight, 1.0);
    }
}
