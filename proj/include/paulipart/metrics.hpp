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
#include <utility>
#include <vector>

namespace paulipart {

/// F = N / n_partitions. Throws std::invalid_argument unless both are >= 1.
double reduction_factor(std::size_t n_strings, std::size_t n_partitions);

/// p_D = F_D / F_1. Throws std::invalid_argument unless F_1 > 0.
double p_ratio(double f_d, double f_1);

/// gamma_D = F_D / n_bit, the mean fill of a partition relative to capacity.
double gamma(double f_d, std::size_t n_bit);

struct RuntimeModelInputs {
    double tau_d = 0.0;  ///< mean seconds per solver call at dimension D
    double tau_1 = 0.0;  ///< the same at D = 1
    double s = 0.0;      ///< fraction of two-pass partitions
    std::size_t n = 0;
    double f_d = 1.0;
    double f_1 = 1.0;
    double t_1 = 0.0;  ///< total seconds of the D = 1 run
};

struct RuntimeDecomposition {
    double tau_ratio = 0.0;     ///< tau_D / tau_1
    double two_pass = 0.0;      ///< 1 + s
    double p_inverse = 0.0;     ///< F_1 / F_D
    double from_reference = 0.0;  ///< tau_ratio * two_pass * p_inverse * t_1
};

/// t_D = tau_D (1 + s) N / F_D. Throws std::invalid_argument on F_D <= 0 or
/// negative inputs.
double predicted_runtime(const RuntimeModelInputs &in);

/// The same prediction expressed relative to the D = 1 run. Equal to
/// predicted_runtime when t_1 = tau_1 N / F_1. Throws std::invalid_argument
/// on tau_1 <= 0 or F_D <= 0.
RuntimeDecomposition decompose_runtime(const RuntimeModelInputs &in);

struct PowerLawFit {
    double a = 0.0;
    double b = 0.0;
    double r_squared = 0.0;
};

/// Least-squares fit of t = a N^b on (ln N, ln t). Throws
/// std::invalid_argument with fewer than 2 points, non-positive values or
/// all N equal.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>> &points);

}  // namespace paulipart
