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

#include "paulipart/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace paulipart {

double reduction_factor(std::size_t n_strings, std::size_t n_partitions) {
    if (n_partitions == 0) {
        throw std::invalid_argument("reduction factor of zero partitions");
    }
    if (n_strings == 0) {
        throw std::invalid_argument("reduction factor of zero strings");
    }
    return static_cast<double>(n_strings) / static_cast<double>(n_partitions);
}

double p_ratio(double f_d, double f_1) {
    if (!(f_1 > 0.0)) {
        throw std::invalid_argument("p_ratio needs F_1 > 0");
    }
    return f_d / f_1;
}

double gamma(double f_d, std::size_t n_bit) {
    if (n_bit == 0) {
        throw std::invalid_argument("gamma needs n_bit >= 1");
    }
    return f_d / static_cast<double>(n_bit);
}

namespace {

void check_inputs(const RuntimeModelInputs &in) {
    if (!(in.f_d > 0.0)) {
        throw std::invalid_argument("runtime model needs F_D > 0");
    }
    if (in.tau_d < 0.0 || in.tau_1 < 0.0 || in.t_1 < 0.0 || in.f_1 < 0.0) {
        throw std::invalid_argument("runtime model inputs must be nonnegative");
    }
    if (in.s < 0.0 || in.s > 1.0) {
        throw std::invalid_argument("runtime model needs s in [0, 1]");
    }
}

}  // namespace

double predicted_runtime(const RuntimeModelInputs &in) {
    check_inputs(in);
    return in.tau_d * (1.0 + in.s) * static_cast<double>(in.n) / in.f_d;
}

RuntimeDecomposition decompose_runtime(const RuntimeModelInputs &in) {
    check_inputs(in);
    if (!(in.tau_1 > 0.0)) {
        throw std::invalid_argument("runtime decomposition needs tau_1 > 0");
    }
    RuntimeDecomposition d;
    d.tau_ratio = in.tau_d / in.tau_1;
    d.two_pass = 1.0 + in.s;
    d.p_inverse = in.f_1 / in.f_d;
    d.from_reference = d.tau_ratio * d.two_pass * d.p_inverse * in.t_1;
    return d;
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>> &points) {
    if (points.size() < 2) {
        throw std::invalid_argument("a power-law fit needs at least 2 points");
    }
    const double n = static_cast<double>(points.size());
    double sx = 0.0;
    double sy = 0.0;
    for (const auto &[x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0)) {
            throw std::invalid_argument("a power-law fit needs positive N and t");
        }
        sx += std::log(x);
        sy += std::log(y);
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (const auto &[x, y] : points) {
        double dx = std::log(x) - mx;
        double dy = std::log(y) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("a power-law fit needs at least two distinct N");
    }
    PowerLawFit fit;
    fit.b = sxy / sxx;
    fit.a = std::exp(my - fit.b * mx);
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

}  // namespace paulipart
