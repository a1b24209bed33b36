/*
   Copyright 2026 The hardyc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hardy/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hardy {

namespace {

inline double abs_pow(const Complex& z, double p) {
    const double r2 = std::norm(z);
    return p == 2.0 ? r2 : std::pow(r2, 0.5 * p);
}

}  // namespace

double sum_abs_pow(std::span<const Complex> samples, double p) {
    const std::size_t n = samples.size();
    const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
    if (blocks <= 1) return sum_abs_pow_serial(samples, p);

    std::vector<double> partial(blocks, 0.0);
    const auto nblocks = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t hi = std::min(n, lo + kReductionBlock);
        double s = 0.0;
        for (std::size_t k = lo; k < hi; ++k) s += abs_pow(samples[k], p);
        partial[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (double s : partial) total += s;
    return total;
}

double sum_abs_pow_serial(std::span<const Complex> samples, double p) {
    double s = 0.0;
    for (const Complex& z : samples) s += abs_pow(z, p);
    return s;
}

double max_modulus_gap(std::span<const Complex> a, std::span<const Complex> b) {
    const auto n = static_cast<std::ptrdiff_t>(std::min(a.size(), b.size()));
    double gap = 0.0;
#pragma omp parallel for reduction(max : gap) schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        gap = std::max(gap, std::abs(std::abs(a[i]) - std::abs(b[i])));
    }
    return gap;
}

int configure_threads_from_env() {
#ifdef _OPENMP
    if (const char* env = std::getenv("HC_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) omp_set_num_threads(std::min(cap, omp_get_max_threads()));
    }
#endif
    return max_threads();
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace hardy
