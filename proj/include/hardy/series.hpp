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

#ifndef HARDY_SERIES_HPP
#define HARDY_SERIES_HPP

#include <cstddef>
#include <vector>

#include "hardy/analytic_poly.hpp"

namespace hardy {

/// Values f(e^{2 pi i k / M}), k = 0..M-1, with M a power of two.
struct CircleGrid {
    std::vector<Complex> samples;

    std::size_t size() const noexcept { return samples.size(); }
};

struct NormResult {
    double value = 0.0;
    std::size_t grid_size_used = 0;
    double est_error = 0.0;
};

struct NormOptions {
    double rel_tol = 1e-10;
    std::size_t m_max = std::size_t{1} << 22;
    std::size_t m_min = 16;
};

bool is_power_of_two(std::size_t m) noexcept;
std::size_t next_power_of_two(std::size_t m) noexcept;

/// samples[k] = sum_n a_n e^{2 pi i k n / M} by FFT of the zero-padded coefficients.
/// ArgumentError unless M is a power of two with M >= degree + 1.
CircleGrid eval_on_circle(const AnalyticPoly& f, std::size_t m);

/// a_0..a_N from circle samples by the inverse transform. ArgumentError if N >= M.
AnalyticPoly coeffs_from_samples(const CircleGrid& grid, std::size_t n);

/// ||f||_p = (mean over the circle of |f|^p)^{1/p} by the trapezoid rule, doubling the
/// grid until two successive values agree to rel_tol. Each doubling evaluates only the
/// new odd-indexed nodes. Throws ConvergenceError past m_max, DomainError for p outside (0,2].
NormResult hp_norm(const AnalyticPoly& f, double p, const NormOptions& options = {});

/// Serial reference for hp_norm: re-evaluates the full grid at every level and
/// accumulates with one running sum. Kept for tests and benchmarks.
NormResult hp_norm_reference(const AnalyticPoly& f, double p, const NormOptions& options = {});

/// Default truncation order for series operations: four times the degree.
std::size_t default_order(const AnalyticPoly& f);

/// Cauchy product truncated at degree N.
AnalyticPoly series_multiply(const AnalyticPoly& f, const AnalyticPoly& g, std::size_t n);

/// f^s truncated at degree N, principal branch of a_0^s, from the recurrence
/// n a_0 g_n = sum_{k=1}^{n} (k (s + 1) - n) a_k g_{n-k}. DomainError if a_0 = 0.
AnalyticPoly series_power(const AnalyticPoly& f, double s, std::size_t n);

/// h with h g = f through degree N. DomainError if g(0) = 0.
AnalyticPoly series_divide(const AnalyticPoly& f, const AnalyticPoly& g, std::size_t n);

/// exp(f) truncated at degree N.
AnalyticPoly series_exp(const AnalyticPoly& f, std::size_t n);

/// f with a_0..a_{k-1} set to zero.
AnalyticPoly truncate_head(const AnalyticPoly& f, std::size_t k);

}  // namespace hardy

#endif
