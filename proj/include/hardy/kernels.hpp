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

#ifndef HARDY_KERNELS_HPP
#define HARDY_KERNELS_HPP

#include <cstddef>
#include <span>

#include "hardy/analytic_poly.hpp"

namespace hardy {

// Samples per block of the parallel reduction. Block partials are combined in
// index order, so the result does not depend on the thread count.
inline constexpr std::size_t kReductionBlock = 2048;

/// sum_k |samples[k]|^p, OpenMP-parallel over fixed blocks. Deterministic.
double sum_abs_pow(std::span<const Complex> samples, double p);

/// Serial reference for sum_abs_pow: one running sum, no blocking.
double sum_abs_pow_serial(std::span<const Complex> samples, double p);

/// max_k | |a[k]| - |b[k]| |, OpenMP-parallel (max is order independent).
double max_modulus_gap(std::span<const Complex> a, std::span<const Complex> b);

/// Caps OpenMP threads from HC_THREADS if set; returns the resulting maximum.
int configure_threads_from_env();

int max_threads();

}  // namespace hardy

#endif
