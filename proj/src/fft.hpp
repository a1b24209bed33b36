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

#ifndef HARDY_SRC_FFT_HPP
#define HARDY_SRC_FFT_HPP

#include <span>

#include "hardy/analytic_poly.hpp"

namespace hardy::detail {

enum class FftSign { Forward = -1, Backward = +1 };

// Unnormalized DFT, out[k] = sum_n in[n] exp(sign * 2 pi i k n / N); in.size() == out.size().
// Plans are created once per size under a lock; execution is thread-safe.
void dft(std::span<const Complex> in, std::span<Complex> out, FftSign sign);

}  // namespace hardy::detail

#endif
