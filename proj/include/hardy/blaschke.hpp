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

#ifndef HARDY_BLASCHKE_HPP
#define HARDY_BLASCHKE_HPP

#include <cstddef>
#include <vector>

#include "hardy/analytic_poly.hpp"

namespace hardy {

// Roots with modulus below this are moved into the Blaschke factor.
inline constexpr double kInteriorRootMargin = 1e-9;

/// B(z) = front_phase * prod (z - w_n) / (1 - z conj(w_n)), every |w_n| < 1 - 1e-12.
class BlaschkeProduct {
   public:
    BlaschkeProduct() = default;
    explicit BlaschkeProduct(std::vector<Complex> zeros, Complex front_phase = 1.0);

    const std::vector<Complex>& zeros() const noexcept { return zeros_; }
    Complex front_phase() const noexcept { return front_phase_; }

    Complex operator()(Complex z) const;

   private:
    std::vector<Complex> zeros_;
    Complex front_phase_ = 1.0;
};

Complex blaschke_eval(const BlaschkeProduct& b, Complex z);

/// Taylor coefficients b_0..b_N. A single factor expands as
/// -w + sum_{n>=1} (1 - |w|^2) conj(w)^{n-1} z^n.
AnalyticPoly blaschke_series(const BlaschkeProduct& b, std::size_t n);

/// Smallest N with max|w_n|^N < tol (at least the number of zeros).
std::size_t blaschke_order(const BlaschkeProduct& b, double tol = 1e-12);

/// All complex roots with multiplicity: exact zeros at the origin are split off,
/// the rest come from companion-matrix eigenvalues refined by Aberth-Ehrlich sweeps.
/// Sorted by modulus, then argument. ArgumentError for constant or zero input.
std::vector<Complex> poly_roots(const AnalyticPoly& f);

struct FactorizationResult {
    BlaschkeProduct blaschke;
    AnalyticPoly outer_part;
    // max over the check grid of | |g| - |f| | on the circle
    double residual = 0.0;
    std::size_t residual_grid = 0;
    // roots within kInteriorRootMargin of the circle, left inside outer_part
    std::vector<Complex> boundary_roots;
};

/// f = B g with B carrying the roots of modulus < 1 - 1e-9 and |g| = |f| on the circle.
/// g is f deflated by each interior (z - w) times (1 - conj(w) z), padded to N + 1 terms.
/// ArgumentError for f = 0 or N < degree(f).
FactorizationResult riesz_factorize(const AnalyticPoly& f, std::size_t n);

struct BlaschkeCoefficientBounds {
    double b0_abs = 1.0;
    double b1_abs = 0.0;
    double sum_one_minus_mod = 0.0;
};

/// |b_0| = prod |w_n|, |b_1|, and sum (1 - |w_n|). Throws std::logic_error if
/// |b_1| > sqrt(1 - |b_0|^2) + 1e-12.
BlaschkeCoefficientBounds blaschke_coefficient_bounds(const BlaschkeProduct& b);

}  // namespace hardy

#endif
