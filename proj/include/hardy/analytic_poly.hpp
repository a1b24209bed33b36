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

#ifndef HARDY_ANALYTIC_POLY_HPP
#define HARDY_ANALYTIC_POLY_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace hardy {

using Complex = std::complex<double>;

/// f(z) = sum a_n z^n with finitely many complex Taylor coefficients.
///
/// Trailing zeros are kept as given; equality and degree ignore them.
/// All coefficients must be finite (ArgumentError otherwise).
class AnalyticPoly {
   public:
    AnalyticPoly() = default;
    explicit AnalyticPoly(std::vector<Complex> coeffs);
    AnalyticPoly(std::initializer_list<Complex> coeffs);

    static AnalyticPoly monomial(std::size_t k, Complex c = 1.0);

    /// Largest index of a nonzero coefficient; empty for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return !degree().has_value(); }

    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// a_n, or zero past the stored length.
    Complex operator[](std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

    Complex eval(Complex z) const;

    /// Copy padded with zeros or cut to exactly `length` coefficients.
    AnalyticPoly resized(std::size_t length) const;
    /// Copy without trailing zeros (the zero polynomial becomes empty).
    AnalyticPoly trimmed() const;

    AnalyticPoly scaled(Complex c) const;
    /// g(z) = e^{i phase} f(e^{i angle} z).
    AnalyticPoly rotated(double phase, double angle) const;

    double l2_norm_sq() const;
    double max_abs() const;

    friend bool operator==(const AnalyticPoly& lhs, const AnalyticPoly& rhs);

   private:
    std::vector<Complex> coeffs_;
};

}  // namespace hardy

#endif
