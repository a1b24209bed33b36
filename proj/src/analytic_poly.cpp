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

#include "hardy/analytic_poly.hpp"

#include <algorithm>
#include <cmath>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

void require_finite(std::span<const Complex> coeffs) {
    for (const Complex& c : coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw ArgumentError("polynomial coefficients must be finite");
}

}  // namespace

AnalyticPoly::AnalyticPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { require_finite(coeffs_); }

AnalyticPoly::AnalyticPoly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { require_finite(coeffs_); }

AnalyticPoly AnalyticPoly::monomial(std::size_t k, Complex c) {
    std::vector<Complex> a(k + 1);
    a[k] = c;
    return AnalyticPoly(std::move(a));
}

std::optional<std::size_t> AnalyticPoly::degree() const {
    for (std::size_t n = coeffs_.size(); n-- > 0;)
        if (coeffs_[n] != Complex{}) return n;
    return std::nullopt;
}

Complex AnalyticPoly::eval(Complex z) const {
    Complex acc{};
    for (std::size_t n = coeffs_.size(); n-- > 0;) acc = acc * z + coeffs_[n];
    return acc;
}

AnalyticPoly AnalyticPoly::resized(std::size_t length) const {
    std::vector<Complex> a(length);
    std::copy_n(coeffs_.begin(), std::min(length, coeffs_.size()), a.begin());
    AnalyticPoly out;
    out.coeffs_ = std::move(a);
    return out;
}

AnalyticPoly AnalyticPoly::trimmed() const {
    const auto d = degree();
    return resized(d ? *d + 1 : 0);
}

AnalyticPoly AnalyticPoly::scaled(Complex c) const {
    std::vector<Complex> a(coeffs_);
    for (Complex& x : a) x *= c;
    return AnalyticPoly(std::move(a));
}

AnalyticPoly AnalyticPoly::rotated(double phase, double angle) const {
    std::vector<Complex> a(coeffs_);
    const Complex front = std::polar(1.0, phase);
    for (std::size_t n = 0; n < a.size(); ++n) a[n] *= front * std::polar(1.0, angle * static_cast<double>(n));
    return AnalyticPoly(std::move(a));
}

double AnalyticPoly::l2_norm_sq() const {
    double s = 0.0;
    for (const Complex& c : coeffs_) s += std::norm(c);
    return s;
}

double AnalyticPoly::max_abs() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool operator==(const AnalyticPoly& lhs, const AnalyticPoly& rhs) {
    const std::size_t n = std::max(lhs.size(), rhs.size());
    for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != rhs[k]) return false;
    return true;
}

}  // namespace hardy
