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

#include "hardy/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/weights.hpp"

namespace hardy {

bool is_power_of_two(std::size_t m) noexcept { return m != 0 && (m & (m - 1)) == 0; }

std::size_t next_power_of_two(std::size_t m) noexcept {
    std::size_t r = 1;
    while (r < m) r <<= 1;
    return r;
}

namespace {

std::size_t coefficient_count(const AnalyticPoly& f) {
    const auto d = f.degree();
    return d ? *d + 1 : 0;
}

// Samples of sum_n b_n e^{2 pi i k n / m} for a coefficient span with length <= m.
std::vector<Complex> circle_transform(std::span<const Complex> b, std::size_t m) {
    std::vector<Complex> padded(m);
    std::copy(b.begin(), b.end(), padded.begin());
    std::vector<Complex> out(m);
    detail::dft(padded, out, detail::FftSign::Backward);
    return out;
}

std::size_t initial_grid(std::size_t length, const NormOptions& options) {
    return std::max(next_power_of_two(std::max<std::size_t>(options.m_min, 2)), next_power_of_two(2 * length));
}

[[noreturn]] void throw_stalled(double previous, double last, std::size_t grid) {
    throw ConvergenceError("H^p quadrature did not converge by grid " + std::to_string(grid) +
                               " (last two values " + std::to_string(previous) + ", " + std::to_string(last) + ")",
                           previous, last, grid);
}

void check_norm_args(double p, const NormOptions& options) {
    require_exponent(p);
    if (!(options.rel_tol > 0.0)) throw ArgumentError("rel_tol must be positive");
}

}  // namespace

CircleGrid eval_on_circle(const AnalyticPoly& f, std::size_t m) {
    const std::size_t length = coefficient_count(f);
    if (!is_power_of_two(m)) throw ArgumentError("grid size " + std::to_string(m) + " is not a power of two");
    if (m < length) throw ArgumentError("grid size " + std::to_string(m) + " is below degree + 1");
    return CircleGrid{circle_transform(f.coeffs().first(length), m)};
}

AnalyticPoly coeffs_from_samples(const CircleGrid& grid, std::size_t n) {
    const std::size_t m = grid.size();
    if (n >= m) throw ArgumentError("cannot recover " + std::to_string(n + 1) + " coefficients from " +
                                    std::to_string(m) + " samples");
    std::vector<Complex> out(m);
    detail::dft(grid.samples, out, detail::FftSign::Forward);
    out.resize(n + 1);
    const double scale = 1.0 / static_cast<double>(m);
    for (Complex& c : out) c *= scale;
    return AnalyticPoly(std::move(out));
}

NormResult hp_norm(const AnalyticPoly& f, double p, const NormOptions& options) {
    check_norm_args(p, options);
    const std::size_t length = coefficient_count(f);
    std::size_t m = initial_grid(length, options);
    if (length == 0) return {0.0, m, 0.0};
    if (m > options.m_max) throw_stalled(0.0, 0.0, m);

    const auto a = f.coeffs().first(length);
    double total = sum_abs_pow(circle_transform(a, m), p);
    double value = std::pow(total / static_cast<double>(m), 1.0 / p);

    std::vector<Complex> shifted(length);
    double previous = value;
    for (;;) {
        if (2 * m > options.m_max) throw_stalled(previous, value, m);
        // Odd nodes of the 2m grid: f(w^{2k+1}) = sum_n (a_n w^n) (w^2)^{kn}, w = e^{i pi / m}.
        const double step = std::numbers::pi / static_cast<double>(m);
        for (std::size_t n = 0; n < length; ++n) shifted[n] = a[n] * std::polar(1.0, step * static_cast<double>(n));
        total += sum_abs_pow(circle_transform(shifted, m), p);
        m *= 2;
        const double next = std::pow(total / static_cast<double>(m), 1.0 / p);
        const double diff = std::abs(next - value);
        if (diff <= options.rel_tol * next) return {next, m, diff};
        previous = value;
        value = next;
    }
}

NormResult hp_norm_reference(const AnalyticPoly& f, double p, const NormOptions& options) {
    check_norm_args(p, options);
    const std::size_t length = coefficient_count(f);
    std::size_t m = initial_grid(length, options);
    if (length == 0) return {0.0, m, 0.0};
    if (m > options.m_max) throw_stalled(0.0, 0.0, m);

    const auto a = f.coeffs().first(length);
    double value = std::pow(sum_abs_pow_serial(circle_transform(a, m), p) / static_cast<double>(m), 1.0 / p);
    double previous = value;
    for (;;) {
        if (2 * m > options.m_max) throw_stalled(previous, value, m);
        m *= 2;
        const double next =
            std::pow(sum_abs_pow_serial(circle_transform(a, m), p) / static_cast<double>(m), 1.0 / p);
        const double diff = std::abs(next - value);
        if (diff <= options.rel_tol * next) return {next, m, diff};
        previous = value;
        value = next;
    }
}

std::size_t default_order(const AnalyticPoly& f) {
    const auto d = f.degree();
    return d ? 4 * *d : 0;
}

AnalyticPoly series_multiply(const AnalyticPoly& f, const AnalyticPoly& g, std::size_t n) {
    std::vector<Complex> h(n + 1);
    const std::size_t lf = std::min(coefficient_count(f), n + 1);
    const std::size_t lg = coefficient_count(g);
    for (std::size_t i = 0; i < lf; ++i) {
        const Complex fi = f[i];
        const std::size_t jmax = std::min(lg, n + 1 - i);
        for (std::size_t j = 0; j < jmax; ++j) h[i + j] += fi * g[j];
    }
    return AnalyticPoly(std::move(h));
}

AnalyticPoly series_power(const AnalyticPoly& f, double s, std::size_t n) {
    const Complex a0 = f[0];
    if (a0 == Complex{}) throw DomainError("series_power needs f(0) != 0");
    const std::size_t length = coefficient_count(f);
    std::vector<Complex> g(n + 1);
    g[0] = std::pow(a0, s);
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc{};
        const std::size_t jmax = std::min(k, length - 1);
        for (std::size_t j = 1; j <= jmax; ++j)
            acc += (static_cast<double>(j) * (s + 1.0) - static_cast<double>(k)) * f[j] * g[k - j];
        g[k] = acc / (static_cast<double>(k) * a0);
    }
    return AnalyticPoly(std::move(g));
}

AnalyticPoly series_divide(const AnalyticPoly& f, const AnalyticPoly& g, std::size_t n) {
    const Complex g0 = g[0];
    if (g0 == Complex{}) throw DomainError("series_divide needs g(0) != 0");
    const std::size_t lg = coefficient_count(g);
    std::vector<Complex> h(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex acc = f[k];
        const std::size_t jmax = std::min(k, lg == 0 ? 0 : lg - 1);
        for (std::size_t j = 1; j <= jmax; ++j) acc -= g[j] * h[k - j];
        h[k] = acc / g0;
    }
    return AnalyticPoly(std::move(h));
}

AnalyticPoly series_exp(const AnalyticPoly& f, std::size_t n) {
    const std::size_t length = coefficient_count(f);
    std::vector<Complex> g(n + 1);
    g[0] = std::exp(f[0]);
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc{};
        const std::size_t jmax = std::min(k, length == 0 ? 0 : length - 1);
        for (std::size_t j = 1; j <= jmax; ++j) acc += static_cast<double>(j) * f[j] * g[k - j];
        g[k] = acc / static_cast<double>(k);
    }
    return AnalyticPoly(std::move(g));
}

AnalyticPoly truncate_head(const AnalyticPoly& f, std::size_t k) {
    std::vector<Complex> a(f.coeffs().begin(), f.coeffs().end());
    std::fill_n(a.begin(), std::min(k, a.size()), Complex{});
    return AnalyticPoly(std::move(a));
}

}  // namespace hardy
