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

#include "hardy/blaschke.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/kernels.hpp"
#include "hardy/series.hpp"

namespace hardy {

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, Complex front_phase)
    : zeros_(std::move(zeros)), front_phase_(front_phase) {
    for (const Complex& w : zeros_)
        if (!(std::abs(w) < 1.0 - 1e-12))
            throw ArgumentError("Blaschke zero of modulus " + std::to_string(std::abs(w)) + " is not interior");
    if (std::abs(std::abs(front_phase_) - 1.0) > 1e-14) throw ArgumentError("front phase must be unimodular");
}

Complex BlaschkeProduct::operator()(Complex z) const {
    Complex acc = front_phase_;
    for (const Complex& w : zeros_) acc *= (z - w) / (1.0 - z * std::conj(w));
    return acc;
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) { return b(z); }

AnalyticPoly blaschke_series(const BlaschkeProduct& b, std::size_t n) {
    std::vector<Complex> one(n + 1);
    one[0] = b.front_phase();
    AnalyticPoly acc(std::move(one));
    std::vector<Complex> factor(n + 1);
    for (const Complex& w : b.zeros()) {
        const Complex wbar = std::conj(w);
        const double gap = 1.0 - std::norm(w);
        factor[0] = -w;
        Complex power = 1.0;
        for (std::size_t k = 1; k <= n; ++k) {
            factor[k] = gap * power;
            power *= wbar;
        }
        acc = series_multiply(acc, AnalyticPoly(factor), n);
    }
    return acc;
}

std::size_t blaschke_order(const BlaschkeProduct& b, double tol) {
    double r = 0.0;
    for (const Complex& w : b.zeros()) r = std::max(r, std::abs(w));
    const std::size_t count = b.zeros().size();
    if (r == 0.0) return count;
    const auto needed = static_cast<std::size_t>(std::ceil(std::log(tol) / std::log(r))) + 1;
    return std::max(count, needed);
}

namespace {

// q(z) and q'(z) by Horner, coefficients low to high.
void horner(std::span<const Complex> q, Complex z, Complex& value, Complex& slope) {
    value = 0.0;
    slope = 0.0;
    for (std::size_t k = q.size(); k-- > 0;) {
        slope = slope * z + value;
        value = value * z + q[k];
    }
}

std::vector<Complex> companion_eigenvalues(std::span<const Complex> q) {
    const std::size_t k = q.size() - 1;
    if (k == 1) return {-q[0] / q[1]};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    for (std::size_t i = 1; i < k; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k - 1)) = -q[i] / q[k];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("companion eigenvalue solver failed");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

void aberth_polish(std::span<const Complex> q, std::vector<Complex>& z) {
    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double largest_step = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            Complex value;
            Complex slope;
            horner(q, z[i], value, slope);
            if (value == Complex{} || slope == Complex{}) continue;
            const Complex newton = value / slope;
            Complex repulsion{};
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i && z[j] != z[i]) repulsion += 1.0 / (z[i] - z[j]);
            const Complex step = newton / (1.0 - newton * repulsion);
            const Complex candidate = z[i] - step;
            Complex cand_value;
            Complex cand_slope;
            horner(q, candidate, cand_value, cand_slope);
            if (!(std::abs(cand_value) <= std::abs(value))) continue;
            largest_step = std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(candidate)));
            z[i] = candidate;
        }
        if (largest_step <= 1e-15) break;
    }
}

}  // namespace

std::vector<Complex> poly_roots(const AnalyticPoly& f) {
    const auto d = f.degree();
    if (!d || *d == 0) throw ArgumentError("poly_roots needs a polynomial of degree >= 1");
    const auto a = f.coeffs().first(*d + 1);
    std::size_t origin = 0;
    while (a[origin] == Complex{}) ++origin;

    std::vector<Complex> roots(origin, Complex{});
    if (origin < *d) {
        const auto q = a.subspan(origin);
        std::vector<Complex> rest = companion_eigenvalues(q);
        aberth_polish(q, rest);
        roots.insert(roots.end(), rest.begin(), rest.end());
    }
    std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
        const double mx = std::abs(x);
        const double my = std::abs(y);
        if (mx != my) return mx < my;
        return std::arg(x) < std::arg(y);
    });
    return roots;
}

FactorizationResult riesz_factorize(const AnalyticPoly& f, std::size_t n) {
    const auto d = f.degree();
    if (!d) throw ArgumentError("cannot factor the zero polynomial");
    if (n < *d) throw ArgumentError("truncation order " + std::to_string(n) + " is below degree " + std::to_string(*d));

    FactorizationResult result;
    std::vector<Complex> interior;
    if (*d > 0) {
        for (const Complex& r : poly_roots(f)) {
            const double mod = std::abs(r);
            if (mod < 1.0 - kInteriorRootMargin)
                interior.push_back(r);
            else if (mod <= 1.0 + kInteriorRootMargin)
                result.boundary_roots.push_back(r);
        }
    }

    // Forward deflation by (z - w) is stable for |w| < 1; roots arrive sorted by modulus.
    std::vector<Complex> g(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(*d + 1));
    for (const Complex& w : interior) {
        const std::size_t deg = g.size() - 1;
        std::vector<Complex> quotient(deg);
        quotient[deg - 1] = g[deg];
        for (std::size_t k = deg - 1; k > 0; --k) quotient[k - 1] = g[k] + w * quotient[k];
        g = std::move(quotient);
    }
    for (const Complex& w : interior) {
        const Complex wbar = std::conj(w);
        std::vector<Complex> next(g.size() + 1);
        for (std::size_t k = 0; k < g.size(); ++k) {
            next[k] += g[k];
            next[k + 1] -= wbar * g[k];
        }
        g = std::move(next);
    }

    result.blaschke = BlaschkeProduct(std::move(interior));
    result.outer_part = AnalyticPoly(std::move(g)).resized(n + 1);

    const std::size_t grid = std::max<std::size_t>(256, next_power_of_two(2 * (n + 1)));
    result.residual_grid = grid;
    result.residual = max_modulus_gap(eval_on_circle(result.outer_part, grid).samples, eval_on_circle(f, grid).samples);
    return result;
}

BlaschkeCoefficientBounds blaschke_coefficient_bounds(const BlaschkeProduct& b) {
    BlaschkeCoefficientBounds out;
    for (const Complex& w : b.zeros()) {
        out.b0_abs *= std::abs(w);
        out.sum_one_minus_mod += 1.0 - std::abs(w);
    }
    out.b1_abs = std::abs(blaschke_series(b, 1)[1]);
    const double cap = std::sqrt(std::max(0.0, 1.0 - out.b0_abs * out.b0_abs));
    if (out.b1_abs > cap + 1e-12)
        throw std::logic_error("|b_1| = " + std::to_string(out.b1_abs) + " exceeds sqrt(1 - |b_0|^2) = " +
                               std::to_string(cap));
    return out;
}

}  // namespace hardy
