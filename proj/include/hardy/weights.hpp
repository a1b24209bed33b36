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

#ifndef HARDY_WEIGHTS_HPP
#define HARDY_WEIGHTS_HPP

#include <cstddef>
#include <string_view>
#include <vector>

namespace hardy {

/// c_alpha(n) = binom(n + alpha - 1, n), by the multiplicative recurrence
/// c(0) = 1, c(n) = c(n-1) * (alpha + n - 1) / n. Throws DomainError for alpha <= 0.
double binom_weight(double alpha, std::size_t n);

/// Phi_alpha(n) = c_{floor(alpha)}(n) * (alpha / floor(alpha))^n for alpha >= 1.
/// Bitwise equal to binom_weight(alpha, n) when alpha is an integer.
double wiessler_weight(double alpha, std::size_t n);

/// (n + 1)^(2/p - 1) for 0 < p <= 2.
double hl_weight(double p, std::size_t n);

/// Sharp bound on |f'(0)| over the unit ball of H^p.
double kappa(double p);

// Throws DomainError unless 0 < p <= 2.
void require_exponent(double p);

enum class WeightFamily { HardyLittlewood, Binomial, Wiessler };

std::string_view to_string(WeightFamily family);

/// One weight family with its parameter, memoized append-only.
///
/// `alpha` is 2/p for every family (the Hardy-Littlewood weight is (n+1)^(alpha-1)).
/// `value` never mutates, so a sequence shared between threads is safe once
/// `extend_to` has been called by its owner; values past the cache are computed
/// on the fly with the same operation order, so they are identical to cached ones.
class WeightSequence {
   public:
    static WeightSequence hardy_littlewood(double p);
    static WeightSequence binomial(double alpha);
    static WeightSequence wiessler(double alpha);

    WeightFamily family() const noexcept { return family_; }
    double alpha() const noexcept { return alpha_; }

    double value(std::size_t n) const;
    double operator()(std::size_t n) const { return value(n); }

    void extend_to(std::size_t n);
    std::size_t cached() const noexcept { return cache_.size(); }

   private:
    WeightSequence(WeightFamily family, double alpha);

    double compute(std::size_t n) const;

    WeightFamily family_;
    double alpha_;
    double p_ = 0.0;  // HardyLittlewood only
    std::vector<double> cache_;
};

}  // namespace hardy

#endif
