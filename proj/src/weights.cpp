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

#include "hardy/weights.hpp"

#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

void require_positive_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("binomial weight needs alpha > 0, got " + std::to_string(alpha));
}

void require_wiessler_alpha(double alpha) {
    if (!(alpha >= 1.0) || !std::isfinite(alpha))
        throw DomainError("Wiessler weight needs alpha >= 1, got " + std::to_string(alpha));
}

// One step of the c_alpha recurrence; shared by binom_weight and the cache so both agree bitwise.
inline double binom_step(double previous, double alpha, std::size_t n) {
    return previous * (alpha + static_cast<double>(n) - 1.0) / static_cast<double>(n);
}

}  // namespace

void require_exponent(double p) {
    if (!(p > 0.0 && p <= 2.0))
        throw DomainError("exponent p must lie in (0, 2], got " + std::to_string(p));
}

double binom_weight(double alpha, std::size_t n) {
    require_positive_alpha(alpha);
    double c = 1.0;
    for (std::size_t k = 1; k <= n; ++k) c = binom_step(c, alpha, k);
    return c;
}

double wiessler_weight(double alpha, std::size_t n) {
    require_wiessler_alpha(alpha);
    const double whole = std::floor(alpha);
    return binom_weight(whole, n) * std::pow(alpha / whole, static_cast<double>(n));
}

double hl_weight(double p, std::size_t n) {
    require_exponent(p);
    return std::pow(static_cast<double>(n) + 1.0, 2.0 / p - 1.0);
}

double kappa(double p) {
    require_exponent(p);
    if (p >= 1.0) return 1.0;
    return std::sqrt(2.0 / p) * std::pow(1.0 - p / 2.0, 1.0 / p - 0.5);
}

std::string_view to_string(WeightFamily family) {
    switch (family) {
        case WeightFamily::HardyLittlewood: return "hl";
        case WeightFamily::Binomial: return "binomial";
        case WeightFamily::Wiessler: return "wiessler";
    }
    return "unknown";
}

WeightSequence::WeightSequence(WeightFamily family, double alpha) : family_(family), alpha_(alpha) {
    cache_.push_back(1.0);
}

WeightSequence WeightSequence::hardy_littlewood(double p) {
    require_exponent(p);
    WeightSequence w(WeightFamily::HardyLittlewood, 2.0 / p);
    w.p_ = p;
    return w;
}

WeightSequence WeightSequence::binomial(double alpha) {
    require_positive_alpha(alpha);
    return WeightSequence(WeightFamily::Binomial, alpha);
}

WeightSequence WeightSequence::wiessler(double alpha) {
    require_wiessler_alpha(alpha);
    return WeightSequence(WeightFamily::Wiessler, alpha);
}

double WeightSequence::compute(std::size_t n) const {
    switch (family_) {
        case WeightFamily::HardyLittlewood: return hl_weight(p_, n);
        case WeightFamily::Binomial: return binom_weight(alpha_, n);
        case WeightFamily::Wiessler: return wiessler_weight(alpha_, n);
    }
    return 1.0;
}

double WeightSequence::value(std::size_t n) const {
    if (n < cache_.size()) return cache_[n];
    return compute(n);
}

void WeightSequence::extend_to(std::size_t n) {
    if (n < cache_.size()) return;
    cache_.reserve(n + 1);
    while (cache_.size() <= n) {
        const std::size_t k = cache_.size();
        if (family_ == WeightFamily::Binomial)
            cache_.push_back(binom_step(cache_.back(), alpha_, k));
        else
            cache_.push_back(compute(k));
    }
}

}  // namespace hardy
