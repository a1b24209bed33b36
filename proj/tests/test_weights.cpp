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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/weights.hpp"
#include "oracles.hpp"

using namespace hardy;

TEST_CASE("binom_weight examples") {
    for (std::size_t n = 0; n <= 40; ++n) CHECK(binom_weight(1.0, n) == 1.0);
    CHECK(binom_weight(2.0, 5) == 6.0);
    CHECK(binom_weight(2.5, 2) == doctest::Approx(4.375).epsilon(1e-15));
    CHECK(binom_weight(2.5, 2) == doctest::Approx(oracle::binom_gamma(2.5, 2)).epsilon(1e-13));
    CHECK(binom_weight(0.3, 0) == 1.0);
    CHECK_THROWS_AS(binom_weight(0.0, 3), DomainError);
    CHECK_THROWS_AS(binom_weight(-1.0, 3), DomainError);
}

TEST_CASE("binom_weight agrees with the Gamma-ratio oracle") {
    for (double alpha : {0.5, 1.7, 3.3, 4.0, 8.0})
        for (unsigned n : {0u, 1u, 7u, 50u, 200u})
            CHECK(binom_weight(alpha, n) == doctest::Approx(oracle::binom_gamma(alpha, n)).epsilon(1e-11));
}

TEST_CASE("binom_weight recurrence consistency") {
    for (double alpha : {0.5, 1.0, 1.7, 2.0, 3.3})
        for (std::size_t n = 1; n <= 200; ++n) {
            const double ratio = binom_weight(alpha, n) / binom_weight(alpha, n - 1);
            const double expected = (alpha + static_cast<double>(n) - 1.0) / static_cast<double>(n);
            CHECK(std::abs(ratio - expected) <= 1e-14 * expected);
        }
}

TEST_CASE("wiessler_weight examples") {
    for (std::size_t n = 0; n <= 30; ++n) CHECK(wiessler_weight(2.0, n) == static_cast<double>(n + 1));
    CHECK(wiessler_weight(2.5, 2) == doctest::Approx(4.6875).epsilon(1e-15));
    CHECK(wiessler_weight(2.5, 0) == 1.0);
    CHECK(wiessler_weight(2.5, 1) == 2.5);
    CHECK_THROWS_AS(wiessler_weight(0.9, 1), DomainError);
}

TEST_CASE("wiessler collapses to binomial at integer alpha") {
    for (double k : {1.0, 2.0, 3.0, 4.0})
        for (std::size_t n = 0; n <= 100; ++n) CHECK(wiessler_weight(k, n) == binom_weight(k, n));
}

TEST_CASE("weight ordering at alpha = 2.5, n = 50") {
    // Phi grows exponentially; c_alpha(n) ~ n^{alpha-1} / Gamma(alpha) sits below (n+1)^{alpha-1}.
    const double phi = wiessler_weight(2.5, 50);
    const double c = binom_weight(2.5, 50);
    const double hl = hl_weight(2.0 / 2.5, 50);
    CHECK(phi > hl);
    CHECK(phi > c);
    CHECK(hl > c);
    CHECK(c * std::tgamma(2.5) / std::pow(50.0, 1.5) == doctest::Approx(1.0).epsilon(0.05));
    for (std::size_t n = 2; n <= 200; ++n) CHECK(wiessler_weight(2.5, n) > binom_weight(2.5, n));
}

TEST_CASE("hl_weight examples") {
    for (std::size_t n = 0; n <= 20; ++n) CHECK(hl_weight(2.0, n) == 1.0);
    CHECK(hl_weight(1.0, 4) == 5.0);
    CHECK(hl_weight(2.0 / 3.0, 2) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK_THROWS_AS(hl_weight(0.0, 1), DomainError);
    CHECK_THROWS_AS(hl_weight(2.5, 1), DomainError);
}

TEST_CASE("kappa") {
    CHECK(kappa(1.0) == 1.0);
    CHECK(kappa(1.5) == 1.0);
    CHECK(kappa(2.0) == 1.0);
    CHECK(kappa(0.5) == doctest::Approx(2.0 * std::pow(0.75, 1.5)).epsilon(1e-15));
    CHECK(kappa(0.5) == doctest::Approx(1.2990381056766580).epsilon(1e-14));
    CHECK(std::abs(kappa(1.0 - 1e-8) - 1.0) <= 1e-6);
    for (double p = 0.05; p < 2.0; p += 0.05) CHECK(0.5 * p * kappa(p) * kappa(p) < 1.0);
    CHECK_THROWS_AS(kappa(0.0), DomainError);
    CHECK_THROWS_AS(kappa(2.01), DomainError);
}

TEST_CASE("kappa(0.5) is not exceeded by random unit-norm samples") {
    // (a + b z)^4 with |a|^2 + |b|^2 = 1 has ||.||_{1/2} = 1 and |a_1| = 4 |a|^3 |b|.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double best = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double t = u(rng);
        best = std::max(best, 4.0 * std::pow(t, 1.5) * std::sqrt(1.0 - t));
    }
    CHECK(best <= kappa(0.5) * (1.0 + 1e-12));
    CHECK(best >= kappa(0.5) * (1.0 - 1e-4));
}

TEST_CASE("WeightSequence families and caching") {
    auto c = WeightSequence::binomial(2.5);
    auto phi = WeightSequence::wiessler(2.5);
    auto hl = WeightSequence::hardy_littlewood(0.8);
    CHECK(c.value(0) == 1.0);
    CHECK(phi.value(0) == 1.0);
    CHECK(hl.value(0) == 1.0);
    CHECK(c.value(1) == 2.5);
    CHECK(phi.value(1) == 2.5);
    CHECK(hl.alpha() == doctest::Approx(2.5));

    const std::vector<double> before{c(10), phi(10), hl(10)};
    c.extend_to(60);
    phi.extend_to(60);
    hl.extend_to(60);
    CHECK(c.cached() == 61);
    CHECK(c(10) == before[0]);
    CHECK(phi(10) == before[1]);
    CHECK(hl(10) == before[2]);
    for (std::size_t n = 0; n <= 60; ++n) {
        CHECK(c(n) == binom_weight(2.5, n));
        CHECK(phi(n) == wiessler_weight(2.5, n));
        CHECK(hl(n) == hl_weight(0.8, n));
        CHECK(std::isfinite(c(n)));
        CHECK(c(n) > 0.0);
    }
    CHECK_THROWS_AS(WeightSequence::binomial(0.0), DomainError);
    CHECK_THROWS_AS(WeightSequence::wiessler(0.5), DomainError);
    CHECK_THROWS_AS(WeightSequence::hardy_littlewood(3.0), DomainError);
}

TEST_CASE("WeightSequence concurrent reads after extension") {
    auto c = WeightSequence::binomial(1.7);
    c.extend_to(500);
    std::vector<double> sums(4, 0.0);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < sums.size(); ++t)
        threads.emplace_back([&, t] {
            for (std::size_t n = 0; n <= 1000; ++n) sums[t] += c(n);
        });
    for (auto& th : threads) th.join();
    for (double s : sums) CHECK(s == sums[0]);
}
