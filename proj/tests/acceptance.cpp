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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/errors.hpp"
#include "hardy/inequalities.hpp"
#include "hardy/search.hpp"
#include "hardy/series.hpp"
#include "hardy/weights.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double coeff_gap(const AnalyticPoly& a, const AnalyticPoly& b) {
    double gap = 0.0;
    for (std::size_t n = 0; n < std::max(a.size(), b.size()); ++n) gap = std::max(gap, std::abs(a[n] - b[n]));
    return gap;
}

Complex random_modulus_root(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(lo + (hi - lo) * u(rng), 2.0 * std::numbers::pi * u(rng));
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome parseval_suite() {
    std::mt19937_64 rng(1001);
    std::uniform_int_distribution<std::size_t> deg(0, 32);
    double norm_gap = 0.0, closed_gap = 0.0;
    for (int i = 0; i < 1000; ++i) {
        AnalyticPoly f = oracle::random_square_poly(rng, deg(rng));
        if (f.is_zero()) f = AnalyticPoly{1.0};
        const NormResult n = hp_norm(f, 2.0);
        const double exact = std::sqrt(f.l2_norm_sq());
        norm_gap = std::max(norm_gap, std::abs(n.value - exact) / exact);
        closed_gap = std::max(closed_gap, std::abs(check_conjecture(f, 2.0, n).deficit));
        closed_gap = std::max(closed_gap, std::abs(check_wiessler(f, 2.0, n).deficit));
        closed_gap = std::max(closed_gap, std::abs(check_hardy_classical(f, 2.0, 1.0, n).deficit));
        const TruncationDeficit t = truncation_deficit(f, 2.0);
        if (t.ratio) closed_gap = std::max(closed_gap, std::abs(*t.ratio - 1.0));
        const LemmaRatio l = lemma_ratio(f, 2.0);
        if (l.ratio) closed_gap = std::max(closed_gap, std::abs(*l.ratio - 1.0));
    }
    return {norm_gap <= 1e-10 && closed_gap <= 1e-8,
            fmt("max rel norm gap %.2e (<= 1e-10), max closed-form gap %.2e (<= 1e-8)", norm_gap, closed_gap)};
}

Outcome equality_family() {
    double worst_deficit = 0.0, worst_side = 0.0;
    for (double p : {0.5, 1.0, 4.0 / 3.0, 2.0}) {
        const double alpha = 2.0 / p;
        for (double w : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            std::size_t n = 0;
            while (static_cast<double>(n) < alpha ||
                   binom_weight(alpha, n) * std::pow(w, static_cast<double>(n)) >= 1e-10)
                ++n;
            const AnalyticPoly f = oracle::equality_family(alpha, w, n);
            const InequalityReport r = check_conjecture(f, p);
            const double closed = std::pow(1.0 - w * w, -alpha);
            worst_deficit = std::max(worst_deficit, std::abs(r.deficit));
            worst_side = std::max({worst_side, std::abs(r.lhs - closed), std::abs(r.rhs - closed)});
        }
    }
    return {worst_deficit <= 1e-6 && worst_side <= 1e-6,
            fmt("max |deficit| %.2e, max side gap to (1-w^2)^(-2/p) %.2e (both <= 1e-6)", worst_deficit, worst_side)};
}

Outcome proven_nonnegativity() {
    std::mt19937_64 rng(1003);
    std::uniform_int_distribution<std::size_t> deg(0, 8);
    const std::vector<double> conj_p = {2.0, 1.0, 2.0 / 3.0, 0.5};
    const std::vector<double> wies_p = {0.5, 0.8, 1.0, 1.3, 1.7, 2.0};
    double worst = std::numeric_limits<double>::infinity();
    std::size_t candidates = 0, failures = 0;
    for (int i = 0; i < 10000; ++i) {
        AnalyticPoly f = oracle::random_square_poly(rng, deg(rng));
        if (f.is_zero()) continue;
        const auto record = [&](const InequalityReport& r) {
            worst = std::min(worst, r.deficit);
            if (r.verdict() == Verdict::CounterexampleCandidate) ++candidates;
        };
        try {
            for (double p : conj_p) record(check_conjecture(f, p));
            for (double p : wies_p) {
                const NormResult norm = hp_norm(f, p);
                record(check_wiessler(f, p, norm));
                record(check_theorem2(f, p, 0.0, norm));
            }
        } catch (const ConvergenceError&) {
            ++failures;
        }
    }
    return {worst >= -1e-7 && candidates == 0 && failures == 0,
            fmt("min deficit %.3e (>= -1e-7), candidates %.0f, quadrature failures %.0f", worst,
                static_cast<double>(candidates), static_cast<double>(failures))};
}

Outcome sharpness() {
    double worst = 0.0;
    const std::vector<double> es = {1e-2, 5e-3, 2.5e-3};
    for (double p : {0.5, 1.0, 1.5}) {
        // least squares d(e) = c2 e^2 + c4 e^4
        double s44 = 0, s48 = 0, s88 = 0, s4d = 0, s8d = 0;
        for (double e : es) {
            const double d = check_theorem2(AnalyticPoly{1.0, e}, p, 0.0, NormOptions{1e-14, 1 << 16, 16}).deficit;
            const double x = e * e, y = x * x;
            s44 += x * x;
            s48 += x * y;
            s88 += y * y;
            s4d += x * d;
            s8d += y * d;
        }
        const double c2 = (s4d * s88 - s8d * s48) / (s44 * s88 - s48 * s48);
        worst = std::max(worst, std::abs(c2));
    }
    return {worst <= 1e-2, fmt("max |e^2 coefficient| %.2e (<= 1e-2)", worst)};
}

Outcome kappa_bound() {
    bool ok = true;
    std::string detail;
    for (double p : {0.5, 0.8, 1.0, 1.5, 2.0}) {
        SearchConfig c;
        c.objective = ObjectiveId::Kappa;
        c.p = p;
        c.degree = 6;
        c.restarts = 20;
        const double v = estimate_kappa_empirical(c).constant.value;
        const double k = kappa(p);
        ok = ok && v <= k * (1.0 + 1e-3) && (p < 1.0 || v >= 0.999);
        detail += fmt("p=%g: %.6f/%.6f ", p, v, k);
    }
    return {ok, detail + "(estimate/kappa)"};
}

Outcome blaschke_suite() {
    std::mt19937_64 rng(1006);
    std::uniform_int_distribution<int> count(0, 6);
    double unimod = 0.0;
    for (int i = 0; i < 100; ++i) {
        std::vector<Complex> zeros(static_cast<std::size_t>(count(rng)));
        for (Complex& w : zeros) w = random_modulus_root(rng, 0.0, 0.95);
        const BlaschkeProduct b(zeros);
        for (int k = 0; k < 256; ++k)
            unimod = std::max(unimod, std::abs(std::abs(b(std::polar(1.0, 2.0 * std::numbers::pi * k / 256.0))) - 1.0));
    }

    std::uniform_int_distribution<int> deg(1, 8);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    double recon = 0.0, norm_gap = 0.0, b1_excess = -1.0;
    for (int i = 0; i < 100; ++i) {
        std::vector<Complex> roots(static_cast<std::size_t>(deg(rng)));
        for (Complex& r : roots)
            r = coin(rng) < 0.5 ? random_modulus_root(rng, 0.0, 0.95) : random_modulus_root(rng, 1.05, 2.0);
        AnalyticPoly f = oracle::from_roots(roots, random_modulus_root(rng, 0.5, 2.0));
        f = f.scaled(1.0 / f.max_abs());
        const FactorizationResult fr = riesz_factorize(f, *f.degree());
        const std::size_t n = std::max(*f.degree(), blaschke_order(fr.blaschke));
        const AnalyticPoly back = series_multiply(blaschke_series(fr.blaschke, n), fr.outer_part.resized(n + 1), n);
        recon = std::max(recon, coeff_gap(back, f));
        for (double p : {0.5, 1.0, 2.0})
            norm_gap = std::max(norm_gap, std::abs(hp_norm(fr.outer_part, p).value - hp_norm(f, p).value));
        const auto bounds = blaschke_coefficient_bounds(fr.blaschke);
        b1_excess = std::max(b1_excess, bounds.b1_abs - std::sqrt(1.0 - bounds.b0_abs * bounds.b0_abs));
    }
    return {unimod <= 1e-12 && recon <= 1e-8 && norm_gap <= 1e-6 && b1_excess <= 1e-12,
            fmt("unimodularity %.1e, reconstruction %.1e, |norm(g)-norm(f)| %.1e", unimod, recon, norm_gap) +
                fmt(", max |b1|-sqrt(1-|b0|^2) %.1e", b1_excess)};
}

Outcome constant_estimation() {
    bool ok = true;
    std::size_t mismatches = 0;
    double min_eps = std::numeric_limits<double>::infinity();
    double min_cp = min_eps, min_gamma = min_eps, gamma1 = 0.0;
    for (double p : {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75}) {
        for (ObjectiveId id : {ObjectiveId::EpsP, ObjectiveId::CpPrime, ObjectiveId::GammaP}) {
            SearchConfig c;
            c.objective = id;
            c.p = p;
            c.degree = 10;
            c.rng_seed = 7;
            const ConstantEstimate a = run_search(c);
            const ConstantEstimate b = run_search(c);
            const double v = a.constant.value;
            if (std::memcmp(&v, &b.constant.value, sizeof v) != 0 || !(a.search.best_poly == b.search.best_poly) ||
                a.search.per_restart_bests != b.search.per_restart_bests)
                ++mismatches;
            ok = ok && std::isfinite(v);
            if (id == ObjectiveId::EpsP) {
                min_eps = std::min(min_eps, v);
                ok = ok && v > 0.0;
            } else {
                double& slot = id == ObjectiveId::CpPrime ? min_cp : min_gamma;
                slot = std::min(slot, v);
                ok = ok && v >= 1.0 - 1e-6;
            }
            if (id == ObjectiveId::GammaP && p == 1.0) gamma1 = v;
        }
    }
    ok = ok && gamma1 >= 1.2686 && mismatches == 0;
    return {ok, fmt("min eps %.4f (> 0), min C' %.4f, min gamma %.4f (>= 1-1e-6)", min_eps, min_cp, min_gamma) +
                    fmt(", gamma(1) %.5f (>= 1.2686), reproducibility mismatches %.0f", gamma1,
                        static_cast<double>(mismatches))};
}

// exp(P) truncated far enough that the partial sum keeps its zeros outside the closed disc
AnalyticPoly zero_free_test_function(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(5);
    for (Complex& z : c) z = {u(rng), u(rng)};
    for (double scale = 0.5;; scale *= 0.5) {
        std::vector<Complex> s(c);
        for (Complex& z : s) z *= scale;
        const AnalyticPoly f = series_exp(AnalyticPoly(s), 48);
        bool outside = true;
        for (const Complex& r : poly_roots(f.trimmed())) outside = outside && std::abs(r) > 1.05;
        if (outside) return f.trimmed();
    }
}

Outcome series_power_identity() {
    std::mt19937_64 rng(1008);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const AnalyticPoly f = zero_free_test_function(rng);
        for (double p : {0.5, 1.0, 1.5}) {
            const double target = std::pow(hp_norm(f, p).value, p);
            std::size_t n = 64;
            AnalyticPoly u = series_power(f, p / 2.0, n);
            for (;;) {
                const AnalyticPoly longer = series_power(f, p / 2.0, 2 * n);
                double tail = 0.0;
                for (std::size_t k = n + 1; k <= 2 * n; ++k) tail += std::norm(longer[k]);
                u = longer;
                n *= 2;
                if (tail < 1e-9) break;
            }
            const double v = hp_norm(u, 2.0).value;
            worst = std::max(worst, std::abs(v * v - target));
        }
    }
    return {worst <= 1e-6, fmt("max |norm(f^(p/2))_2^2 - norm(f)_p^p| %.2e (<= 1e-6)", worst)};
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Parseval suite", 60, parseval_suite},
        {2, "Equality family", 120, equality_family},
        {3, "Proven-case nonnegativity", 600, proven_nonnegativity},
        {4, "Sharpness of p/2", 60, sharpness},
        {5, "Kappa bound", 300, kappa_bound},
        {6, "Blaschke/Riesz suite", 180, blaschke_suite},
        {7, "Constant-estimation properties", 1800, constant_estimation},
        {8, "Series-power identity", 180, series_power_identity},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.pass && secs < c.limit_seconds;
        if (!pass) ++failed;
        std::printf("[%s] %d %s: %s; %.1f s (< %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                    c.limit_seconds);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
