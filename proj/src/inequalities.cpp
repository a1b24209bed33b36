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

#include "hardy/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

#include "hardy/digest.hpp"
#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr std::array<std::pair<InequalityId, std::string_view>, 6> kNames{{
    {InequalityId::HardyClassical, "hardy"},
    {InequalityId::Conjecture, "conjecture"},
    {InequalityId::Wiessler, "wiessler"},
    {InequalityId::Theorem2, "theorem2"},
    {InequalityId::Theorem3, "theorem3"},
    {InequalityId::Lemma21, "lemma"},
}};

constexpr double kRoundingFloor = 1e-12;

std::optional<double> safe_ratio(double num, double den) {
    if (!(std::abs(den) >= kUndefinedRatioThreshold)) return std::nullopt;
    return num / den;
}

// Error on K * v^2 given an error e on v.
double square_error(double k, double v, double e) { return std::abs(k) * (2.0 * v * e + e * e); }

InequalityReport finish(InequalityId id, const AnalyticPoly& f, double p, double parameter, double lhs, double rhs,
                        std::optional<double> ratio, double norm_error, double propagated) {
    InequalityReport r;
    r.id = id;
    r.p = p;
    r.parameter = parameter;
    r.lhs = lhs;
    r.rhs = rhs;
    r.deficit = rhs - lhs;
    r.ratio = ratio;
    r.norm_est_error = norm_error;
    r.combined_error = propagated + kRoundingFloor * (std::abs(lhs) + std::abs(rhs));
    r.input_digest = Digest().add(to_string(id)).add(p).add(parameter).add(f).hex();
    return r;
}

double head_sum(const AnalyticPoly& f, double p) { return std::norm(f[0]) + 0.5 * p * std::norm(f[1]); }

}  // namespace

std::string_view to_string(InequalityId id) {
    for (const auto& [key, name] : kNames)
        if (key == id) return name;
    return "unknown";
}

std::optional<InequalityId> parse_inequality_id(std::string_view name) {
    for (const auto& [key, label] : kNames)
        if (label == name) return key;
    return std::nullopt;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "HOLDS";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::CounterexampleCandidate: return "COUNTEREXAMPLE-CANDIDATE";
    }
    return "unknown";
}

Verdict InequalityReport::verdict() const {
    if (deficit >= -combined_error) return Verdict::Holds;
    if (deficit >= -kInconclusiveBand * combined_error) return Verdict::Inconclusive;
    return Verdict::CounterexampleCandidate;
}

double weighted_coeff_sum(const AnalyticPoly& f, const WeightSequence& w, std::size_t n_from) {
    double s = 0.0;
    for (std::size_t n = n_from; n < f.size(); ++n) {
        const double mag = std::norm(f[n]);
        if (mag != 0.0) s += mag / w.value(n);
    }
    return s;
}

namespace {

// A difference of squared norms is only signal above the threshold and above the
// rounding left by subtracting from ||f||^2.
bool resolved(double difference, double norm_sq) {
    return difference >= kUndefinedRatioThreshold &&
           difference > 16.0 * std::numeric_limits<double>::epsilon() * norm_sq;
}

double sum_with(WeightSequence w, const AnalyticPoly& f, std::size_t n_from) {
    if (f.size() > 0) w.extend_to(f.size() - 1);
    return weighted_coeff_sum(f, w, n_from);
}

}  // namespace

InequalityReport check_conjecture(const AnalyticPoly& f, double p, const NormResult& norm) {
    require_exponent(p);
    const double lhs = sum_with(WeightSequence::binomial(2.0 / p), f, 0);
    const double rhs = norm.value * norm.value;
    return finish(InequalityId::Conjecture, f, p, 0.0, lhs, rhs, safe_ratio(lhs, rhs), norm.est_error,
                  square_error(1.0, norm.value, norm.est_error));
}

InequalityReport check_conjecture(const AnalyticPoly& f, double p, const NormOptions& options) {
    return check_conjecture(f, p, hp_norm(f, p, options));
}

InequalityReport check_wiessler(const AnalyticPoly& f, double p, const NormResult& norm) {
    require_exponent(p);
    const double lhs = sum_with(WeightSequence::wiessler(2.0 / p), f, 0);
    const double rhs = norm.value * norm.value;
    return finish(InequalityId::Wiessler, f, p, 0.0, lhs, rhs, safe_ratio(lhs, rhs), norm.est_error,
                  square_error(1.0, norm.value, norm.est_error));
}

InequalityReport check_wiessler(const AnalyticPoly& f, double p, const NormOptions& options) {
    return check_wiessler(f, p, hp_norm(f, p, options));
}

InequalityReport check_hardy_classical(const AnalyticPoly& f, double p, double c, const NormResult& norm) {
    require_exponent(p);
    if (!(c > 0.0)) throw DomainError("Hardy-Littlewood constant must be positive");
    const double lhs = sum_with(WeightSequence::hardy_littlewood(p), f, 0);
    const double norm_sq = norm.value * norm.value;
    return finish(InequalityId::HardyClassical, f, p, c, lhs, c * norm_sq, safe_ratio(lhs, norm_sq), norm.est_error,
                  square_error(c, norm.value, norm.est_error));
}

InequalityReport check_hardy_classical(const AnalyticPoly& f, double p, double c, const NormOptions& options) {
    return check_hardy_classical(f, p, c, hp_norm(f, p, options));
}

InequalityReport check_theorem2(const AnalyticPoly& f, double p, double eps, const NormResult& norm) {
    require_exponent(p);
    if (!(eps >= 0.0)) throw DomainError("eps must be nonnegative");
    const double head = head_sum(f, p);
    const double tail = sum_with(WeightSequence::hardy_littlewood(p), f, 2);
    const double lhs = head + eps * tail;
    const double rhs = norm.value * norm.value;
    return finish(InequalityId::Theorem2, f, p, eps, lhs, rhs, safe_ratio(rhs - head, tail), norm.est_error,
                  square_error(1.0, norm.value, norm.est_error));
}

InequalityReport check_theorem2(const AnalyticPoly& f, double p, double eps, const NormOptions& options) {
    return check_theorem2(f, p, eps, hp_norm(f, p, options));
}

TruncationDeficit truncation_deficit(const AnalyticPoly& f, double p, const NormOptions& options) {
    require_exponent(p);
    const NormResult tail = hp_norm(truncate_head(f, 2), p, options);
    const NormResult full = hp_norm(f, p, options);
    TruncationDeficit out;
    out.tail_norm_sq = tail.value * tail.value;
    out.norm_sq = full.value * full.value;
    out.head_deficit = out.norm_sq - head_sum(f, p);
    out.est_error = square_error(1.0, tail.value, tail.est_error) + square_error(1.0, full.value, full.est_error);
    out.norm_est_error = std::max(tail.est_error, full.est_error);
    if (resolved(out.head_deficit, out.norm_sq)) out.ratio = out.tail_norm_sq / out.head_deficit;
    return out;
}

LemmaRatio lemma_ratio(const AnalyticPoly& f, double p, const NormOptions& options) {
    require_exponent(p);
    const NormResult tail = hp_norm(truncate_head(f, 1), p, options);
    const NormResult full = hp_norm(f, p, options);
    LemmaRatio out;
    out.num = tail.value;
    out.norm_sq = full.value * full.value;
    out.den = std::sqrt(std::max(0.0, out.norm_sq - std::norm(f[0])));
    out.est_error = square_error(1.0, tail.value, tail.est_error) + square_error(1.0, full.value, full.est_error);
    out.norm_est_error = std::max(tail.est_error, full.est_error);
    if (out.den >= kUndefinedRatioThreshold && resolved(out.den * out.den, out.norm_sq)) out.ratio = out.num / out.den;
    return out;
}

InequalityReport check_theorem3(const AnalyticPoly& f, double p, double c_prime, const NormOptions& options) {
    if (!(c_prime > 0.0)) throw DomainError("C' must be positive");
    const TruncationDeficit t = truncation_deficit(f, p, options);
    const double propagated = t.est_error * std::max(1.0, c_prime);
    return finish(InequalityId::Theorem3, f, p, c_prime, t.tail_norm_sq, c_prime * t.head_deficit, t.ratio,
                  t.norm_est_error, propagated);
}

InequalityReport check_lemma(const AnalyticPoly& f, double p, double gamma, const NormOptions& options) {
    if (!(gamma > 0.0)) throw DomainError("gamma must be positive");
    const LemmaRatio l = lemma_ratio(f, p, options);
    const double propagated = l.est_error * std::max(1.0, gamma * gamma);
    return finish(InequalityId::Lemma21, f, p, gamma, l.num * l.num, gamma * gamma * l.den * l.den, l.ratio,
                  l.norm_est_error, propagated);
}

InequalityReport check(InequalityId id, const AnalyticPoly& f, double p, double parameter, const NormOptions& options) {
    switch (id) {
        case InequalityId::HardyClassical: return check_hardy_classical(f, p, parameter, options);
        case InequalityId::Conjecture: return check_conjecture(f, p, options);
        case InequalityId::Wiessler: return check_wiessler(f, p, options);
        case InequalityId::Theorem2: return check_theorem2(f, p, parameter, options);
        case InequalityId::Theorem3: return check_theorem3(f, p, parameter, options);
        case InequalityId::Lemma21: return check_lemma(f, p, parameter, options);
    }
    throw ArgumentError("unknown inequality id");
}

}  // namespace hardy
