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

#ifndef HARDY_INEQUALITIES_HPP
#define HARDY_INEQUALITIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hardy/analytic_poly.hpp"
#include "hardy/series.hpp"
#include "hardy/weights.hpp"

namespace hardy {

enum class InequalityId { HardyClassical, Conjecture, Wiessler, Theorem2, Theorem3, Lemma21 };

std::string_view to_string(InequalityId id);
std::optional<InequalityId> parse_inequality_id(std::string_view name);

enum class Verdict { Holds, Inconclusive, CounterexampleCandidate };

std::string_view to_string(Verdict v);

// Denominators below this leave a ratio undefined. Truncation and lemma ratios also
// need the head difference to exceed the rounding of ||f||^2 itself.
inline constexpr double kUndefinedRatioThreshold = 1e-14;
// A violation beyond combined_error but within this multiple of it is Inconclusive.
inline constexpr double kInconclusiveBand = 10.0;

/// One evaluated instance of an inequality lhs <= rhs.
///
/// `ratio` is the constant the instance implies: lhs/rhs for the contractive
/// inequalities, lhs/||f||^2 for the classical one, the implied eps for Theorem2
/// and the implied C' / gamma for the truncation and lemma forms.
struct InequalityReport {
    InequalityId id = InequalityId::Conjecture;
    double p = 2.0;
    double parameter = 0.0;  // eps, C, C' or gamma; unused for Conjecture/Wiessler
    double lhs = 0.0;
    double rhs = 0.0;
    double deficit = 0.0;  // rhs - lhs
    std::optional<double> ratio;
    double norm_est_error = 0.0;
    double combined_error = 0.0;  // propagated quadrature error plus rounding floor on the deficit
    std::string input_digest;

    Verdict verdict() const;
};

/// sum_{n >= n_from} |a_n|^2 / w(n) over the stored coefficients.
double weighted_coeff_sum(const AnalyticPoly& f, const WeightSequence& w, std::size_t n_from = 0);

InequalityReport check_conjecture(const AnalyticPoly& f, double p, const NormOptions& options = {});
InequalityReport check_conjecture(const AnalyticPoly& f, double p, const NormResult& norm);

InequalityReport check_wiessler(const AnalyticPoly& f, double p, const NormOptions& options = {});
InequalityReport check_wiessler(const AnalyticPoly& f, double p, const NormResult& norm);

InequalityReport check_hardy_classical(const AnalyticPoly& f, double p, double c, const NormOptions& options = {});
InequalityReport check_hardy_classical(const AnalyticPoly& f, double p, double c, const NormResult& norm);

/// |a0|^2 + (p/2)|a1|^2 + eps * sum_{n>=2} |a_n|^2 / (n+1)^{2/p-1} <= ||f||_p^2.
InequalityReport check_theorem2(const AnalyticPoly& f, double p, double eps, const NormOptions& options = {});
InequalityReport check_theorem2(const AnalyticPoly& f, double p, double eps, const NormResult& norm);

struct TruncationDeficit {
    double tail_norm_sq = 0.0;   // ||f - a0 - a1 z||_p^2
    double head_deficit = 0.0;   // ||f||_p^2 - |a0|^2 - (p/2)|a1|^2
    std::optional<double> ratio;
    double norm_sq = 0.0;
    double est_error = 0.0;       // propagated error on tail_norm_sq + head_deficit
    double norm_est_error = 0.0;  // larger of the two quadrature estimates
};

TruncationDeficit truncation_deficit(const AnalyticPoly& f, double p, const NormOptions& options = {});

struct LemmaRatio {
    double num = 0.0;  // ||f - f(0)||_p
    double den = 0.0;  // sqrt(max(0, ||f||_p^2 - |a0|^2))
    std::optional<double> ratio;
    double norm_sq = 0.0;
    double est_error = 0.0;
    double norm_est_error = 0.0;
};

LemmaRatio lemma_ratio(const AnalyticPoly& f, double p, const NormOptions& options = {});

/// Theorem3 form: lhs = tail_norm_sq, rhs = c_prime * head_deficit.
InequalityReport check_theorem3(const AnalyticPoly& f, double p, double c_prime, const NormOptions& options = {});
/// Lemma form squared: lhs = num^2, rhs = gamma^2 den^2.
InequalityReport check_lemma(const AnalyticPoly& f, double p, double gamma, const NormOptions& options = {});

/// Dispatch by id; `parameter` is eps (Theorem2), C (HardyClassical), C' (Theorem3) or gamma (Lemma21).
InequalityReport check(InequalityId id, const AnalyticPoly& f, double p, double parameter,
                       const NormOptions& options = {});

}  // namespace hardy

#endif
