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

#ifndef HARDY_SEARCH_HPP
#define HARDY_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardy/analytic_poly.hpp"
#include "hardy/inequalities.hpp"
#include "hardy/series.hpp"

namespace hardy {

enum class ObjectiveId { EpsP, CpPrime, GammaP, Kappa, ConjectureDeficit };

std::string_view to_string(ObjectiveId id);
std::optional<ObjectiveId> parse_objective_id(std::string_view name);

enum class Sense { Minimize, Maximize };
enum class Execution { Serial, Parallel };

struct SearchConfig {
    ObjectiveId objective = ObjectiveId::EpsP;
    double p = 1.0;
    std::size_t degree = 4;
    std::size_t restarts = 8;
    std::size_t max_evals_per_restart = 2000;
    std::uint64_t rng_seed = 1;
    double boundary_penalty_margin = 1e-3;
    // Normalized denominators below this leave a ratio objective undefined.
    double min_denominator = 1e-10;
    double simplex_scale = 0.25;
    NormOptions norm{1e-10, std::size_t{1} << 18, 16};
    // Start points for the first restarts, ahead of random draws.
    std::vector<AnalyticPoly> seeds;
    Execution execution = Execution::Parallel;

    /// Hex digest of every field that affects the result (not `execution`).
    std::string digest() const;
};

struct CounterexampleCandidate {
    AnalyticPoly poly;
    InequalityReport report;
    std::size_t restart = 0;
};

struct SearchResult {
    AnalyticPoly best_poly;
    double best_value = 0.0;
    std::size_t best_restart = 0;
    std::size_t evaluations = 0;
    std::vector<std::optional<double>> per_restart_bests;
    std::vector<AnalyticPoly> per_restart_polys;
    std::vector<std::string> inconclusive_flags;
    std::vector<CounterexampleCandidate> counterexamples;
};

/// Objective over coefficient vectors; nullopt marks an undefined probe, which is skipped.
using Objective = std::function<std::optional<double>(const AnalyticPoly&)>;

/// Nelder-Mead over the 2 (degree + 1) real coordinates of the coefficients, one run
/// (with simplex re-initialization at the incumbent) per restart. Restart r starts at
/// seeds[r] when present, else at a point drawn uniformly from the unit polydisc by a
/// generator seeded with (rng_seed, r). Probes with a root within the boundary margin
/// of the circle get a penalty instead of an evaluation. The merged result takes the
/// best restart, ties to the lowest index, independent of completion order.
/// Throws SearchFailure when no probe was valid.
SearchResult optimize(const SearchConfig& config, const Objective& objective, Sense sense);

/// Distance from the nearest root of f to the circle (infinity for constants).
double boundary_distance(const AnalyticPoly& f);

struct EstimatedConstant {
    ObjectiveId id = ObjectiveId::EpsP;
    double p = 1.0;
    double value = 0.0;
    std::size_t degree_cap = 0;
    std::string provenance;
    std::optional<double> theoretical_bound;  // kappa(p) for the Kappa estimate
};

struct ConstantEstimate {
    EstimatedConstant constant;
    SearchResult search;
};

/// Objective and search sense used by the estimate for `config.objective`.
std::pair<Objective, Sense> make_objective(const SearchConfig& config);

/// Observed infimum of (||f||^2 - |a0|^2 - (p/2)|a1|^2) / sum_{n>=2} |a_n|^2/(n+1)^{2/p-1}.
ConstantEstimate estimate_eps_p(const SearchConfig& config);
/// Observed supremum of the truncation ratio.
ConstantEstimate estimate_cp_prime(const SearchConfig& config);
/// Observed supremum of ||f - f(0)|| / sqrt(||f||^2 - |f(0)|^2).
ConstantEstimate estimate_gamma_p(const SearchConfig& config);
/// Observed supremum of |a1| / ||f||_p, reported next to kappa(p).
ConstantEstimate estimate_kappa_empirical(const SearchConfig& config);
/// Minimal conjecture deficit at ||f||_p = 1; restart bests failing the check are
/// collected as counterexample candidates.
SearchResult conjecture_stress(const SearchConfig& config);

/// Dispatch on config.objective; ConjectureDeficit yields the minimal deficit as value.
ConstantEstimate run_search(const SearchConfig& config);

}  // namespace hardy

#endif
