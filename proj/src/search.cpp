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

#include "hardy/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include "hardy/blaschke.hpp"
#include "hardy/digest.hpp"
#include "hardy/errors.hpp"
#include "hardy/weights.hpp"

namespace hardy {

namespace {

constexpr std::array<std::pair<ObjectiveId, std::string_view>, 5> kObjectiveNames{{
    {ObjectiveId::EpsP, "eps-p"},
    {ObjectiveId::CpPrime, "cp-prime"},
    {ObjectiveId::GammaP, "gamma-p"},
    {ObjectiveId::Kappa, "kappa"},
    {ObjectiveId::ConjectureDeficit, "conjecture"},
}};

// Penalized probes sit above every plausible objective value.
constexpr double kPenaltyBase = 1e6;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

using Point = std::vector<double>;

AnalyticPoly to_poly(const Point& x) {
    std::vector<Complex> a(x.size() / 2);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = {x[2 * i], x[2 * i + 1]};
    return AnalyticPoly(std::move(a));
}

Point to_point(const AnalyticPoly& f, std::size_t degree) {
    Point x(2 * (degree + 1));
    for (std::size_t i = 0; i <= degree; ++i) {
        x[2 * i] = f[i].real();
        x[2 * i + 1] = f[i].imag();
    }
    return x;
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Point random_start(const SearchConfig& config, std::size_t restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.rng_seed), static_cast<std::uint32_t>(config.rng_seed >> 32),
                      static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
    std::mt19937_64 rng(seq);
    Point x(2 * (config.degree + 1));
    for (std::size_t i = 0; i <= config.degree; ++i) {
        const double r = std::sqrt(unit_draw(rng));
        const double theta = 2.0 * std::numbers::pi * unit_draw(rng);
        x[2 * i] = r * std::cos(theta);
        x[2 * i + 1] = r * std::sin(theta);
    }
    return x;
}

struct Probe {
    double score = kInfinity;  // sense-adjusted, minimized by the simplex
    std::optional<double> value;  // natural objective value when the probe is valid
};

struct RestartOutcome {
    std::optional<double> best;
    AnalyticPoly best_poly;
    std::size_t evaluations = 0;
    std::size_t undefined = 0;
    std::size_t penalized = 0;
    std::size_t failed_norms = 0;
};

class RestartRunner {
   public:
    RestartRunner(const SearchConfig& config, const Objective& objective, Sense sense)
        : config_(config), objective_(objective), sign_(sense == Sense::Minimize ? 1.0 : -1.0) {}

    RestartOutcome run(Point start) {
        const std::size_t budget = std::max<std::size_t>(1, config_.max_evals_per_restart);
        double scale = config_.simplex_scale;
        double last_best = kInfinity;
        while (out_.evaluations < budget) {
            nelder_mead(start, scale, budget);
            if (!(best_score_ < last_best - 1e-12 * (std::abs(last_best) + 1e-12)) || best_point_.empty()) break;
            last_best = best_score_;
            start = best_point_;
            scale = 0.2 * config_.simplex_scale;
        }
        return out_;
    }

   private:
    Probe evaluate(const Point& x) {
        ++out_.evaluations;
        const AnalyticPoly f = to_poly(x);
        Probe probe;
        const double dist = boundary_distance(f);
        if (dist < config_.boundary_penalty_margin) {
            ++out_.penalized;
            probe.score = kPenaltyBase + config_.boundary_penalty_margin / std::max(dist, 1e-300);
            return probe;
        }
        std::optional<double> v;
        try {
            v = objective_(f);
        } catch (const ConvergenceError&) {
            ++out_.failed_norms;
        }
        if (!v || !std::isfinite(*v)) {
            ++out_.undefined;
            return probe;
        }
        probe.value = v;
        probe.score = sign_ * *v;
        if (probe.score < best_score_) {
            best_score_ = probe.score;
            best_point_ = x;
            out_.best = v;
            out_.best_poly = f;
        }
        return probe;
    }

    void nelder_mead(const Point& start, double scale, std::size_t budget) {
        const std::size_t dim = start.size();
        std::vector<Point> simplex(dim + 1, start);
        std::vector<double> score(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += scale;
        for (std::size_t i = 0; i <= dim && out_.evaluations < budget; ++i) score[i] = evaluate(simplex[i]).score;
        if (out_.evaluations >= budget) return;

        std::vector<std::size_t> order(dim + 1);
        Point centroid(dim);
        Point trial(dim);
        auto combine = [&](double t, const Point& worst) {
            for (std::size_t k = 0; k < dim; ++k) trial[k] = centroid[k] + t * (worst[k] - centroid[k]);
            return trial;
        };

        while (out_.evaluations < budget) {
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
            const std::size_t lo = order.front();
            const std::size_t hi = order.back();
            const std::size_t second = order[dim - 1];

            if (std::isfinite(score[hi])) {
                const double spread = score[hi] - score[lo];
                double diameter = 0.0;
                for (std::size_t i = 0; i <= dim; ++i)
                    for (std::size_t k = 0; k < dim; ++k)
                        diameter = std::max(diameter, std::abs(simplex[i][k] - simplex[lo][k]));
                if (spread <= 1e-13 * (std::abs(score[lo]) + 1e-13) && diameter <= 1e-9) return;
            }

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t i = 0; i <= dim; ++i)
                if (i != hi)
                    for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k];
            for (double& c : centroid) c /= static_cast<double>(dim);

            const Point reflected = combine(-1.0, simplex[hi]);
            const double fr = evaluate(reflected).score;
            if (fr < score[lo]) {
                if (out_.evaluations >= budget) return;
                const Point expanded = combine(-2.0, simplex[hi]);
                const double fe = evaluate(expanded).score;
                if (fe < fr) {
                    simplex[hi] = expanded;
                    score[hi] = fe;
                } else {
                    simplex[hi] = reflected;
                    score[hi] = fr;
                }
                continue;
            }
            if (fr < score[second]) {
                simplex[hi] = reflected;
                score[hi] = fr;
                continue;
            }
            if (out_.evaluations >= budget) return;
            const bool outside = fr < score[hi];
            const Point contracted = combine(outside ? -0.5 : 0.5, simplex[hi]);
            const double fc = evaluate(contracted).score;
            if (outside ? fc <= fr : fc < score[hi]) {
                simplex[hi] = contracted;
                score[hi] = fc;
                continue;
            }
            for (std::size_t i = 0; i <= dim && out_.evaluations < budget; ++i) {
                if (i == lo) continue;
                for (std::size_t k = 0; k < dim; ++k) simplex[i][k] = simplex[lo][k] + 0.5 * (simplex[i][k] - simplex[lo][k]);
                score[i] = evaluate(simplex[i]).score;
            }
        }
    }

    const SearchConfig& config_;
    const Objective& objective_;
    double sign_;
    double best_score_ = kInfinity;
    Point best_point_;
    RestartOutcome out_;
};

EstimatedConstant make_constant(const SearchConfig& config, const SearchResult& result) {
    EstimatedConstant c;
    c.id = config.objective;
    c.p = config.p;
    c.value = result.best_value;
    c.degree_cap = config.degree;
    c.provenance = config.digest();
    if (config.objective == ObjectiveId::Kappa) c.theoretical_bound = kappa(config.p);
    return c;
}

ConstantEstimate estimate(const SearchConfig& config, ObjectiveId expected) {
    if (config.objective != expected)
        throw ArgumentError("search config objective is " + std::string(to_string(config.objective)) + ", expected " +
                            std::string(to_string(expected)));
    auto [objective, sense] = make_objective(config);
    SearchResult result = optimize(config, objective, sense);
    EstimatedConstant constant = make_constant(config, result);
    return {std::move(constant), std::move(result)};
}

}  // namespace

std::string_view to_string(ObjectiveId id) {
    for (const auto& [key, name] : kObjectiveNames)
        if (key == id) return name;
    return "unknown";
}

std::optional<ObjectiveId> parse_objective_id(std::string_view name) {
    for (const auto& [key, label] : kObjectiveNames)
        if (label == name) return key;
    return std::nullopt;
}

std::string SearchConfig::digest() const {
    Digest d;
    d.add(to_string(objective)).add(p).add(static_cast<std::uint64_t>(degree)).add(static_cast<std::uint64_t>(restarts));
    d.add(static_cast<std::uint64_t>(max_evals_per_restart)).add(rng_seed).add(boundary_penalty_margin);
    d.add(min_denominator).add(simplex_scale).add(norm.rel_tol).add(static_cast<std::uint64_t>(norm.m_max));
    d.add(static_cast<std::uint64_t>(norm.m_min)).add(static_cast<std::uint64_t>(seeds.size()));
    for (const AnalyticPoly& s : seeds) d.add(s);
    return d.hex();
}

double boundary_distance(const AnalyticPoly& f) {
    const auto deg = f.degree();
    if (!deg || *deg == 0) return kInfinity;
    double dist = kInfinity;
    for (const Complex& r : poly_roots(f)) dist = std::min(dist, std::abs(std::abs(r) - 1.0));
    return dist;
}

SearchResult optimize(const SearchConfig& config, const Objective& objective, Sense sense) {
    if (config.restarts == 0) throw ArgumentError("search needs at least one restart");
    require_exponent(config.p);

    const std::size_t restarts = config.restarts;
    std::vector<RestartOutcome> outcomes(restarts);
    const auto count = static_cast<std::ptrdiff_t>(restarts);
    const bool parallel = config.execution == Execution::Parallel;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (std::ptrdiff_t r = 0; r < count; ++r) {
        const auto idx = static_cast<std::size_t>(r);
        Point start = idx < config.seeds.size() ? to_point(config.seeds[idx], config.degree) : random_start(config, idx);
        RestartRunner runner(config, objective, sense);
        outcomes[idx] = runner.run(std::move(start));
    }

    SearchResult result;
    const double sign = sense == Sense::Minimize ? 1.0 : -1.0;
    bool found = false;
    std::size_t undefined = 0;
    std::size_t penalized = 0;
    std::size_t failed = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
        const RestartOutcome& o = outcomes[r];
        result.evaluations += o.evaluations;
        result.per_restart_bests.push_back(o.best);
        result.per_restart_polys.push_back(o.best_poly);
        undefined += o.undefined;
        penalized += o.penalized;
        failed += o.failed_norms;
        if (o.best && (!found || sign * *o.best < sign * result.best_value)) {
            found = true;
            result.best_value = *o.best;
            result.best_poly = o.best_poly;
            result.best_restart = r;
        }
    }
    if (undefined > 0) result.inconclusive_flags.push_back("undefined probes: " + std::to_string(undefined));
    if (penalized > 0) result.inconclusive_flags.push_back("boundary-penalized probes: " + std::to_string(penalized));
    if (failed > 0) result.inconclusive_flags.push_back("quadrature failures: " + std::to_string(failed));
    if (!found)
        throw SearchFailure("no valid probe in " + std::to_string(result.evaluations) + " evaluations (" +
                            std::to_string(undefined) + " undefined, " + std::to_string(penalized) + " penalized)");
    return result;
}

std::pair<Objective, Sense> make_objective(const SearchConfig& config) {
    const double p = config.p;
    const NormOptions norm = config.norm;
    const double floor = config.min_denominator;
    switch (config.objective) {
        case ObjectiveId::EpsP: {
            const double threshold = std::max(1e-12, floor);
            auto weights = WeightSequence::hardy_littlewood(p);
            weights.extend_to(config.degree);
            return {[=](const AnalyticPoly& f) -> std::optional<double> {
                        const double v = hp_norm(f, p, norm).value;
                        if (!(v > 0.0)) return std::nullopt;
                        const double scale = 1.0 / (v * v);
                        const double num = 1.0 - scale * (std::norm(f[0]) + 0.5 * p * std::norm(f[1]));
                        const double den = scale * weighted_coeff_sum(f, weights, 2);
                        if (!(den >= threshold)) return std::nullopt;
                        return num / den;
                    },
                    Sense::Minimize};
        }
        case ObjectiveId::CpPrime:
            return {[=](const AnalyticPoly& f) -> std::optional<double> {
                        const TruncationDeficit t = truncation_deficit(f, p, norm);
                        if (!(t.norm_sq > 0.0) || !t.ratio) return std::nullopt;
                        if (!(t.head_deficit / t.norm_sq >= floor)) return std::nullopt;
                        return t.ratio;
                    },
                    Sense::Maximize};
        case ObjectiveId::GammaP:
            return {[=](const AnalyticPoly& f) -> std::optional<double> {
                        const LemmaRatio l = lemma_ratio(f, p, norm);
                        if (!(l.norm_sq > 0.0) || !l.ratio) return std::nullopt;
                        if (!(l.den * l.den / l.norm_sq >= floor)) return std::nullopt;
                        return l.ratio;
                    },
                    Sense::Maximize};
        case ObjectiveId::Kappa:
            return {[=](const AnalyticPoly& f) -> std::optional<double> {
                        const double v = hp_norm(f, p, norm).value;
                        if (!(v > 0.0)) return std::nullopt;
                        return std::abs(f[1]) / v;
                    },
                    Sense::Maximize};
        case ObjectiveId::ConjectureDeficit:
            return {[=](const AnalyticPoly& f) -> std::optional<double> {
                        const NormResult n = hp_norm(f, p, norm);
                        if (!(n.value > 0.0)) return std::nullopt;
                        return check_conjecture(f, p, n).deficit / (n.value * n.value);
                    },
                    Sense::Minimize};
    }
    throw ArgumentError("unknown objective");
}

ConstantEstimate estimate_eps_p(const SearchConfig& config) { return estimate(config, ObjectiveId::EpsP); }
ConstantEstimate estimate_cp_prime(const SearchConfig& config) { return estimate(config, ObjectiveId::CpPrime); }
ConstantEstimate estimate_gamma_p(const SearchConfig& config) { return estimate(config, ObjectiveId::GammaP); }
ConstantEstimate estimate_kappa_empirical(const SearchConfig& config) { return estimate(config, ObjectiveId::Kappa); }

SearchResult conjecture_stress(const SearchConfig& config) {
    SearchResult result = estimate(config, ObjectiveId::ConjectureDeficit).search;
    for (std::size_t r = 0; r < result.per_restart_polys.size(); ++r) {
        if (!result.per_restart_bests[r]) continue;
        const AnalyticPoly& f = result.per_restart_polys[r];
        InequalityReport report = check_conjecture(f, config.p, config.norm);
        if (report.verdict() == Verdict::CounterexampleCandidate) result.counterexamples.push_back({f, report, r});
        else if (report.verdict() == Verdict::Inconclusive)
            result.inconclusive_flags.push_back("restart " + std::to_string(r) + " deficit within error band: " +
                                                std::to_string(report.deficit));
    }
    return result;
}

ConstantEstimate run_search(const SearchConfig& config) {
    if (config.objective == ObjectiveId::ConjectureDeficit) {
        SearchResult result = conjecture_stress(config);
        EstimatedConstant constant = make_constant(config, result);
        return {std::move(constant), std::move(result)};
    }
    return estimate(config, config.objective);
}

}  // namespace hardy
