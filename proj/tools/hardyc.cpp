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

// hardyc: command-line front end for the Hardy-space inequality toolkit.
//
// Exit codes: 0 ok, 2 usage/parse, 3 numeric or search failure,
// 4 counterexample candidate, 5 inconclusive.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/errors.hpp"
#include "hardy/inequalities.hpp"
#include "hardy/io.hpp"
#include "hardy/kernels.hpp"
#include "hardy/search.hpp"
#include "hardy/series.hpp"
#include "hardy/weights.hpp"

namespace {

using namespace hardy;

enum Exit : int { kOk = 0, kUsage = 2, kNumeric = 3, kCounterexample = 4, kInconclusive = 5 };

struct Common {
    std::string command_line;
    double rel_tol = 1e-10;
    std::size_t m_max = std::size_t{1} << 22;
    std::string format = "text";

    NormOptions norm() const { return {rel_tol, m_max, 16}; }

    RunManifest manifest(std::uint64_t seed = 0) const { return manifest(norm(), seed); }

    RunManifest manifest(const NormOptions& used, std::uint64_t seed) const {
        RunManifest m;
        m.command_line = command_line;
        m.rng_seed = seed;
        m.tolerances = {{"rel_tol", used.rel_tol}, {"m_max", static_cast<double>(used.m_max)}};
        m.timestamp = utc_timestamp();
        return m;
    }
};

void add_norm_flags(CLI::App* cmd, Common& common, const std::string& grid_help = "Largest quadrature grid") {
    cmd->add_option("--rel-tol", common.rel_tol, "Quadrature relative tolerance")->capture_default_str();
    cmd->add_option("--m-max", common.m_max, grid_help)->capture_default_str();
}

Json stamped(Json record, const RunManifest& m) {
    record["manifest_digest"] = m.digest();
    return record;
}

// ---------------------------------------------------------------------------- weights

struct WeightsArgs {
    std::string family;
    std::optional<double> alpha;
    std::optional<double> p;
    std::size_t n_max = 10;
};

int cmd_weights(const WeightsArgs& args, const Common& common) {
    if (args.alpha && args.p) {
        std::cerr << "weights: give either --alpha or --p\n";
        return kUsage;
    }
    if (!args.alpha && !args.p) {
        std::cerr << "weights: one of --alpha or --p is required\n";
        return kUsage;
    }
    std::optional<WeightSequence> w;
    if (args.family == "hl")
        w = WeightSequence::hardy_littlewood(args.p ? *args.p : 2.0 / *args.alpha);
    else if (args.family == "binomial")
        w = WeightSequence::binomial(args.alpha ? *args.alpha : 2.0 / *args.p);
    else if (args.family == "wiessler")
        w = WeightSequence::wiessler(args.alpha ? *args.alpha : 2.0 / *args.p);
    else {
        std::cerr << "weights: unknown family '" << args.family << "'\n";
        return kUsage;
    }
    w->extend_to(args.n_max);
    if (common.format == "csv") std::cout << "n,weight\n";
    const RunManifest m = common.manifest();
    for (std::size_t n = 0; n <= args.n_max; ++n) {
        if (common.format == "json") {
            Json row;
            row["record"] = "weight";
            row["family"] = to_string(w->family());
            row["alpha"] = w->alpha();
            row["n"] = n;
            row["value"] = w->value(n);
            std::cout << stamped(row, m).dump() << '\n';
        } else if (common.format == "csv") {
            std::cout << n << ',' << format_double(w->value(n)) << '\n';
        } else {
            std::cout << n << ' ' << format_double(w->value(n)) << '\n';
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------- norm

int cmd_norm(const std::string& coeffs, double p, const Common& common) {
    const AnalyticPoly f = read_coefficient_file(coeffs);
    const NormResult n = hp_norm(f, p, common.norm());
    if (common.format == "json") {
        std::cout << stamped(to_json(n, p), common.manifest()).dump() << '\n';
    } else {
        std::cout << "value " << format_double(n.value) << '\n'
                  << "grid_size_used " << n.grid_size_used << '\n'
                  << "est_error " << format_double(n.est_error) << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------- check

int cmd_check(const std::string& coeffs, const std::string& id_name, double p, std::optional<double> eps,
              std::optional<double> c, const Common& common) {
    const auto id = parse_inequality_id(id_name);
    if (!id) {
        std::cerr << "check: unknown inequality id '" << id_name << "'\n";
        return kUsage;
    }
    double parameter = 0.0;
    if (*id == InequalityId::Theorem2) {
        if (c) {
            std::cerr << "check: theorem2 takes --eps, not --C\n";
            return kUsage;
        }
        parameter = eps.value_or(0.0);
    } else if (*id == InequalityId::HardyClassical || *id == InequalityId::Theorem3 || *id == InequalityId::Lemma21) {
        if (eps) {
            std::cerr << "check: " << id_name << " takes --C, not --eps\n";
            return kUsage;
        }
        parameter = c.value_or(1.0);
    } else if (eps || c) {
        std::cerr << "check: " << id_name << " takes no constant\n";
        return kUsage;
    }
    const AnalyticPoly f = read_coefficient_file(coeffs);
    const InequalityReport r = check(*id, f, p, parameter, common.norm());
    if (common.format == "json") {
        std::cout << stamped(to_json(r), common.manifest()).dump() << '\n';
    } else {
        std::cout << to_string(r.id) << " p=" << format_double(r.p) << " lhs=" << format_double(r.lhs)
                  << " rhs=" << format_double(r.rhs) << " deficit=" << format_double(r.deficit)
                  << " ratio=" << (r.ratio ? format_double(*r.ratio) : std::string("undefined"))
                  << " verdict=" << to_string(r.verdict()) << '\n';
    }
    switch (r.verdict()) {
        case Verdict::Holds: return kOk;
        case Verdict::Inconclusive: return kInconclusive;
        case Verdict::CounterexampleCandidate: return kCounterexample;
    }
    return kNumeric;
}

// ---------------------------------------------------------------------------- factor

int cmd_factor(const std::string& coeffs, std::optional<std::size_t> order, const Common& common) {
    const AnalyticPoly f = read_coefficient_file(coeffs);
    if (f.is_zero()) {
        std::cerr << "factor: the zero polynomial has no factorization\n";
        return kUsage;
    }
    const std::size_t degree = *f.degree();
    const FactorizationResult r = riesz_factorize(f, order.value_or(degree));
    if (common.format == "json") {
        std::cout << stamped(to_json(r), common.manifest()).dump() << '\n';
        return kOk;
    }
    std::cout << "zeros";
    for (const Complex& w : r.blaschke.zeros()) std::cout << ' ' << format_double(w.real()) << ',' << format_double(w.imag());
    std::cout << "\nouter\n";
    write_coefficients(std::cout, r.outer_part.trimmed());
    std::cout << "residual " << format_double(r.residual) << '\n';
    if (!r.boundary_roots.empty()) {
        std::cout << "boundary_roots";
        for (const Complex& w : r.boundary_roots) std::cout << ' ' << format_double(w.real()) << ',' << format_double(w.imag());
        std::cout << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------- search / sweep

struct SearchArgs {
    std::string objective;
    double p = 1.0;
    std::size_t degree = 4;
    std::size_t restarts = 8;
    std::size_t max_evals = 2000;
    std::uint64_t seed = 1;
    double margin = 1e-3;
    double min_denominator = 1e-10;
    std::string out;
    std::vector<std::string> seed_files;
};

std::optional<SearchConfig> make_config(const SearchArgs& args, const Common& common) {
    const auto id = parse_objective_id(args.objective);
    if (!id) {
        std::cerr << "unknown objective '" << args.objective << "'\n";
        return std::nullopt;
    }
    SearchConfig config;
    config.objective = *id;
    config.p = args.p;
    config.degree = args.degree;
    config.restarts = args.restarts;
    config.max_evals_per_restart = args.max_evals;
    config.rng_seed = args.seed;
    config.boundary_penalty_margin = args.margin;
    config.min_denominator = args.min_denominator;
    config.norm.rel_tol = common.rel_tol;
    config.norm.m_max = std::min<std::size_t>(common.m_max, config.norm.m_max);
    for (const std::string& path : args.seed_files) config.seeds.push_back(read_coefficient_file(path));
    return config;
}

std::string summary_line(const SearchConfig& config, const ConstantEstimate& e) {
    std::ostringstream s;
    s << "objective=" << to_string(config.objective) << " p=" << format_double(config.p) << " degree=" << config.degree
      << " value=" << format_double(e.constant.value) << " evaluations=" << e.search.evaluations
      << " restarts=" << config.restarts;
    if (e.constant.theoretical_bound) s << " kappa=" << format_double(*e.constant.theoretical_bound);
    if (!e.search.counterexamples.empty()) s << " counterexample_candidates=" << e.search.counterexamples.size();
    return s.str();
}

int cmd_search(const SearchArgs& args, const Common& common) {
    const auto config = make_config(args, common);
    if (!config) return kUsage;
    require_exponent(config->p);
    const RunManifest manifest = common.manifest(config->norm, config->rng_seed);
    std::ofstream out;
    if (!args.out.empty()) {
        out.open(args.out);
        if (!out) {
            std::cerr << "search: cannot write " << args.out << '\n';
            return kUsage;
        }
        out << to_json(manifest).dump() << '\n';
    }
    try {
        const ConstantEstimate e = run_search(*config);
        if (out.is_open()) {
            out << stamped(to_json(e.search, *config), manifest).dump() << '\n';
            out << stamped(to_json(e.constant), manifest).dump() << '\n';
        }
        std::cout << summary_line(*config, e) << '\n';
        return e.search.counterexamples.empty() ? kOk : kCounterexample;
    } catch (const SearchFailure& err) {
        if (out.is_open()) {
            Json failure;
            failure["record"] = "search_failure";
            failure["objective"] = to_string(config->objective);
            failure["p"] = config->p;
            failure["degree"] = config->degree;
            failure["message"] = err.what();
            out << stamped(failure, manifest).dump() << '\n';
        }
        std::cerr << "search failed: " << err.what() << '\n';
        return kNumeric;
    }
}

std::optional<std::vector<double>> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (used != item.size()) return std::nullopt;
        grid.push_back(v);
    }
    return grid;
}

int cmd_sweep(const SearchArgs& args, const std::string& grid_text, const std::string& csv_path, const Common& common) {
    const auto grid = parse_grid(grid_text);
    if (!grid) {
        std::cerr << "sweep: cannot parse --p-grid '" << grid_text << "'\n";
        return kUsage;
    }
    if (grid->empty()) {
        std::cerr << "sweep: empty p grid\n";
        return kUsage;
    }
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const double p = (*grid)[i];
        if (!(p > 0.0 && p <= 2.0) || (i > 0 && !(p > (*grid)[i - 1]))) {
            std::cerr << "sweep: p grid must be strictly increasing within (0, 2]\n";
            return kUsage;
        }
    }
    auto base = make_config(args, common);
    if (!base) return kUsage;

    struct Cell {
        SearchConfig config;
        std::optional<ConstantEstimate> estimate;
        std::string failure;
    };
    std::vector<Cell> cells;
    for (double p : *grid) {
        SearchConfig c = *base;
        c.p = p;
        c.execution = Execution::Serial;
        cells.push_back({c, std::nullopt, {}});
    }
    const auto count = static_cast<std::ptrdiff_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        Cell& cell = cells[static_cast<std::size_t>(i)];
        try {
            cell.estimate = run_search(cell.config);
        } catch (const std::exception& err) {
            cell.failure = err.what();
        }
    }

    const RunManifest manifest = common.manifest(base->norm, base->rng_seed);
    std::ofstream records;
    if (!args.out.empty()) {
        records.open(args.out);
        if (!records) {
            std::cerr << "sweep: cannot write " << args.out << '\n';
            return kUsage;
        }
        records << to_json(manifest).dump() << '\n';
    }
    std::ofstream csv_file;
    if (!csv_path.empty()) {
        csv_file.open(csv_path);
        if (!csv_file) {
            std::cerr << "sweep: cannot write " << csv_path << '\n';
            return kUsage;
        }
    }
    std::ostream& csv = csv_path.empty() ? std::cout : csv_file;
    csv << "p,value,degree,evaluations\n";
    std::size_t ok = 0;
    for (const Cell& cell : cells) {
        if (cell.estimate) {
            ++ok;
            csv << format_double(cell.config.p) << ',' << format_double(cell.estimate->constant.value) << ','
                << cell.config.degree << ',' << cell.estimate->search.evaluations << '\n';
            if (records.is_open()) {
                records << stamped(to_json(cell.estimate->search, cell.config), manifest).dump() << '\n';
                records << stamped(to_json(cell.estimate->constant), manifest).dump() << '\n';
            }
        } else {
            csv << format_double(cell.config.p) << ",NA," << cell.config.degree << ",NA\n";
            if (records.is_open()) {
                Json failure;
                failure["record"] = "search_failure";
                failure["objective"] = to_string(cell.config.objective);
                failure["p"] = cell.config.p;
                failure["degree"] = cell.config.degree;
                failure["message"] = cell.failure;
                records << stamped(failure, manifest).dump() << '\n';
            }
        }
    }
    return ok > 0 ? kOk : kNumeric;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) s += ' ';
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    configure_threads_from_env();

    CLI::App app{"Numerical checks and extremal search for Hardy-space coefficient inequalities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", HARDY_VERSION);

    Common common;
    common.command_line = join_args(argc, argv);

    WeightsArgs weights_args;
    auto* weights = app.add_subcommand("weights", "Print a weight sequence");
    weights->add_option("--family", weights_args.family, "binomial | wiessler | hl")->required();
    weights->add_option("--alpha", weights_args.alpha, "Family parameter alpha = 2/p");
    weights->add_option("--p", weights_args.p, "Exponent p (alpha = 2/p)");
    weights->add_option("--n-max", weights_args.n_max, "Last index")->capture_default_str();
    weights->add_option("--format", common.format, "text | json | csv")->capture_default_str();

    std::string coeffs;
    double p = 2.0;

    auto* norm = app.add_subcommand("norm", "H^p norm of a coefficient file");
    norm->add_option("--coeffs", coeffs, "Coefficient file")->required();
    norm->add_option("--p", p, "Exponent in (0, 2]")->required();
    norm->add_option("--format", common.format, "text | json")->capture_default_str();
    add_norm_flags(norm, common);

    std::string id;
    std::optional<double> eps;
    std::optional<double> c;
    auto* chk = app.add_subcommand("check", "Evaluate one inequality instance");
    chk->add_option("--coeffs", coeffs, "Coefficient file")->required();
    chk->add_option("--id", id, "hardy | conjecture | wiessler | theorem2 | theorem3 | lemma")->required();
    chk->add_option("--p", p, "Exponent in (0, 2]")->required();
    chk->add_option("--eps", eps, "Tail weight for theorem2 (default 0)");
    chk->add_option("--C", c, "Constant for hardy, theorem3 (C') or lemma (gamma); default 1");
    chk->add_option("--format", common.format, "text | json")->capture_default_str();
    add_norm_flags(chk, common);

    std::optional<std::size_t> order;
    auto* factor = app.add_subcommand("factor", "Split f into Blaschke and zero-free parts");
    factor->add_option("--coeffs", coeffs, "Coefficient file")->required();
    factor->add_option("--N", order, "Truncation order of the outer part (default: degree)");
    factor->add_option("--format", common.format, "text | json")->capture_default_str();

    SearchArgs search_args;
    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--objective", search_args.objective, "eps-p | cp-prime | gamma-p | kappa | conjecture")
            ->required();
        cmd->add_option("--degree", search_args.degree, "Polynomial degree of the search space")->capture_default_str();
        cmd->add_option("--restarts", search_args.restarts, "Independent restarts")->capture_default_str();
        cmd->add_option("--max-evals", search_args.max_evals, "Objective evaluations per restart")->capture_default_str();
        cmd->add_option("--seed", search_args.seed, "RNG seed")->capture_default_str();
        cmd->add_option("--margin", search_args.margin, "Boundary penalty margin")->capture_default_str();
        cmd->add_option("--min-denominator", search_args.min_denominator, "Ratio objective floor")
            ->capture_default_str();
        cmd->add_option("--seed-coeffs", search_args.seed_files, "Coefficient files used as restart starts");
        cmd->add_option("--out", search_args.out, "JSON-lines record file");
        add_norm_flags(cmd, common, "Largest quadrature grid, capped at 262144 inside searches");
    };
    auto* search = app.add_subcommand("search", "Extremal search for one constant");
    search->add_option("--p", search_args.p, "Exponent in (0, 2]")->required();
    add_search_flags(search);

    std::string grid_text;
    std::string csv_path;
    auto* sweep = app.add_subcommand("sweep", "Extremal search over a grid of p");
    sweep->add_option("--p-grid", grid_text, "Comma-separated, strictly increasing p values")->required();
    sweep->add_option("--csv", csv_path, "CSV plot-data file (default stdout)");
    add_search_flags(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*weights) return cmd_weights(weights_args, common);
        if (*norm) return cmd_norm(coeffs, p, common);
        if (*chk) return cmd_check(coeffs, id, p, eps, c, common);
        if (*factor) return cmd_factor(coeffs, order, common);
        if (*search) return cmd_search(search_args, common);
        if (*sweep) return cmd_sweep(search_args, grid_text, csv_path, common);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "; last two values " << format_double(e.previous()) << ' '
                  << format_double(e.last()) << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumeric;
    }
    return kUsage;
}
