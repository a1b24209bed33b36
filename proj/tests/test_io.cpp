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

#include <bit>
#include <cstdint>
#include <random>
#include <sstream>

#include "hardy/blaschke.hpp"
#include "hardy/io.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

AnalyticPoly parse(const std::string& text) {
    std::istringstream in(text);
    return read_coefficients(in);
}

std::vector<std::string> keys(const Json& j) {
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
    return out;
}

double random_bits_double(std::mt19937_64& rng) {
    for (;;) {
        const double v = std::bit_cast<double>(rng());
        if (std::isfinite(v)) return v;
    }
}

}  // namespace

TEST_CASE("coefficient file syntax") {
    const AnalyticPoly f = parse("# header\n1 2\n\n  -0.5\t0.25  # trailing\n3\n");
    REQUIRE(f.size() == 3);
    CHECK(f[0] == Complex{1.0, 2.0});
    CHECK(f[1] == Complex{-0.5, 0.25});
    CHECK(f[2] == Complex{3.0, 0.0});
    CHECK(parse("1e-3 -2E2\n")[0] == Complex{1e-3, -200.0});
}

TEST_CASE("coefficient file errors") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse("one\n"), ParseError);
    CHECK_THROWS_AS(parse("1.5x 0\n"), ParseError);
    CHECK_THROWS_AS(parse("nan 0\n"), ParseError);
    CHECK_THROWS_AS(parse("1 inf\n"), ParseError);
    CHECK_THROWS_AS(read_coefficient_file("/nonexistent/path/coeffs.txt"), ParseError);
}

TEST_CASE("write then read is exact") {
    std::mt19937_64 rng(131);
    for (int i = 0; i < 500; ++i) {
        std::vector<Complex> c(1 + static_cast<std::size_t>(i % 17));
        for (Complex& z : c) z = i % 2 ? Complex{random_bits_double(rng), random_bits_double(rng)}
                                       : oracle::random_square_poly(rng, 0)[0];
        const AnalyticPoly f(c);
        std::ostringstream out;
        write_coefficients(out, f);
        const AnalyticPoly g = parse(out.str());
        REQUIRE(g.size() == f.size());
        for (std::size_t k = 0; k < f.size(); ++k) {
            CHECK(std::bit_cast<std::uint64_t>(g[k].real()) == std::bit_cast<std::uint64_t>(f[k].real() + 0.0));
            CHECK(std::bit_cast<std::uint64_t>(g[k].imag()) == std::bit_cast<std::uint64_t>(f[k].imag() + 0.0));
        }
    }
}

TEST_CASE("format_double") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1e300) == "1e+300");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("manifest digest ignores the timestamp") {
    RunManifest a;
    a.command_line = "hardyc norm --p 1";
    a.rng_seed = 7;
    a.tolerances["rel_tol"] = 1e-10;
    a.timestamp = "2026-01-01T00:00:00Z";
    RunManifest b = a;
    b.timestamp = utc_timestamp();
    CHECK(a.digest() == b.digest());
    b.tolerances["rel_tol"] = 1e-9;
    CHECK(a.digest() != b.digest());
    b = a;
    b.rng_seed = 8;
    CHECK(a.digest() != b.digest());
    CHECK(utc_timestamp().size() == 20);

    const Json j = to_json(a);
    CHECK(keys(j) == std::vector<std::string>{"record", "digest", "command_line", "version", "rng_seed",
                                              "tolerances", "timestamp"});
    CHECK(j["digest"] == a.digest());
    CHECK(j["version"] == HARDY_VERSION);
}

TEST_CASE("record field order is stable") {
    const NormResult n = hp_norm(AnalyticPoly{3.0, 4.0}, 2.0);
    const Json nj = to_json(n, 2.0);
    CHECK(keys(nj) == std::vector<std::string>{"record", "p", "value", "grid_size_used", "est_error"});
    CHECK(nj["value"].get<double>() == doctest::Approx(5.0));

    const InequalityReport r = check_conjecture(AnalyticPoly{2.0}, 1.0);
    const Json rj = to_json(r);
    CHECK(keys(rj) == std::vector<std::string>{"record", "inequality_id", "p", "parameter", "lhs", "rhs", "deficit",
                                               "ratio", "norm_est_error", "combined_error", "verdict",
                                               "input_digest"});
    CHECK(rj["verdict"] == "HOLDS");

    const LemmaRatio l = lemma_ratio(AnalyticPoly{2.0}, 1.0);
    CHECK_FALSE(l.ratio.has_value());
    InequalityReport undefined = r;
    undefined.ratio.reset();
    CHECK(to_json(undefined)["ratio"].is_null());

    const Json fj = to_json(riesz_factorize(AnalyticPoly{-0.5, 1.0}, 1));
    CHECK(keys(fj) == std::vector<std::string>{"record", "blaschke_zeros", "front_phase", "outer_part", "residual",
                                               "residual_grid", "boundary_roots"});
    CHECK(fj["outer_part"].size() == 2);

    EstimatedConstant c;
    c.id = ObjectiveId::Kappa;
    c.value = 1.0;
    c.theoretical_bound = 1.0;
    const Json cj = to_json(c);
    CHECK(keys(cj) == std::vector<std::string>{"record", "constant_id", "p", "value", "degree_cap", "provenance",
                                               "theoretical_bound"});
}

TEST_CASE("search record carries the reproduction data") {
    SearchConfig config;
    config.objective = ObjectiveId::GammaP;
    config.degree = 2;
    config.restarts = 2;
    config.max_evals_per_restart = 200;
    const ConstantEstimate e = estimate_gamma_p(config);
    const Json j = to_json(e.search, config);
    CHECK(j["record"] == "search_result");
    CHECK(j["config_digest"] == config.digest());
    CHECK(j["per_restart_bests"].size() == 2);
    CHECK(j["best_poly"].size() == 3);
    CHECK(j["counterexamples"].is_array());
    const std::string text = j.dump();
    CHECK(Json::parse(text) == j);
}
