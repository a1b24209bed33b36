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

#include "hardy/io.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hardy/digest.hpp"

namespace hardy {

namespace {

bool parse_double(std::string_view token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

// NaN and infinities have no JSON literal; they serialize as null.
Json number(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

Json optional_number(const std::optional<double>& v) { return v ? number(*v) : Json(nullptr); }

Json complex_pair(const Complex& c) { return Json::array({number(c.real()), number(c.imag())}); }

}  // namespace

AnalyticPoly read_coefficients(std::istream& in) {
    std::vector<Complex> coeffs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) tokens.push_back(t);
        if (tokens.empty()) continue;
        if (tokens.size() > 2) throw ParseError("line " + std::to_string(lineno) + ": expected `re im`");
        double re = 0.0;
        double im = 0.0;
        if (!parse_double(tokens[0], re) || (tokens.size() == 2 && !parse_double(tokens[1], im)))
            throw ParseError("line " + std::to_string(lineno) + ": not a number");
        if (!std::isfinite(re) || !std::isfinite(im))
            throw ParseError("line " + std::to_string(lineno) + ": coefficient is not finite");
        coeffs.emplace_back(re, im);
    }
    if (coeffs.empty()) throw ParseError("no coefficients found");
    return AnalyticPoly(std::move(coeffs));
}

AnalyticPoly read_coefficient_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open coefficient file " + path);
    return read_coefficients(in);
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

void write_coefficients(std::ostream& out, const AnalyticPoly& f) {
    for (const Complex& c : f.coeffs()) out << format_double(c.real()) << ' ' << format_double(c.imag()) << '\n';
}

std::string RunManifest::digest() const {
    Digest d;
    d.add(command_line).add(version).add(rng_seed);
    for (const auto& [key, value] : tolerances) d.add(key).add(value);
    return d.hex();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json to_json(const AnalyticPoly& f) {
    Json arr = Json::array();
    for (const Complex& c : f.coeffs()) arr.push_back(complex_pair(c));
    return arr;
}

Json to_json(const RunManifest& m) {
    Json j;
    j["record"] = "manifest";
    j["digest"] = m.digest();
    j["command_line"] = m.command_line;
    j["version"] = m.version;
    j["rng_seed"] = m.rng_seed;
    Json tol = Json::object();
    for (const auto& [key, value] : m.tolerances) tol[key] = number(value);
    j["tolerances"] = tol;
    j["timestamp"] = m.timestamp;
    return j;
}

Json to_json(const NormResult& n, double p) {
    Json j;
    j["record"] = "norm";
    j["p"] = number(p);
    j["value"] = number(n.value);
    j["grid_size_used"] = n.grid_size_used;
    j["est_error"] = number(n.est_error);
    return j;
}

Json to_json(const InequalityReport& r) {
    Json j;
    j["record"] = "inequality";
    j["inequality_id"] = to_string(r.id);
    j["p"] = number(r.p);
    j["parameter"] = number(r.parameter);
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["deficit"] = number(r.deficit);
    j["ratio"] = optional_number(r.ratio);
    j["norm_est_error"] = number(r.norm_est_error);
    j["combined_error"] = number(r.combined_error);
    j["verdict"] = to_string(r.verdict());
    j["input_digest"] = r.input_digest;
    return j;
}

Json to_json(const FactorizationResult& r) {
    Json j;
    j["record"] = "factorization";
    Json zeros = Json::array();
    for (const Complex& w : r.blaschke.zeros()) zeros.push_back(complex_pair(w));
    j["blaschke_zeros"] = zeros;
    j["front_phase"] = complex_pair(r.blaschke.front_phase());
    j["outer_part"] = to_json(r.outer_part.trimmed());
    j["residual"] = number(r.residual);
    j["residual_grid"] = r.residual_grid;
    Json boundary = Json::array();
    for (const Complex& w : r.boundary_roots) boundary.push_back(complex_pair(w));
    j["boundary_roots"] = boundary;
    return j;
}

Json to_json(const SearchResult& r, const SearchConfig& config) {
    Json j;
    j["record"] = "search_result";
    j["objective"] = to_string(config.objective);
    j["p"] = number(config.p);
    j["degree"] = config.degree;
    j["config_digest"] = config.digest();
    j["best_value"] = number(r.best_value);
    j["best_restart"] = r.best_restart;
    j["evaluations"] = r.evaluations;
    Json bests = Json::array();
    for (const auto& b : r.per_restart_bests) bests.push_back(optional_number(b));
    j["per_restart_bests"] = bests;
    j["best_poly"] = to_json(r.best_poly);
    j["inconclusive_flags"] = r.inconclusive_flags;
    Json cex = Json::array();
    for (const auto& c : r.counterexamples) {
        Json item;
        item["label"] = "COUNTEREXAMPLE-CANDIDATE";
        item["restart"] = c.restart;
        item["poly"] = to_json(c.poly);
        item["report"] = to_json(c.report);
        cex.push_back(item);
    }
    j["counterexamples"] = cex;
    return j;
}

Json to_json(const EstimatedConstant& c) {
    Json j;
    j["record"] = "estimated_constant";
    j["constant_id"] = to_string(c.id);
    j["p"] = number(c.p);
    j["value"] = number(c.value);
    j["degree_cap"] = c.degree_cap;
    j["provenance"] = c.provenance;
    j["theoretical_bound"] = optional_number(c.theoretical_bound);
    return j;
}

}  // namespace hardy
