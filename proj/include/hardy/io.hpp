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

#ifndef HARDY_IO_HPP
#define HARDY_IO_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardy/analytic_poly.hpp"
#include "hardy/blaschke.hpp"
#include "hardy/inequalities.hpp"
#include "hardy/search.hpp"
#include "hardy/series.hpp"

namespace hardy {

// Malformed coefficient file or record input.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// Coefficient file: one `re im` pair per line (a lone `re` means im = 0), `#` starts a
/// comment, blank lines are ignored, line order is the coefficient index.
AnalyticPoly read_coefficients(std::istream& in);
AnalyticPoly read_coefficient_file(const std::string& path);
/// Writes shortest round-trip decimal pairs, so reading back is exact.
void write_coefficients(std::ostream& out, const AnalyticPoly& f);

/// Everything needed to rerun a record. The digest omits the timestamp.
struct RunManifest {
    std::string command_line;
    std::string version = HARDY_VERSION;
    std::uint64_t rng_seed = 0;
    std::map<std::string, double> tolerances;
    std::string timestamp;

    std::string digest() const;
};

std::string utc_timestamp();

// Records use ordered_json, so key order is the documented insertion order.
Json to_json(const AnalyticPoly& f);
Json to_json(const RunManifest& m);
Json to_json(const NormResult& n, double p);
Json to_json(const InequalityReport& r);
Json to_json(const FactorizationResult& r);
Json to_json(const SearchResult& r, const SearchConfig& config);
Json to_json(const EstimatedConstant& c);

std::string format_double(double v);

}  // namespace hardy

#endif
