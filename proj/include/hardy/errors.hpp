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

#ifndef HARDY_ERRORS_HPP
#define HARDY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hardy {

// Parameter outside the mathematical domain of an operation (alpha <= 0, p > 2, a_0 = 0, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

// Structurally invalid argument (grid size not a power of two, zero polynomial, ...).
class ArgumentError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// Grid doubling hit the configured ceiling before two successive values agreed.
class ConvergenceError : public std::runtime_error {
   public:
    ConvergenceError(const std::string& what, double previous, double last, std::size_t grid)
        : std::runtime_error(what), previous_(previous), last_(last), grid_(grid) {}

    double previous() const noexcept { return previous_; }
    double last() const noexcept { return last_; }
    std::size_t grid_size() const noexcept { return grid_; }

   private:
    double previous_;
    double last_;
    std::size_t grid_;
};

// Every probe of an extremal search was undefined or penalized.
class SearchFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace hardy

#endif
