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

#ifndef HARDY_DIGEST_HPP
#define HARDY_DIGEST_HPP

#include <bit>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "hardy/analytic_poly.hpp"

namespace hardy {

// 64-bit FNV-1a; stable across runs and platforms with the same double layout.
class Digest {
   public:
    Digest& add(std::string_view bytes) {
        for (unsigned char c : bytes) mix(c);
        return *this;
    }
    Digest& add(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(v >> (8 * i)));
        return *this;
    }
    Digest& add(double v) { return add(std::bit_cast<std::uint64_t>(v)); }
    Digest& add(const AnalyticPoly& f) {
        const AnalyticPoly t = f.trimmed();
        add(static_cast<std::uint64_t>(t.size()));
        for (const Complex& c : t.coeffs()) add(c.real()).add(c.imag());
        return *this;
    }

    std::uint64_t value() const noexcept { return state_; }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
        return buf;
    }

   private:
    void mix(unsigned char c) {
        state_ ^= c;
        state_ *= 0x100000001b3ULL;
    }
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

}  // namespace hardy

#endif
