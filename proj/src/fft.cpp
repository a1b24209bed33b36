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

#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace hardy::detail {

namespace {

class PlanCache {
   public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan get(std::size_t n, FftSign sign) {
        std::lock_guard lock(mutex_);
        const auto key = std::make_pair(n, static_cast<int>(sign));
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        // FFTW_ESTIMATE leaves the scratch arrays untouched; UNALIGNED lets the
        // plan run on any caller buffer through fftw_execute_dft.
        auto* in = fftw_alloc_complex(n);
        auto* out = fftw_alloc_complex(n);
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, static_cast<int>(sign),
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        plans_.emplace(key, plan);
        return plan;
    }

   private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

}  // namespace

void dft(std::span<const Complex> in, std::span<Complex> out, FftSign sign) {
    const std::size_t n = in.size();
    if (n == 0) return;
    fftw_plan plan = plan_cache().get(n, sign);
    if (in.data() == out.data()) {
        std::vector<Complex> copy(in.begin(), in.end());
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(copy.data()),
                         reinterpret_cast<fftw_complex*>(out.data()));
        return;
    }
    // fftw_execute_dft takes a non-const input; out-of-place c2c plans do not write it.
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace hardy::detail
