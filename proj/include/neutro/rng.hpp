/*   Copyright 2026 The neutro authors

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

#pragma once

#include <cstdint>
#include <random>

namespace neutro {

/// Seeded sample stream. Every randomized scan draws its samples up front,
/// sequentially, from one of these, so results depend only on (seed, count)
/// and stay identical under any thread count. The double mapping is done by
/// hand; distribution objects are not portable across standard libraries.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(engine_() % n);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace neutro
