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

#include <cstddef>
#include <string>

#include "neutro/errors.hpp"

namespace neutro {

/// Execution mode for the scan kernels. `serial` is the reference path kept
/// for testing and benchmarking; `parallel` splits the index range across
/// OpenMP threads. Kernels write per-index slots and reduce serially, so both
/// modes produce identical results.
enum class ExecMode { serial, parallel };

inline const char* to_string(ExecMode mode) {
    return mode == ExecMode::serial ? "serial" : "parallel";
}

inline ExecMode exec_mode_from_id(const std::string& id) {
    if (id == "serial") return ExecMode::serial;
    if (id == "parallel") return ExecMode::parallel;
    throw DomainError("unknown execution mode '" + id + "'");
}

/// Runs f(i) for i in [0, n). f must be safe to call concurrently for
/// distinct indices when mode is parallel.
template <typename F>
void for_each_index(ExecMode mode, std::size_t n, F&& f) {
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            f(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            f(i);
        }
    }
}

}  // namespace neutro
