// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUDITSIM_SRC_PARALLEL_H
#define QUDITSIM_SRC_PARALLEL_H

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace quditsim::internal {

/// Runs body(i) for i in [0, n), striped over up to `threads` workers.
template <typename Body>
void parallel_for(size_t n, int threads, const Body &body) {
    size_t workers = std::min<size_t>(n, static_cast<size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        for (size_t i = 0; i < n; i++) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < n; i += workers) {
                body(i);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

}  // namespace quditsim::internal

#endif
