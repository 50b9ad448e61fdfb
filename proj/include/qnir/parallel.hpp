// Copyright 2026 The qnir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QNIR_PARALLEL_HPP
#define QNIR_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qnir {

// Worker cap: min(hardware_concurrency, QNIR_THREADS if set). Always >= 1.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Tasks must touch disjoint state; results must
// not depend on execution order. Runs inline when n <= 1 or only one worker
// is available.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace qnir

#endif // QNIR_PARALLEL_HPP
