// Copyright 2026 The nodeunlearn Authors.
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

#ifndef NODEUNLEARN_PARALLEL_H_
#define NODEUNLEARN_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace nodeunlearn {

// Worker count: hardware concurrency, capped by the UNLEARN_THREADS
// environment variable when it holds a positive integer.
std::size_t ThreadBudget();

// Runs fn(0) .. fn(count - 1) on up to `threads` workers. Every index runs
// even if one throws; the exception of the lowest failing index is
// rethrown afterwards.
void ParallelFor(std::size_t count, std::size_t threads,
                 const std::function<void(std::size_t)>& fn);

}  // namespace nodeunlearn

#endif  // NODEUNLEARN_PARALLEL_H_
