// Copyright 2026 The Disassoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "disassoc/parallel.h"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace disassoc {
namespace {
std::atomic<int> g_threads{0};
}  // namespace

void SetThreadCount(int threads) { g_threads = threads < 0 ? 0 : threads; }

int ThreadCount() {
  int t = g_threads.load();
  if (t > 0) return t;
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace disassoc
