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

#ifndef DISASSOC_PARALLEL_H_
#define DISASSOC_PARALLEL_H_

namespace disassoc {

// Worker count used by the OpenMP kernels. 0 means "runtime default".
// Results never depend on this value.
void SetThreadCount(int threads);
int ThreadCount();

}  // namespace disassoc

#endif  // DISASSOC_PARALLEL_H_
