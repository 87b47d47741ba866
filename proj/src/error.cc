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

#include "disassoc/error.h"

namespace disassoc {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyDataset:
      return "EmptyDataset";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kMalformedInput:
      return "MalformedInput";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kReconstructionStuck:
      return "ReconstructionStuck";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

}  // namespace disassoc
