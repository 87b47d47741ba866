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

#ifndef DISASSOC_CODEC_H_
#define DISASSOC_CODEC_H_

// JSON encoding of a published (disassociated) dataset:
//
//   {"k":K,"m":M,"dictionary":[token...],"forest":[node...]}
//   leaf  = {"type":"leaf","size":N,
//            "record_chunks":[{"domain":[id...],"subrecords":[[id...]...]}...],
//            "term_chunk":[id...]}
//   joint = {"type":"joint","children":[node...],
//            "shared_chunks":[{"domain":[...],"subrecords":[...],
//                              "strict_k":bool}...]}
//
// Id arrays are ascending. Keys are written in the order shown.

#include <iosfwd>
#include <string>
#include <string_view>

#include "disassoc/model.h"

namespace disassoc {

std::string EncodePublished(const DisassociatedDataset& published);
void WritePublished(const DisassociatedDataset& published, std::ostream& out);

// Throws Error(kMalformedInput) on syntax errors, missing keys, wrong types,
// ids outside the dictionary or id arrays that are not strictly ascending.
DisassociatedDataset DecodePublished(std::string_view json);
DisassociatedDataset ReadPublished(std::istream& in);

}  // namespace disassoc

#endif  // DISASSOC_CODEC_H_
