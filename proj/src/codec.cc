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

#include "disassoc/codec.h"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>

#include "json.hpp"

#include "disassoc/error.h"

namespace disassoc {

using Json = nlohmann::ordered_json;

namespace {

Json EncodeNode(const ClusterNode& node) {
  Json j;
  if (node.is_leaf()) {
    const VerticalPartition& vp = node.leaf().partition;
    j["type"] = "leaf";
    j["size"] = vp.size;
    Json chunks = Json::array();
    for (const auto& c : vp.record_chunks) {
      Json jc;
      jc["domain"] = c.domain;
      jc["subrecords"] = c.subrecords;
      chunks.push_back(std::move(jc));
    }
    j["record_chunks"] = std::move(chunks);
    j["term_chunk"] = vp.term_chunk;
    return j;
  }
  const JointCluster& joint = node.joint();
  j["type"] = "joint";
  Json children = Json::array();
  for (const auto& c : joint.children) children.push_back(EncodeNode(c));
  j["children"] = std::move(children);
  Json shared = Json::array();
  for (const auto& sc : joint.shared_chunks) {
    Json jc;
    jc["domain"] = sc.domain;
    jc["subrecords"] = sc.subrecords;
    jc["strict_k"] = sc.strict_k;
    shared.push_back(std::move(jc));
  }
  j["shared_chunks"] = std::move(shared);
  return j;
}

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, "malformed published dataset: " + what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Malformed("expected an object");
  auto it = j.find(key);
  if (it == j.end()) Malformed(std::string("missing key '") + key + "'");
  return *it;
}

class Decoder {
 public:
  explicit Decoder(std::size_t num_terms) : num_terms_(num_terms) {}

  std::vector<TermId> Ids(const Json& j, const char* what) const {
    if (!j.is_array()) Malformed(std::string(what) + " is not an array");
    std::vector<TermId> out;
    out.reserve(j.size());
    for (const auto& v : j) {
      if (!v.is_number_unsigned()) {
        Malformed(std::string(what) + " holds a non-id value");
      }
      auto id = v.get<std::uint64_t>();
      if (id >= num_terms_) Malformed(std::string(what) + " id out of range");
      if (!out.empty() && out.back() >= id) {
        Malformed(std::string(what) + " is not strictly ascending");
      }
      out.push_back(static_cast<TermId>(id));
    }
    return out;
  }

  std::vector<Record> Subrecords(const Json& j) const {
    if (!j.is_array()) Malformed("subrecords is not an array");
    std::vector<Record> out;
    out.reserve(j.size());
    for (const auto& s : j) {
      out.push_back(Ids(s, "subrecord"));
      if (out.back().empty()) Malformed("empty subrecord");
    }
    return out;
  }

  ClusterNode Node(const Json& j, int depth) const {
    if (depth > 10000) Malformed("nesting too deep");
    const Json& type = Field(j, "type");
    if (!type.is_string()) Malformed("node type is not a string");
    if (type == "leaf") {
      LeafCluster leaf;
      const Json& size = Field(j, "size");
      if (!size.is_number_unsigned()) Malformed("leaf size");
      leaf.partition.size = size.get<std::size_t>();
      const Json& chunks = Field(j, "record_chunks");
      if (!chunks.is_array()) Malformed("record_chunks is not an array");
      for (const auto& jc : chunks) {
        RecordChunk c;
        c.domain = Ids(Field(jc, "domain"), "domain");
        c.subrecords = Subrecords(Field(jc, "subrecords"));
        leaf.partition.record_chunks.push_back(std::move(c));
      }
      leaf.partition.term_chunk = Ids(Field(j, "term_chunk"), "term_chunk");
      return ClusterNode(std::move(leaf));
    }
    if (type == "joint") {
      JointCluster joint;
      const Json& children = Field(j, "children");
      if (!children.is_array() || children.empty()) {
        Malformed("joint children must be a non-empty array");
      }
      for (const auto& c : children) {
        joint.children.push_back(Node(c, depth + 1));
      }
      const Json& shared = Field(j, "shared_chunks");
      if (!shared.is_array()) Malformed("shared_chunks is not an array");
      for (const auto& jc : shared) {
        SharedChunk sc;
        sc.domain = Ids(Field(jc, "domain"), "domain");
        sc.subrecords = Subrecords(Field(jc, "subrecords"));
        const Json& strict = Field(jc, "strict_k");
        if (!strict.is_boolean()) Malformed("strict_k is not a boolean");
        sc.strict_k = strict.get<bool>();
        joint.shared_chunks.push_back(std::move(sc));
      }
      return ClusterNode(std::move(joint));
    }
    Malformed("unknown node type");
  }

 private:
  std::size_t num_terms_;
};

}  // namespace

std::string EncodePublished(const DisassociatedDataset& published) {
  Json j;
  j["k"] = published.k;
  j["m"] = published.m;
  j["dictionary"] = published.dictionary.tokens();
  Json forest = Json::array();
  for (const auto& node : published.forest) forest.push_back(EncodeNode(node));
  j["forest"] = std::move(forest);
  return j.dump() + "\n";
}

void WritePublished(const DisassociatedDataset& published, std::ostream& out) {
  out << EncodePublished(published);
}

DisassociatedDataset DecodePublished(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) Malformed("not valid JSON");
  DisassociatedDataset out;
  const Json& k = Field(j, "k");
  const Json& m = Field(j, "m");
  if (!k.is_number_integer() || !m.is_number_integer()) Malformed("k/m");
  out.k = k.get<int>();
  out.m = m.get<int>();
  const Json& dict = Field(j, "dictionary");
  if (!dict.is_array()) Malformed("dictionary is not an array");
  std::vector<std::string> tokens;
  for (const auto& t : dict) {
    if (!t.is_string()) Malformed("dictionary holds a non-string");
    tokens.push_back(t.get<std::string>());
  }
  try {
    out.dictionary = TermDictionary(std::move(tokens));
  } catch (const Error& e) {
    Malformed(e.what());
  }
  const Json& forest = Field(j, "forest");
  if (!forest.is_array()) Malformed("forest is not an array");
  Decoder decoder(out.dictionary.size());
  for (const auto& node : forest) out.forest.push_back(decoder.Node(node, 0));
  return out;
}

DisassociatedDataset ReadPublished(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return DecodePublished(text);
}

}  // namespace disassoc
