/* Copyright 2026 The cer Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cer/core.hpp"

#include <algorithm>
#include <cctype>

namespace cer {

std::string to_lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

void ParsedSentence::validate() const {
  const int n = static_cast<int>(tokens.size());
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens[i];
    if (t.index != i + 1) {
      throw ValidationError("sentence " + sentence_id + ": token at position " +
                            std::to_string(i + 1) + " has index " +
                            std::to_string(t.index));
    }
    if (t.lemma.empty()) {
      throw ValidationError("sentence " + sentence_id + ": token " +
                            std::to_string(t.index) + " has empty lemma");
    }
  }
  for (const DependencyRelation& r : relations) {
    if (r.dep_idx < 1 || r.dep_idx > n) {
      throw ValidationError("sentence " + sentence_id + ": relation " +
                            r.rel_type + " has dangling dep index " +
                            std::to_string(r.dep_idx));
    }
    if (r.gov_idx < 0 || r.gov_idx > n) {
      throw ValidationError("sentence " + sentence_id + ": relation " +
                            r.rel_type + " has dangling gov index " +
                            std::to_string(r.gov_idx));
    }
    if (r.gov_idx == r.dep_idx) {
      throw ValidationError("sentence " + sentence_id + ": relation " +
                            r.rel_type + " relates token " +
                            std::to_string(r.gov_idx) + " to itself");
    }
  }
}

Endpoint resolve_endpoint(const ParsedSentence& sentence,
                          const DependencyRelation& rel, RelSide side) {
  const int idx = side == RelSide::Gov ? rel.gov_idx : rel.dep_idx;
  if (idx == 0) {
    return Endpoint{"ROOT", "root", "None", 0};
  }
  if (idx < 1 || idx > static_cast<int>(sentence.tokens.size())) {
    throw ValidationError("sentence " + sentence.sentence_id +
                          ": relation endpoint index " + std::to_string(idx) +
                          " out of range");
  }
  const Token& t = sentence.tokens[static_cast<std::size_t>(idx - 1)];
  return Endpoint{t.surface, t.lemma, t.pos, t.index};
}

bool pos_is_noun(const std::string& pos) {
  return pos == "NN" || pos == "NNP" || pos == "NNPS" || pos == "NP";
}

bool pos_is_verb(const std::string& pos) {
  return pos == "VB" || pos == "VBD" || pos == "VBG" || pos == "VBN" ||
         pos == "VBP" || pos == "VBZ";
}

bool pos_is_adjective(const std::string& pos) {
  return pos == "JJ" || pos == "JJR" || pos == "JJS";
}

}  // namespace cer
