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

#ifndef CER_CORE_HPP_
#define CER_CORE_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cer {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data (index gaps, dangling relations, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

class DomainMismatchError : public Error {
 public:
  explicit DomainMismatchError(const std::string& msg) : Error(msg) {}
};

std::string to_lower(std::string s);

// One word of a sentence. Indices are 1-based; index 0 is the virtual ROOT.
struct Token {
  int index = 0;
  std::string surface;
  std::string lemma;  // lowercase; falls back to lowercased surface
  std::string pos;    // Penn Treebank tag, stored verbatim

  bool operator==(const Token&) const = default;
};

// Typed link between a governor and a dependent word. Word/POS attributes are
// always resolved through the owning sentence's token list.
struct DependencyRelation {
  std::string rel_type;  // e.g. nsubj, dobj, nmod:with, nmod:poss
  int gov_idx = 0;       // 0 denotes the virtual ROOT
  int dep_idx = 0;

  bool operator==(const DependencyRelation&) const = default;
  auto operator<=>(const DependencyRelation&) const = default;
};

struct ParsedSentence {
  std::string sentence_id;
  std::string review_id;
  std::vector<Token> tokens;
  std::vector<DependencyRelation> relations;

  bool operator==(const ParsedSentence&) const = default;

  // Throws ValidationError on index gaps or dangling relations.
  void validate() const;
};

struct Review {
  std::string review_id;
  std::string product_id;  // the target entity
  std::string category;    // domain label
  std::vector<ParsedSentence> sentences;

  bool operator==(const Review&) const = default;
};

// A contiguous 1-based token index range [start, end], inclusive.
struct Span {
  int start = 0;
  int end = 0;

  bool operator==(const Span&) const = default;
  auto operator<=>(const Span&) const = default;
  int size() const { return end - start + 1; }
  bool contains(int idx) const { return start <= idx && idx <= end; }
};

// One recognized complementary-entity mention.
struct Extraction {
  std::string sentence_id;
  std::string review_id;
  int head_idx = 0;  // the CETT-bound token
  Span span;         // after noun-phrase chunking
  std::string text;  // space-joined surface forms of span
  std::string path_id;

  bool operator==(const Extraction&) const = default;
};

// Per-domain knowledge: candidate complementary entities (lowercased chunk
// texts) and domain-specific verb lemmas, each with occurrence counts.
struct DomainKnowledge {
  std::string domain;
  std::map<std::string, int> cce;
  std::map<std::string, int> dsv;  // every entry has count >= 2
  std::set<std::string> seed_verbs;
  int source_review_count = 0;

  bool operator==(const DomainKnowledge&) const = default;

  bool has_cce(const std::string& lowered_chunk) const {
    return cce.count(lowered_chunk) > 0;
  }
  // Seed verbs always pass, regardless of their expanded count.
  bool has_verb(const std::string& lemma) const {
    return seed_verbs.count(lemma) > 0 || dsv.count(lemma) > 0;
  }
};

struct GoldAnnotation {
  std::string sentence_id;
  std::vector<std::string> entities;  // multiset; duplicates allowed

  bool operator==(const GoldAnnotation&) const = default;
};

// Resolved attributes of one endpoint of a dependency relation.
struct Endpoint {
  std::string surface;
  std::string lemma;
  std::string pos;
  int index = 0;
};

enum class RelSide { Gov, Dep };

// For gov_idx = 0 returns the virtual ROOT endpoint with pos "None".
// Throws ValidationError when the index does not resolve.
Endpoint resolve_endpoint(const ParsedSentence& sentence,
                          const DependencyRelation& rel, RelSide side);

// Table II POS classes. Note the N class has no NNS, as specified.
bool pos_is_noun(const std::string& pos);
bool pos_is_verb(const std::string& pos);
bool pos_is_adjective(const std::string& pos);

inline std::string make_sentence_id(const std::string& review_id, int ordinal) {
  return review_id + ":" + std::to_string(ordinal);
}

}  // namespace cer

#endif  // CER_CORE_HPP_
