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

// Bootstraps per-category domain knowledge from unlabeled reviews: candidate
// complementary entities via the seed-verb path, then domain-specific verbs
// via the verb paths gated on the entity set. One pass each, no iteration.

#ifndef CER_KNOWLEDGE_HPP_
#define CER_KNOWLEDGE_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cer/core.hpp"

namespace cer {

struct KnowledgeConfig {
  std::set<std::string> seeds = {"fit", "work"};
  // Minimum occurrence count for candidate entities; 0 keeps everything.
  int cce_min_count = 0;
  // Verb lemmas never admitted into the expanded set.
  std::set<std::string> excluded_verbs;
  // Also run the literal printed form of path 9 (no CETT node).
  bool use_printed_path9 = false;
  // Retain (lemma -> sentence ids) provenance for each knowledge entry.
  bool keep_provenance = false;
};

struct KnowledgeProvenance {
  std::map<std::string, std::vector<std::string>> cce_sentences;
  std::map<std::string, std::vector<std::string>> dsv_sentences;
};

// Candidate complementary entities: lowercased chunk texts with counts.
// Throws DomainMismatchError when reviews span more than one category.
std::map<std::string, int> expand_cce(const std::vector<Review>& reviews,
                                      const KnowledgeConfig& config = {},
                                      KnowledgeProvenance* provenance = nullptr);

// Domain-specific verb lemmas seen more than once, gated on cce membership
// of the (lowercased, full-chunk) CETT binding. The multi-token chunk
// exception of extraction does not apply here.
std::map<std::string, int> expand_dsv(const std::vector<Review>& reviews,
                                      const std::map<std::string, int>& cce,
                                      const KnowledgeConfig& config = {},
                                      KnowledgeProvenance* provenance = nullptr);

// One cce pass, then one dsv pass. Deterministic given input order.
DomainKnowledge build_domain_knowledge(const std::vector<Review>& reviews,
                                       const KnowledgeConfig& config = {},
                                       KnowledgeProvenance* provenance = nullptr);

}  // namespace cer

#endif  // CER_KNOWLEDGE_HPP_
