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

#include "cer/knowledge.hpp"

#include "cer/catalog.hpp"
#include "cer/extract.hpp"

namespace cer {

namespace {

void check_single_category(const std::vector<Review>& reviews) {
  for (std::size_t i = 1; i < reviews.size(); ++i) {
    if (reviews[i].category != reviews[0].category) {
      throw DomainMismatchError("reviews span categories '" +
                                reviews[0].category + "' and '" +
                                reviews[i].category + "'");
    }
  }
}

void record(std::map<std::string, std::vector<std::string>>* store,
            const std::string& key, const std::string& sentence_id) {
  if (store) (*store)[key].push_back(sentence_id);
}

}  // namespace

std::map<std::string, int> expand_cce(const std::vector<Review>& reviews,
                                      const KnowledgeConfig& config,
                                      KnowledgeProvenance* provenance) {
  check_single_category(reviews);
  const PathCatalog catalog(config.seeds, config.use_printed_path9);
  const auto cce_paths = catalog.with_role(PathRole::Cce);
  std::map<std::string, int> counts;
  for (const Review& review : reviews) {
    for (const ParsedSentence& sent : review.sentences) {
      for (const CatalogEntry* entry : cce_paths) {
        for (const PathMatch& m : match_path(entry->pattern, sent)) {
          const Span chunk = np_chunk(sent, m.bindings.at("CETT"));
          const std::string text = to_lower(span_text(sent, chunk));
          ++counts[text];
          record(provenance ? &provenance->cce_sentences : nullptr, text,
                 sent.sentence_id);
        }
      }
    }
  }
  if (config.cce_min_count > 1) {
    std::erase_if(counts, [&](const auto& kv) {
      return kv.second < config.cce_min_count;
    });
  }
  return counts;
}

std::map<std::string, int> expand_dsv(const std::vector<Review>& reviews,
                                      const std::map<std::string, int>& cce,
                                      const KnowledgeConfig& config,
                                      KnowledgeProvenance* provenance) {
  check_single_category(reviews);
  const PathCatalog catalog(config.seeds, config.use_printed_path9);
  const auto dsv_paths = catalog.with_role(PathRole::Dsv);
  std::map<std::string, int> counts;
  std::map<std::string, std::vector<std::string>> origins;
  for (const Review& review : reviews) {
    for (const ParsedSentence& sent : review.sentences) {
      for (const CatalogEntry* entry : dsv_paths) {
        for (const PathMatch& m : match_path(entry->pattern, sent)) {
          auto cett = m.bindings.find("CETT");
          if (cett != m.bindings.end()) {
            // Expansion demands precision: the full lowercased chunk must be
            // a known candidate entity, with no multi-token exception.
            const Span chunk = np_chunk(sent, cett->second);
            if (cce.count(to_lower(span_text(sent, chunk))) == 0) continue;
          }
          auto verb = m.bindings.find("VERB");
          if (verb == m.bindings.end()) continue;
          const Token& t =
              sent.tokens[static_cast<std::size_t>(verb->second - 1)];
          if (config.excluded_verbs.count(t.lemma) > 0) continue;
          ++counts[t.lemma];
          origins[t.lemma].push_back(sent.sentence_id);
        }
      }
    }
  }
  // Frequency threshold: keep verbs tagged more than once.
  std::erase_if(counts, [](const auto& kv) { return kv.second < 2; });
  if (provenance) {
    for (const auto& [lemma, count] : counts) {
      provenance->dsv_sentences[lemma] = origins[lemma];
    }
  }
  return counts;
}

DomainKnowledge build_domain_knowledge(const std::vector<Review>& reviews,
                                       const KnowledgeConfig& config,
                                       KnowledgeProvenance* provenance) {
  check_single_category(reviews);
  DomainKnowledge dk;
  dk.domain = reviews.empty() ? "" : reviews[0].category;
  dk.seed_verbs = config.seeds;
  dk.source_review_count = static_cast<int>(reviews.size());
  dk.cce = expand_cce(reviews, config, provenance);
  dk.dsv = expand_dsv(reviews, dk.cce, config, provenance);
  return dk;
}

}  // namespace cer
