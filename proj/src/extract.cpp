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

#include "cer/extract.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cer {

namespace {

bool chunkable_pos(const std::string& pos) {
  return pos_is_noun(pos) || pos == "CD";
}

using MatchFilter = std::function<bool(const PathMatch&, Span chunk)>;

std::vector<Extraction> run_paths(const ParsedSentence& sent,
                                  const std::vector<const CatalogEntry*>& paths,
                                  const MatchFilter& keep) {
  std::vector<Extraction> out;
  std::set<Span> seen;
  for (const CatalogEntry* entry : paths) {
    for (const PathMatch& m : match_path(entry->pattern, sent)) {
      auto cett = m.bindings.find("CETT");
      if (cett == m.bindings.end()) continue;
      const Span chunk = np_chunk(sent, cett->second);
      if (keep && !keep(m, chunk)) continue;
      if (!seen.insert(chunk).second) continue;
      out.push_back(Extraction{sent.sentence_id, sent.review_id, cett->second,
                               chunk, span_text(sent, chunk), entry->path_id});
    }
  }
  std::sort(out.begin(), out.end(), [](const Extraction& a, const Extraction& b) {
    return std::tie(a.span.start, a.path_id) < std::tie(b.span.start, b.path_id);
  });
  return out;
}

}  // namespace

Span np_chunk(const ParsedSentence& sent, int head_idx) {
  const int n = static_cast<int>(sent.tokens.size());
  if (head_idx < 1 || head_idx > n) {
    throw Error("np_chunk: head index " + std::to_string(head_idx) +
                " out of range");
  }
  auto pos_at = [&](int idx) -> const std::string& {
    return sent.tokens[static_cast<std::size_t>(idx - 1)].pos;
  };
  if (!pos_is_noun(pos_at(head_idx))) {
    throw Error("np_chunk: head token '" +
                sent.tokens[static_cast<std::size_t>(head_idx - 1)].surface +
                "' has non-noun POS " + pos_at(head_idx));
  }
  Span span{head_idx, head_idx};
  while (span.start > 1 && chunkable_pos(pos_at(span.start - 1))) --span.start;
  while (span.end < n && chunkable_pos(pos_at(span.end + 1))) ++span.end;
  // The pattern demands a class-N first token; numbers may not lead.
  while (span.start < head_idx && !pos_is_noun(pos_at(span.start))) ++span.start;
  return span;
}

std::string span_text(const ParsedSentence& sent, Span span) {
  std::string out;
  for (int i = span.start; i <= span.end; ++i) {
    if (!out.empty()) out += ' ';
    out += sent.tokens[static_cast<std::size_t>(i - 1)].surface;
  }
  return out;
}

std::vector<Extraction> extract_basic(const ParsedSentence& sent,
                                      const PathCatalog& catalog) {
  return run_paths(sent, catalog.with_role(PathRole::Basic), nullptr);
}

std::vector<Extraction> extract_with_knowledge(const ParsedSentence& sent,
                                               const PathCatalog& catalog,
                                               const DomainKnowledge& dk,
                                               const std::string& category) {
  if (dk.domain != category) {
    throw DomainMismatchError("knowledge domain '" + dk.domain +
                              "' does not match review category '" + category +
                              "'");
  }
  auto keep = [&](const PathMatch& m, Span chunk) {
    auto verb = m.bindings.find("VERB");
    if (verb != m.bindings.end()) {
      const Token& t = sent.tokens[static_cast<std::size_t>(verb->second - 1)];
      if (!dk.has_verb(t.lemma)) return false;
    }
    // Named entities rarely recur in the expansion corpus; a multi-token
    // chunk skips the candidate-entity check.
    if (chunk.size() > 1) return true;
    return dk.has_cce(to_lower(span_text(sent, chunk)));
  };
  return run_paths(sent, catalog.with_role(PathRole::Basic), keep);
}

std::vector<Extraction> extract_baseline_my(const ParsedSentence& sent,
                                            const PathCatalog& catalog) {
  return run_paths(sent, catalog.with_role(PathRole::Baseline), nullptr);
}

}  // namespace cer
