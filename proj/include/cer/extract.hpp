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

#ifndef CER_EXTRACT_HPP_
#define CER_EXTRACT_HPP_

#include <string>
#include <vector>

#include "cer/catalog.hpp"
#include "cer/core.hpp"

namespace cer {

// Expands the token at head_idx into the maximal contiguous <N><N|CD>* noun
// phrase around it: the span's tokens all have POS in class N or tag CD and
// the first token is class N. Throws Error when head POS is not class N.
Span np_chunk(const ParsedSentence& sent, int head_idx);

std::string span_text(const ParsedSentence& sent, Span span);

// Paths 1-6 with VERB slots unconstrained; chunked, deduplicated on
// (sentence_id, span), ordered by (span start, path_id).
std::vector<Extraction> extract_basic(const ParsedSentence& sent,
                                      const PathCatalog& catalog);

// As extract_basic, but VERB bindings must be known verbs (dsv + seeds) and
// single-token CETT chunks must be known candidate entities; multi-token
// chunks skip the entity check. `category` is the containing review's domain
// label; throws DomainMismatchError when it differs from dk.domain.
std::vector<Extraction> extract_with_knowledge(const ParsedSentence& sent,
                                               const PathCatalog& catalog,
                                               const DomainKnowledge& dk,
                                               const std::string& category);

// The "my"-possessive baseline path only, same post-processing.
std::vector<Extraction> extract_baseline_my(const ParsedSentence& sent,
                                            const PathCatalog& catalog);

}  // namespace cer

#endif  // CER_EXTRACT_HPP_
