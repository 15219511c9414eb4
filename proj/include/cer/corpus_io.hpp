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

// File formats (see docs/FORMATS.md): line-delimited JSON for corpora, gold
// annotations and extraction records; one JSON document for knowledge
// bundles. Deterministic key order, so save -> load -> save is byte-stable.

#ifndef CER_CORPUS_IO_HPP_
#define CER_CORPUS_IO_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cer/core.hpp"

namespace cer {

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::vector<Review> load_corpus(const std::string& path);
std::vector<Review> read_corpus(std::istream& in);
void save_corpus(const std::string& path, const std::vector<Review>& reviews);
std::string corpus_to_string(const std::vector<Review>& reviews);

std::map<std::string, GoldAnnotation> load_gold(const std::string& path);
std::map<std::string, GoldAnnotation> read_gold(std::istream& in);
void save_gold(const std::string& path,
               const std::map<std::string, GoldAnnotation>& gold);
std::string gold_to_string(const std::map<std::string, GoldAnnotation>& gold);

DomainKnowledge load_knowledge(const std::string& path);
void save_knowledge(const std::string& path, const DomainKnowledge& dk);
std::string knowledge_to_string(const DomainKnowledge& dk);
DomainKnowledge knowledge_from_string(const std::string& text);

std::vector<Extraction> load_extractions(const std::string& path);
void save_extractions(const std::string& path,
                      const std::vector<Extraction>& extractions);
std::string extractions_to_string(const std::vector<Extraction>& extractions);

// Deterministic pseudo-random sample of min(n, available) reviews of the
// category, returned in corpus order. PRNG and selection algorithm are
// pinned in docs/FORMATS.md. Unknown category yields an empty list.
std::vector<Review> sample_category(const std::vector<Review>& reviews,
                                    const std::string& category, int n,
                                    std::uint32_t seed);

// CoNLL-U reader: one review per stream, sentences split on blank lines.
// Collapses case-marked nmod/obl relations into the nmod:<prep> convention
// used throughout; type mapping documented in docs/FORMATS.md.
Review convert_conllu(std::istream& in, const std::string& review_id,
                      const std::string& product_id,
                      const std::string& category);

// Writes via a temp file in the same directory, then renames into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace cer

#endif  // CER_CORPUS_IO_HPP_
