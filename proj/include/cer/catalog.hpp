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

#ifndef CER_CATALOG_HPP_
#define CER_CATALOG_HPP_

#include <set>
#include <string>
#include <vector>

#include "cer/path.hpp"

namespace cer {

enum class PathRole { Basic, Baseline, Cce, Dsv };

struct CatalogEntry {
  std::string path_id;
  PathRole role;
  PathPattern pattern;
};

// The built-in paths: extraction paths 1-6, the "my"-possessive baseline,
// and the knowledge-expansion paths 7-9.
class PathCatalog {
 public:
  // seeds: lemma set substituted into path 7 (default {fit, work});
  // include_printed_path9: also register the literal printed form of path 9
  // ("9p", no CETT node), off by default.
  explicit PathCatalog(const std::set<std::string>& seeds = {"fit", "work"},
                       bool include_printed_path9 = false);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<const CatalogEntry*> with_role(PathRole role) const;
  const CatalogEntry* find(const std::string& path_id) const;

 private:
  std::vector<CatalogEntry> entries_;
};

}  // namespace cer

#endif  // CER_CATALOG_HPP_
