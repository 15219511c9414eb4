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

#include "cer/catalog.hpp"

namespace cer {

namespace {

std::string join_seeds(const std::set<std::string>& seeds) {
  std::string out;
  for (const std::string& s : seeds) {
    if (!out.empty()) out += '|';
    out += s;
  }
  return out;
}

}  // namespace

PathCatalog::PathCatalog(const std::set<std::string>& seeds,
                         bool include_printed_path9) {
  auto add = [this](const std::string& id, PathRole role,
                    const std::string& dsl) {
    PathPattern p = parse_path_dsl(dsl);
    p.set_path_id(id);
    entries_.push_back(CatalogEntry{id, role, std::move(p)});
  };

  add("1", PathRole::Basic, "(VERB, V) -nmod:cmprel-> (CETT, N)");
  add("2", PathRole::Basic, "(*, N) -nmod:cmprel-> (CETT, N)");
  add("3", PathRole::Basic, "(*, J) -nmod:cmprel-> (CETT, N)");
  add("4", PathRole::Basic, "(*, DT) -nmod:cmprel-> (CETT, N)");
  add("5", PathRole::Basic,
      "(VERB, V) -dobj-> (CETT, N) -nmod:poss-> (my, PRP$)");
  // Subject POS accepts PRP alongside the printed DT: the worked examples
  // parse "It" as PRP.
  add("6", PathRole::Basic,
      "(it|this, DT|PRP) <-nsubj- (VERB, V) -dobj-> (CETT, N)");
  add("my", PathRole::Baseline, "(CETT, N) -nmod:poss-> (my, PRP$)");
  add("7", PathRole::Cce,
      "(" + join_seeds(seeds) +
          ", V) -nmod:cmprel-> (CETT, N) -nmod:poss-> (my, PRP$)");
  add("8", PathRole::Dsv,
      "(VERB, V) -nmod:cmprel-> (CETT, N) -nmod:poss-> (my, PRP$)");
  add("9", PathRole::Dsv,
      "(this, DT) <-nsubj- (VERB, V) -dobj-> (CETT, N) -nmod:poss-> (my, "
      "PRP$)");
  if (include_printed_path9) {
    // Literal printed form; has no CETT node and cannot extract entities.
    add("9p", PathRole::Dsv, "(this, DT) <-dobj- (VERB, V) -nmod:poss-> (my, PRP$)");
  }
}

std::vector<const CatalogEntry*> PathCatalog::with_role(PathRole role) const {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : entries_) {
    if (e.role == role) out.push_back(&e);
  }
  return out;
}

const CatalogEntry* PathCatalog::find(const std::string& path_id) const {
  for (const CatalogEntry& e : entries_) {
    if (e.path_id == path_id) return &e;
  }
  return nullptr;
}

}  // namespace cer
