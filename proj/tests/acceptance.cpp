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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cer/catalog.hpp"
#include "cer/corpus_io.hpp"
#include "cer/eval.hpp"
#include "cer/extract.hpp"
#include "cer/knowledge.hpp"
#include "support/builders.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace cer;
using namespace cer::testing;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion,
              detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fixture(const char* name) {
  return std::string(CER_FIXTURE_DIR) + "/" + name;
}

// Equality-mode totals of one extraction mode over the whole fixture.
Counts fixture_counts(const std::vector<Review>& reviews,
                      const std::map<std::string, GoldAnnotation>& gold,
                      bool use_knowledge, const DomainKnowledge& dk) {
  const PathCatalog catalog;
  Counts total;
  for (const Review& review : reviews) {
    for (const ParsedSentence& sent : review.sentences) {
      const auto preds =
          use_knowledge
              ? extract_with_knowledge(sent, catalog, dk, review.category)
              : extract_basic(sent, catalog);
      GoldAnnotation g;
      auto it = gold.find(sent.sentence_id);
      g = it == gold.end() ? GoldAnnotation{sent.sentence_id, {}} : it->second;
      total += score_sentence(preds, g, MatchMode::Equality);
    }
  }
  return total;
}

void criterion_worked_examples() {
  const auto start = std::chrono::steady_clock::now();
  const PathCatalog catalog;
  bool ok = true;
  std::string detail;

  // Path 1 on the canonical five-relation parse of "It works with my phone".
  const ParsedSentence canonical = it_works_with_my_phone();
  const auto m1 = match_path(catalog.find("1")->pattern, canonical);
  if (m1.size() != 1 || m1[0].bindings.at("CETT") != 5) {
    ok = false;
    detail += " path-1 mismatch;";
  }

  // The two-segment pattern through nmod:with and nmod:poss.
  const PathPattern eq2 =
      parse_path_dsl("(*, V) -nmod:with-> (CETT, N) -nmod:poss-> (my, PRP$)");
  const auto m2 = match_path(eq2, canonical);
  if (m2.size() != 1 || m2[0].bindings.at("CETT") != 5) {
    ok = false;
    detail += " two-segment mismatch;";
  }

  // Path 6 must verify the shared verb index on "It fits iPhone".
  const auto m6 = match_path(catalog.find("6")->pattern, it_fits_iphone());
  if (m6.size() != 1 || m6[0].bindings.at("CETT") != 3) {
    ok = false;
    detail += " path-6 mismatch;";
  }

  // Three conjoined complements yield three extractions.
  const auto xs = extract_basic(three_way_conjunction(), catalog);
  if (xs.size() != 3) {
    ok = false;
    detail += " conjunction count " + std::to_string(xs.size()) + ";";
  }

  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) {
    ok = false;
    detail += " too slow;";
  }
  std::ostringstream msg;
  msg << "worked-example goldens (" << elapsed << " s)" << detail;
  report(1, ok, msg.str());
}

void criterion_oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const PathCatalog catalog;
  SentenceGenerator gen(101);
  long checked = 0;
  long disagreements = 0;
  for (int i = 0; i < 10000; ++i) {
    const ParsedSentence sent = gen.next();
    for (const CatalogEntry& entry : catalog.entries()) {
      ++checked;
      if (as_tuple_set(match_path(entry.pattern, sent)) !=
          brute_force_match(entry.pattern, sent)) {
        ++disagreements;
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream msg;
  msg << "matcher vs brute-force oracle, " << checked << " comparisons, "
      << disagreements << " disagreements (" << elapsed << " s)";
  report(2, disagreements == 0 && elapsed < 60.0, msg.str());
}

void criterion_knowledge_oracle() {
  const auto reviews = load_corpus(fixture("corpus.jsonl"));
  const auto expected = load_knowledge(fixture("expected_knowledge.json"));
  const auto built = build_domain_knowledge(reviews);
  const auto rebuilt = build_domain_knowledge(reviews);
  const bool ok = built == expected && built == rebuilt;
  std::ostringstream msg;
  msg << "fixture knowledge bundle (" << built.cce.size() << " cce, "
      << built.dsv.size() << " dsv entries)"
      << (built == expected ? "" : " differs from the frozen bundle");
  report(3, ok, msg.str());
}

void criterion_filtering_effect() {
  const auto reviews = load_corpus(fixture("corpus.jsonl"));
  const auto gold = load_gold(fixture("gold.jsonl"));
  const auto dk = load_knowledge(fixture("expected_knowledge.json"));
  const PathCatalog catalog;

  bool subset_ok = true;
  for (const Review& review : reviews) {
    for (const ParsedSentence& sent : review.sentences) {
      std::set<Span> basic, filtered;
      for (const Extraction& e : extract_basic(sent, catalog))
        basic.insert(e.span);
      for (const Extraction& e :
           extract_with_knowledge(sent, catalog, dk, review.category))
        filtered.insert(e.span);
      if (!std::includes(basic.begin(), basic.end(), filtered.begin(),
                         filtered.end())) {
        subset_ok = false;
      }
    }
  }

  const Counts basic = fixture_counts(reviews, gold, false, dk);
  const Counts knowledge = fixture_counts(reviews, gold, true, dk);
  const Metrics mb = compute_metrics(basic);
  const Metrics mk = compute_metrics(knowledge);
  const bool ok =
      subset_ok && mk.precision > mb.precision && knowledge.fp < basic.fp;
  std::ostringstream msg;
  msg << "knowledge filtering: precision " << mb.precision << " -> "
      << mk.precision << ", fp " << basic.fp << " -> " << knowledge.fp
      << (subset_ok ? "" : ", per-sentence subset violated");
  report(4, ok, msg.str());
}

void criterion_evaluation_arithmetic() {
  const auto reviews = load_corpus(fixture("corpus.jsonl"));
  const auto gold = load_gold(fixture("gold.jsonl"));
  const auto dk = load_knowledge(fixture("expected_knowledge.json"));

  const Counts basic = fixture_counts(reviews, gold, false, dk);
  const Counts knowledge = fixture_counts(reviews, gold, true, dk);

  bool ok = true;
  std::string detail;
  if (basic != Counts{36, 11, 1}) {
    ok = false;
    detail += " basic counts (" + std::to_string(basic.tp) + "," +
              std::to_string(basic.fp) + "," + std::to_string(basic.fn) + ");";
  }
  if (knowledge != Counts{35, 0, 2}) {
    ok = false;
    detail += " knowledge counts (" + std::to_string(knowledge.tp) + "," +
              std::to_string(knowledge.fp) + "," +
              std::to_string(knowledge.fn) + ");";
  }
  const Metrics mb = compute_metrics(basic);
  const Metrics mk = compute_metrics(knowledge);
  const double pb = 36.0 / 47.0, rb = 36.0 / 37.0;
  const double pk = 1.0, rk = 35.0 / 37.0;
  if (mb.precision != pb || mb.recall != rb ||
      mb.f1 != 2.0 * pb * rb / (pb + rb)) {
    ok = false;
    detail += " basic metrics off;";
  }
  if (mk.precision != pk || mk.recall != rk ||
      mk.f1 != 2.0 * pk * rk / (pk + rk)) {
    ok = false;
    detail += " knowledge metrics off;";
  }

  // Count identities under fuzzing.
  std::mt19937 rng(51);
  const std::vector<std::string> vocab = {"phone", "tablet", "galaxy s4",
                                          "galaxy", "laptop"};
  for (int i = 0; i < 1000; ++i) {
    auto draw = [&](int max_len) {
      std::vector<std::string> out;
      const int n = std::uniform_int_distribution<int>(0, max_len)(rng);
      for (int k = 0; k < n; ++k) {
        out.push_back(vocab[std::uniform_int_distribution<std::size_t>(
            0, vocab.size() - 1)(rng)]);
      }
      return out;
    };
    std::vector<Extraction> preds;
    for (const std::string& t : draw(4)) {
      Extraction e;
      e.sentence_id = "f:1";
      e.text = t;
      preds.push_back(std::move(e));
    }
    const GoldAnnotation g{"f:1", draw(4)};
    for (MatchMode mode : {MatchMode::Equality, MatchMode::Containment}) {
      const Counts c = score_sentence(preds, g, mode);
      if (c.tp + c.fp != static_cast<int>(preds.size()) ||
          c.tp + c.fn != static_cast<int>(g.entities.size())) {
        ok = false;
        detail += " fuzz identity violated;";
      }
    }
  }

  std::ostringstream msg;
  msg << "evaluation arithmetic: basic (36,11,1), knowledge (35,0,2)"
      << detail;
  report(5, ok, msg.str());
}

void criterion_throughput() {
  const auto reviews = load_corpus(fixture("corpus.jsonl"));
  std::vector<Review> big;
  big.reserve(6000);
  int copy = 0;
  while (big.size() < 6000) {
    for (const Review& r : reviews) {
      if (big.size() >= 6000) break;
      Review clone = r;
      clone.review_id = r.review_id + "-" + std::to_string(copy);
      big.push_back(std::move(clone));
    }
    ++copy;
  }
  const auto start = std::chrono::steady_clock::now();
  const auto dk = build_domain_knowledge(big);
  const double elapsed = seconds_since(start);
  std::ostringstream msg;
  msg << "expansion over " << big.size() << " reviews in " << elapsed
      << " s (" << dk.cce.size() << " cce, " << dk.dsv.size() << " dsv)";
  report(6, elapsed < 10.0, msg.str());
}

void criterion_round_trips() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cer_acceptance";
  fs::create_directories(dir);
  auto read_bytes = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  };

  const auto reviews = load_corpus(fixture("corpus.jsonl"));
  const auto gold = load_gold(fixture("gold.jsonl"));
  const auto dk = load_knowledge(fixture("expected_knowledge.json"));
  const PathCatalog catalog;
  std::vector<Extraction> xs;
  for (const Review& review : reviews) {
    for (const ParsedSentence& sent : review.sentences) {
      for (const Extraction& e : extract_basic(sent, catalog))
        xs.push_back(e);
    }
  }

  bool ok = true;
  std::string detail;
  {
    const fs::path p = dir / "corpus.jsonl";
    save_corpus(p.string(), reviews);
    const std::string first = read_bytes(p);
    save_corpus(p.string(), load_corpus(p.string()));
    if (read_bytes(p) != first) {
      ok = false;
      detail += " corpus;";
    }
  }
  {
    const fs::path p = dir / "gold.jsonl";
    save_gold(p.string(), gold);
    const std::string first = read_bytes(p);
    save_gold(p.string(), load_gold(p.string()));
    if (read_bytes(p) != first) {
      ok = false;
      detail += " gold;";
    }
  }
  {
    const fs::path p = dir / "knowledge.json";
    save_knowledge(p.string(), dk);
    const std::string first = read_bytes(p);
    save_knowledge(p.string(), load_knowledge(p.string()));
    if (read_bytes(p) != first) {
      ok = false;
      detail += " knowledge;";
    }
  }
  {
    const fs::path p = dir / "extractions.jsonl";
    save_extractions(p.string(), xs);
    const std::string first = read_bytes(p);
    save_extractions(p.string(), load_extractions(p.string()));
    if (read_bytes(p) != first) {
      ok = false;
      detail += " extractions;";
    }
  }
  report(7, ok, "byte-stable save/load/save round-trips" + detail);
}

}  // namespace

int main() {
  try {
    criterion_worked_examples();
    criterion_oracle_equivalence();
    criterion_knowledge_oracle();
    criterion_filtering_effect();
    criterion_evaluation_arithmetic();
    criterion_throughput();
    criterion_round_trips();
  } catch (const std::exception& e) {
    std::printf("[FAIL] unexpected exception: %s\n", e.what());
    return 1;
  }
  return g_failures == 0 ? 0 : 1;
}
