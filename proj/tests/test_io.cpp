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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cer/corpus_io.hpp"
#include "support/builders.hpp"

using namespace cer;
using namespace cer::testing;

namespace {

const char* kTableOneReview = R"({"review_id": "r1", "product_id": "sd-card-A", "category": "micro sd card", "sentences": [{"tokens": [{"index": 1, "surface": "It", "lemma": "it", "pos": "PRP"}, {"index": 2, "surface": "works", "lemma": "work", "pos": "VBZ"}, {"index": 3, "surface": "with", "lemma": "with", "pos": "IN"}, {"index": 4, "surface": "my", "lemma": "my", "pos": "PRP$"}, {"index": 5, "surface": "phone", "lemma": "phone", "pos": "NN"}], "deps": [{"type": "nsubj", "gov": 2, "dep": 1}, {"type": "root", "gov": 0, "dep": 2}, {"type": "case", "gov": 5, "dep": 3}, {"type": "nmod:poss", "gov": 5, "dep": 4}, {"type": "nmod:with", "gov": 2, "dep": 5}]}]}
)";

std::vector<Review> sample_reference(const std::vector<Review>& reviews,
                                     const std::string& category, int n,
                                     std::uint32_t seed) {
  // Reimplementation of the documented algorithm, shared with no library
  // code: partial Fisher-Yates over the category pool with rejection-bounded
  // mt19937 draws, result restored to file order.
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < reviews.size(); ++i) {
    if (reviews[i].category == category) pool.push_back(i);
  }
  if (static_cast<std::size_t>(n) < pool.size()) {
    std::mt19937 gen(seed);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      const std::uint32_t r = static_cast<std::uint32_t>(pool.size() - i);
      const std::uint32_t limit = UINT32_MAX - UINT32_MAX % r;
      std::uint32_t x;
      do {
        x = gen();
      } while (x >= limit);
      std::swap(pool[i], pool[i + x % r]);
    }
    pool.resize(static_cast<std::size_t>(n));
    std::sort(pool.begin(), pool.end());
  }
  std::vector<Review> out;
  for (std::size_t i : pool) out.push_back(reviews[i]);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir =
      std::filesystem::temp_directory_path() / "cer_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("read_corpus parses the canonical review") {
  std::istringstream in(kTableOneReview);
  const auto reviews = read_corpus(in);
  REQUIRE(reviews.size() == 1);
  const Review& r = reviews[0];
  CHECK(r.review_id == "r1");
  CHECK(r.product_id == "sd-card-A");
  CHECK(r.category == "micro sd card");
  REQUIRE(r.sentences.size() == 1);
  const ParsedSentence& sent = r.sentences[0];
  CHECK(sent.sentence_id == "r1:1");
  CHECK(sent.review_id == "r1");
  REQUIRE(sent.tokens.size() == 5);
  REQUIRE(sent.relations.size() == 5);
  CHECK(sent.tokens[4].lemma == "phone");
  CHECK(sent.relations[4] == DependencyRelation{"nmod:with", 2, 5});
}

TEST_CASE("read_corpus lowercases lemmas and falls back to the surface") {
  std::istringstream in(
      R"({"review_id": "r1", "product_id": "p", "category": "c", "sentences": [{"tokens": [{"index": 1, "surface": "iPhone", "pos": "NNP"}, {"index": 2, "surface": "Fits", "lemma": "Fit", "pos": "VBZ"}], "deps": []}]}
)");
  const auto reviews = read_corpus(in);
  CHECK(reviews[0].sentences[0].tokens[0].lemma == "iphone");
  CHECK(reviews[0].sentences[0].tokens[1].lemma == "fit");
}

TEST_CASE("read_corpus returns an empty list on empty input") {
  std::istringstream in("");
  CHECK(read_corpus(in).empty());
}

TEST_CASE("read_corpus reports dangling relations with the line number") {
  std::string good(kTableOneReview);
  std::string bad = good;
  const auto pos = bad.rfind("\"dep\": 5");
  bad.replace(pos, 8, "\"dep\": 9");
  std::istringstream in(good + bad);
  try {
    read_corpus(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("read_corpus rejects malformed JSON and missing fields") {
  std::istringstream garbage("not json\n");
  CHECK_THROWS_AS(read_corpus(garbage), ParseError);
  std::istringstream missing(R"({"review_id": "r1"}
)");
  CHECK_THROWS_AS(read_corpus(missing), ParseError);
}

TEST_CASE("read_gold rejects duplicate sentence ids") {
  std::istringstream in(
      R"({"sentence_id": "r1:1", "entities": ["phone"]}
{"sentence_id": "r1:1", "entities": ["tablet"]}
)");
  try {
    read_gold(in);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("gold entities keep multiset semantics") {
  std::istringstream in(
      R"({"sentence_id": "r1:1", "entities": ["phone", "phone"]}
)");
  const auto gold = read_gold(in);
  CHECK(gold.at("r1:1").entities ==
        std::vector<std::string>{"phone", "phone"});
}

TEST_CASE("corpus round-trips through save and load") {
  const std::vector<Review> reviews = {
      wrap_review(it_works_with_my_phone()),
      wrap_review(three_way_conjunction(), "stylus", "pen-1")};
  const auto path = temp_file("corpus.jsonl");
  save_corpus(path.string(), reviews);
  auto loaded = load_corpus(path.string());
  // Sentence ids are reassigned on load from the review id.
  REQUIRE(loaded.size() == 2);
  CHECK(loaded[0].sentences[0].tokens == reviews[0].sentences[0].tokens);
  CHECK(loaded[0].sentences[0].relations ==
        reviews[0].sentences[0].relations);
  const std::string first = corpus_to_string(loaded);
  save_corpus(path.string(), loaded);
  CHECK(corpus_to_string(load_corpus(path.string())) == first);
}

TEST_CASE("gold round-trips byte-stably") {
  std::map<std::string, GoldAnnotation> gold;
  gold["r1:1"] = GoldAnnotation{"r1:1", {"phone", "galaxy s4"}};
  gold["r2:1"] = GoldAnnotation{"r2:1", {}};
  const std::string once = gold_to_string(gold);
  const auto path = temp_file("gold.jsonl");
  save_gold(path.string(), gold);
  const auto loaded = load_gold(path.string());
  CHECK(loaded == gold);
  CHECK(gold_to_string(loaded) == once);
}

TEST_CASE("knowledge round-trips byte-stably") {
  DomainKnowledge dk;
  dk.domain = "micro sd card";
  dk.seed_verbs = {"fit", "work"};
  dk.source_review_count = 50;
  dk.cce = {{"phone", 8}, {"galaxy s4", 1}};
  dk.dsv = {{"hold", 2}, {"work", 15}};
  const std::string once = knowledge_to_string(dk);
  CHECK(knowledge_from_string(once) == dk);
  CHECK(knowledge_to_string(knowledge_from_string(once)) == once);
}

TEST_CASE("extractions round-trip and reject inconsistent spans") {
  std::vector<Extraction> xs = {
      Extraction{"r1:1", "r1", 5, Span{5, 5}, "phone", "1"},
      Extraction{"r1:2", "r1", 6, Span{5, 7}, "Samsung Galaxy S6", "5"}};
  const auto path = temp_file("extractions.jsonl");
  save_extractions(path.string(), xs);
  CHECK(load_extractions(path.string()) == xs);
  std::ofstream(path) << R"({"sentence_id": "r1:1", "review_id": "r1", "head": 9, "start": 5, "end": 5, "text": "phone", "path_id": "1"})"
                      << '\n';
  CHECK_THROWS_AS(load_extractions(path.string()), ParseError);
}

TEST_CASE("sample_category matches the documented algorithm") {
  std::vector<Review> reviews;
  for (int i = 0; i < 40; ++i) {
    Review r = wrap_review(it_fits_iphone(),
                           i % 3 == 0 ? "stylus" : "micro sd card");
    r.review_id = "r" + std::to_string(i);
    reviews.push_back(std::move(r));
  }
  for (std::uint32_t seed : {0u, 1u, 42u, 123456u}) {
    for (int n : {1, 5, 13}) {
      CHECK(sample_category(reviews, "micro sd card", n, seed) ==
            sample_reference(reviews, "micro sd card", n, seed));
    }
  }
}

TEST_CASE("sample_category edge cases") {
  std::vector<Review> reviews;
  for (int i = 0; i < 5; ++i) {
    Review r = wrap_review(it_fits_iphone());
    r.review_id = "r" + std::to_string(i);
    reviews.push_back(std::move(r));
  }
  // Requesting at least the pool size returns everything in file order.
  CHECK(sample_category(reviews, "micro sd card", 5, 9) == reviews);
  CHECK(sample_category(reviews, "micro sd card", 99, 9) == reviews);
  CHECK(sample_category(reviews, "no such category", 3, 9).empty());
  CHECK(sample_category(reviews, "micro sd card", 0, 9).empty());
  // Deterministic, and a subset in corpus order.
  const auto a = sample_category(reviews, "micro sd card", 3, 7);
  const auto b = sample_category(reviews, "micro sd card", 3, 7);
  CHECK(a == b);
  REQUIRE(a.size() == 3);
  CHECK(a[0].review_id < a[1].review_id);
  CHECK(a[1].review_id < a[2].review_id);
}

TEST_CASE("convert_conllu collapses case-marked obliques") {
  std::istringstream in(
      "# text = It works with my phone\n"
      "1\tIt\tit\tPRON\tPRP\t_\t2\tnsubj\t_\t_\n"
      "2\tworks\twork\tVERB\tVBZ\t_\t0\troot\t_\t_\n"
      "3\twith\twith\tADP\tIN\t_\t5\tcase\t_\t_\n"
      "4\tmy\tmy\tPRON\tPRP$\t_\t5\tnmod:poss\t_\t_\n"
      "5\tphone\tphone\tNOUN\tNN\t_\t2\tobl\t_\t_\n"
      "\n"
      "1\tIt\tit\tPRON\tPRP\t_\t2\tnsubj\t_\t_\n"
      "2\tfits\tfit\tVERB\t_\t_\t0\troot\t_\t_\n"
      "3\tiPhone\t_\tPROPN\tNNP\t_\t2\tobj\t_\t_\n");
  const Review r = convert_conllu(in, "r9", "sd-card-A", "micro sd card");
  REQUIRE(r.sentences.size() == 2);
  const ParsedSentence& s0 = r.sentences[0];
  CHECK(s0.sentence_id == "r9:1");
  CHECK(s0.relations[4] == DependencyRelation{"nmod:with", 2, 5});
  CHECK(s0.relations[3] == DependencyRelation{"nmod:poss", 5, 4});
  const ParsedSentence& s1 = r.sentences[1];
  // obj maps to dobj; XPOS "_" falls back to UPOS; lemma "_" to the surface.
  CHECK(s1.relations[2] == DependencyRelation{"dobj", 2, 3});
  CHECK(s1.tokens[1].pos == "VERB");
  CHECK(s1.tokens[2].lemma == "iphone");
}

TEST_CASE("convert_conllu skips comments and range tokens") {
  std::istringstream in(
      "# sent_id = 1\n"
      "1-2\tdoesn't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdoes\tdo\tAUX\tVBZ\t_\t2\taux\t_\t_\n"
      "2\tfit\tfit\tVERB\tVB\t_\t0\troot\t_\t_\n");
  const Review r = convert_conllu(in, "r1", "p", "c");
  REQUIRE(r.sentences.size() == 1);
  CHECK(r.sentences[0].tokens.size() == 2);
}

TEST_CASE("write_file_atomic replaces the target content") {
  const auto path = temp_file("atomic.txt");
  write_file_atomic(path.string(), "first\n");
  write_file_atomic(path.string(), "second\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(content == "second\n");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
}
