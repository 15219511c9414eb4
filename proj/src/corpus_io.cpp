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

#include "cer/corpus_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

namespace cer {

using json = nlohmann::ordered_json;

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return in;
}

json parse_line(const std::string& line, int line_no) {
  try {
    return json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON record: ") + e.what(),
                     line_no);
  }
}

template <typename T>
T field(const json& j, const char* name, int line_no) {
  if (!j.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'", line_no);
  }
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + name + "' has wrong type",
                     line_no);
  }
}

Review review_from_json(const json& j, int line_no) {
  Review review;
  review.review_id = field<std::string>(j, "review_id", line_no);
  review.product_id = field<std::string>(j, "product_id", line_no);
  review.category = field<std::string>(j, "category", line_no);
  if (review.category.empty()) {
    throw ParseError("empty category", line_no);
  }
  int ordinal = 0;
  for (const json& js : field<json>(j, "sentences", line_no)) {
    ParsedSentence sent;
    sent.review_id = review.review_id;
    sent.sentence_id = make_sentence_id(review.review_id, ++ordinal);
    for (const json& jt : field<json>(js, "tokens", line_no)) {
      Token t;
      t.index = field<int>(jt, "index", line_no);
      t.surface = field<std::string>(jt, "surface", line_no);
      t.pos = field<std::string>(jt, "pos", line_no);
      if (jt.contains("lemma") && jt.at("lemma").is_string() &&
          !jt.at("lemma").get<std::string>().empty()) {
        t.lemma = to_lower(jt.at("lemma").get<std::string>());
      } else {
        t.lemma = to_lower(t.surface);
      }
      sent.tokens.push_back(std::move(t));
    }
    for (const json& jr : field<json>(js, "deps", line_no)) {
      DependencyRelation r;
      r.rel_type = field<std::string>(jr, "type", line_no);
      r.gov_idx = field<int>(jr, "gov", line_no);
      r.dep_idx = field<int>(jr, "dep", line_no);
      sent.relations.push_back(std::move(r));
    }
    try {
      sent.validate();
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
    review.sentences.push_back(std::move(sent));
  }
  return review;
}

json review_to_json(const Review& review) {
  json j;
  j["review_id"] = review.review_id;
  j["product_id"] = review.product_id;
  j["category"] = review.category;
  j["sentences"] = json::array();
  for (const ParsedSentence& sent : review.sentences) {
    json js;
    js["tokens"] = json::array();
    for (const Token& t : sent.tokens) {
      js["tokens"].push_back(
          {{"index", t.index}, {"surface", t.surface}, {"lemma", t.lemma},
           {"pos", t.pos}});
    }
    js["deps"] = json::array();
    for (const DependencyRelation& r : sent.relations) {
      js["deps"].push_back(
          {{"type", r.rel_type}, {"gov", r.gov_idx}, {"dep", r.dep_idx}});
    }
    j["sentences"].push_back(std::move(js));
  }
  return j;
}

}  // namespace

std::vector<Review> read_corpus(std::istream& in) {
  std::vector<Review> reviews;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    reviews.push_back(review_from_json(parse_line(line, line_no), line_no));
  }
  return reviews;
}

std::vector<Review> load_corpus(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_corpus(in);
}

std::string corpus_to_string(const std::vector<Review>& reviews) {
  std::string out;
  for (const Review& r : reviews) {
    out += review_to_json(r).dump();
    out += '\n';
  }
  return out;
}

void save_corpus(const std::string& path, const std::vector<Review>& reviews) {
  write_file_atomic(path, corpus_to_string(reviews));
}

std::map<std::string, GoldAnnotation> read_gold(std::istream& in) {
  std::map<std::string, GoldAnnotation> gold;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = parse_line(line, line_no);
    GoldAnnotation g;
    g.sentence_id = field<std::string>(j, "sentence_id", line_no);
    g.entities = field<std::vector<std::string>>(j, "entities", line_no);
    for (const std::string& e : g.entities) {
      if (e.empty()) throw ParseError("empty gold entity string", line_no);
    }
    if (!gold.emplace(g.sentence_id, g).second) {
      throw ParseError("duplicate sentence_id '" + g.sentence_id + "'",
                       line_no);
    }
  }
  return gold;
}

std::map<std::string, GoldAnnotation> load_gold(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_gold(in);
}

std::string gold_to_string(const std::map<std::string, GoldAnnotation>& gold) {
  std::string out;
  for (const auto& [id, g] : gold) {
    json j;
    j["sentence_id"] = id;
    j["entities"] = g.entities;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void save_gold(const std::string& path,
               const std::map<std::string, GoldAnnotation>& gold) {
  write_file_atomic(path, gold_to_string(gold));
}

std::string knowledge_to_string(const DomainKnowledge& dk) {
  json j;
  j["domain"] = dk.domain;
  j["seed_verbs"] = dk.seed_verbs;
  j["source_review_count"] = dk.source_review_count;
  j["cce"] = json::array();
  for (const auto& [text, count] : dk.cce) {
    j["cce"].push_back({{"text", text}, {"count", count}});
  }
  j["dsv"] = json::array();
  for (const auto& [lemma, count] : dk.dsv) {
    j["dsv"].push_back({{"lemma", lemma}, {"count", count}});
  }
  return j.dump(2) + "\n";
}

DomainKnowledge knowledge_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed knowledge document: ") + e.what(),
                     1);
  }
  DomainKnowledge dk;
  dk.domain = field<std::string>(j, "domain", 1);
  dk.seed_verbs = field<std::set<std::string>>(j, "seed_verbs", 1);
  dk.source_review_count = field<int>(j, "source_review_count", 1);
  for (const json& je : field<json>(j, "cce", 1)) {
    dk.cce[field<std::string>(je, "text", 1)] = field<int>(je, "count", 1);
  }
  for (const json& je : field<json>(j, "dsv", 1)) {
    dk.dsv[field<std::string>(je, "lemma", 1)] = field<int>(je, "count", 1);
  }
  return dk;
}

DomainKnowledge load_knowledge(const std::string& path) {
  std::ifstream in = open_input(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return knowledge_from_string(buf.str());
}

void save_knowledge(const std::string& path, const DomainKnowledge& dk) {
  write_file_atomic(path, knowledge_to_string(dk));
}

std::string extractions_to_string(const std::vector<Extraction>& extractions) {
  std::string out;
  for (const Extraction& e : extractions) {
    json j;
    j["sentence_id"] = e.sentence_id;
    j["review_id"] = e.review_id;
    j["head"] = e.head_idx;
    j["start"] = e.span.start;
    j["end"] = e.span.end;
    j["text"] = e.text;
    j["path_id"] = e.path_id;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<Extraction> load_extractions(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<Extraction> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = parse_line(line, line_no);
    Extraction e;
    e.sentence_id = field<std::string>(j, "sentence_id", line_no);
    e.review_id = field<std::string>(j, "review_id", line_no);
    e.head_idx = field<int>(j, "head", line_no);
    e.span.start = field<int>(j, "start", line_no);
    e.span.end = field<int>(j, "end", line_no);
    e.text = field<std::string>(j, "text", line_no);
    e.path_id = field<std::string>(j, "path_id", line_no);
    if (e.span.start > e.span.end || !e.span.contains(e.head_idx)) {
      throw ParseError("inconsistent extraction span", line_no);
    }
    out.push_back(std::move(e));
  }
  return out;
}

void save_extractions(const std::string& path,
                      const std::vector<Extraction>& extractions) {
  write_file_atomic(path, extractions_to_string(extractions));
}

std::vector<Review> sample_category(const std::vector<Review>& reviews,
                                    const std::string& category, int n,
                                    std::uint32_t seed) {
  if (n < 0) throw Error("sample size must be >= 0");
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < reviews.size(); ++i) {
    if (reviews[i].category == category) pool.push_back(i);
  }
  const std::size_t take =
      std::min(pool.size(), static_cast<std::size_t>(n));
  if (take < pool.size()) {
    // Partial Fisher-Yates; bounded draws by rejection so results do not
    // depend on the standard library's distribution implementation.
    std::mt19937 gen(seed);
    auto bounded = [&gen](std::uint32_t r) {
      const std::uint32_t limit = UINT32_MAX - UINT32_MAX % r;
      std::uint32_t x;
      do {
        x = gen();
      } while (x >= limit);
      return x % r;
    };
    for (std::size_t i = 0; i < take; ++i) {
      const std::size_t j =
          i + bounded(static_cast<std::uint32_t>(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(take);
    std::sort(pool.begin(), pool.end());
  }
  std::vector<Review> out;
  out.reserve(pool.size());
  for (std::size_t i : pool) out.push_back(reviews[i]);
  return out;
}

Review convert_conllu(std::istream& in, const std::string& review_id,
                      const std::string& product_id,
                      const std::string& category) {
  Review review;
  review.review_id = review_id;
  review.product_id = product_id;
  review.category = category;

  struct Row {
    int id;
    std::string form, lemma, xpos;
    int head;
    std::string deprel;
  };
  std::vector<Row> rows;
  int line_no = 0;

  auto flush = [&]() {
    if (rows.empty()) return;
    ParsedSentence sent;
    sent.review_id = review_id;
    sent.sentence_id = make_sentence_id(
        review_id, static_cast<int>(review.sentences.size()) + 1);
    // Preposition attached below each token via a `case` relation, used to
    // collapse nmod/obl into nmod:<prep>.
    std::map<int, std::string> case_marker;
    for (const Row& r : rows) {
      if (r.deprel == "case") case_marker[r.head] = to_lower(r.form);
    }
    for (const Row& r : rows) {
      Token t;
      t.index = r.id;
      t.surface = r.form;
      t.lemma = (r.lemma.empty() || r.lemma == "_") ? to_lower(r.form)
                                                    : to_lower(r.lemma);
      t.pos = r.xpos;
      sent.tokens.push_back(std::move(t));
    }
    for (const Row& r : rows) {
      DependencyRelation rel;
      rel.gov_idx = r.head;
      rel.dep_idx = r.id;
      std::string type = r.deprel;
      if (type == "obj") type = "dobj";
      if (type == "obl") type = "nmod";
      if (type == "nmod" && case_marker.count(r.id)) {
        type = "nmod:" + case_marker[r.id];
      }
      rel.rel_type = type;
      sent.relations.push_back(std::move(rel));
    }
    try {
      sent.validate();
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
    review.sentences.push_back(std::move(sent));
    rows.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    std::vector<std::string> cols;
    std::string col;
    std::istringstream ls(line);
    while (std::getline(ls, col, '\t')) cols.push_back(col);
    if (cols.size() < 8) {
      throw ParseError("expected at least 8 tab-separated columns", line_no);
    }
    if (cols[0].find('-') != std::string::npos ||
        cols[0].find('.') != std::string::npos) {
      continue;  // multiword-token and empty-node rows
    }
    Row r;
    try {
      r.id = std::stoi(cols[0]);
      r.head = std::stoi(cols[6]);
    } catch (const std::exception&) {
      throw ParseError("non-numeric token id or head", line_no);
    }
    r.form = cols[1];
    r.lemma = cols[2];
    r.xpos = cols[4] == "_" ? cols[3] : cols[4];
    r.deprel = cols[7];
    rows.push_back(std::move(r));
  }
  flush();
  return review;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace cer
