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

#include <chrono>
#include <climits>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cer/catalog.hpp"
#include "cer/corpus_io.hpp"
#include "cer/eval.hpp"
#include "cer/extract.hpp"
#include "cer/knowledge.hpp"
#include "cer/path.hpp"

namespace {

std::set<std::string> parse_seed_list(const std::string& csv) {
  std::set<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.insert(cer::to_lower(item));
  }
  return out;
}

struct ExpandOpts {
  std::string corpus, category, out;
  int sample = -1;
  std::uint32_t seed = 42;
  std::string seeds = "fit,work";
  std::string exclude_verbs;
  int cce_min_count = 0;
  bool printed_path9 = false;
};

int run_expand(const ExpandOpts& opt) {
  const auto reviews = cer::load_corpus(opt.corpus);
  const int n = opt.sample < 0 ? INT_MAX : opt.sample;
  const auto sampled =
      cer::sample_category(reviews, opt.category, n, opt.seed);
  if (sampled.empty()) {
    std::cerr << "warning: no reviews selected for category '" << opt.category
              << "'\n";
  }
  cer::KnowledgeConfig config;
  config.seeds = parse_seed_list(opt.seeds);
  config.cce_min_count = opt.cce_min_count;
  config.excluded_verbs = parse_seed_list(opt.exclude_verbs);
  config.use_printed_path9 = opt.printed_path9;

  const auto start = std::chrono::steady_clock::now();
  cer::DomainKnowledge dk = cer::build_domain_knowledge(sampled, config);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (dk.domain.empty()) dk.domain = opt.category;

  cer::save_knowledge(opt.out, dk);
  std::cout << "category: " << opt.category << "\n"
            << "reviews mined: " << dk.source_review_count << "\n"
            << "candidate entities: " << dk.cce.size() << "\n"
            << "domain verbs: " << dk.dsv.size() << "\n"
            << "time: " << elapsed.count() << "s\n";
  return 0;
}

struct ExtractOpts {
  std::string corpus, knowledge, mode = "basic", out;
  std::string seeds = "fit,work";
};

int run_extract(const ExtractOpts& opt) {
  const auto reviews = cer::load_corpus(opt.corpus);
  const cer::PathCatalog catalog(parse_seed_list(opt.seeds));
  cer::DomainKnowledge dk;
  if (opt.mode == "knowledge") {
    if (opt.knowledge.empty()) {
      std::cerr << "error: --mode knowledge requires --knowledge\n";
      return 1;
    }
    dk = cer::load_knowledge(opt.knowledge);
  }
  std::vector<cer::Extraction> all;
  for (const cer::Review& review : reviews) {
    if (opt.mode == "knowledge" && review.category != dk.domain) {
      std::cerr << "warning: skipping review " << review.review_id
                << " (category '" << review.category
                << "' does not match knowledge domain '" << dk.domain
                << "')\n";
      continue;
    }
    for (const cer::ParsedSentence& sent : review.sentences) {
      std::vector<cer::Extraction> found;
      if (opt.mode == "basic") {
        found = cer::extract_basic(sent, catalog);
      } else if (opt.mode == "knowledge") {
        found = cer::extract_with_knowledge(sent, catalog, dk, review.category);
      } else {
        found = cer::extract_baseline_my(sent, catalog);
      }
      all.insert(all.end(), found.begin(), found.end());
    }
  }
  cer::save_extractions(opt.out, all);
  std::cout << "extractions: " << all.size() << "\n";
  return 0;
}

struct EvaluateOpts {
  std::string pred, gold, corpus, out;
  std::string mode = "equality";
  bool per_product = false;
};

int run_evaluate(const EvaluateOpts& opt) {
  const auto preds = cer::load_extractions(opt.pred);
  const auto gold = cer::load_gold(opt.gold);
  const cer::MatchMode mode = opt.mode == "containment"
                                  ? cer::MatchMode::Containment
                                  : cer::MatchMode::Equality;
  std::map<std::string, std::string> review_product;
  if (!opt.corpus.empty()) {
    for (const cer::Review& r : cer::load_corpus(opt.corpus)) {
      review_product[r.review_id] = r.product_id;
    }
  }
  std::map<std::string, std::vector<cer::Extraction>> by_sentence;
  std::map<std::string, std::string> sentence_review;
  for (const cer::Extraction& e : preds) {
    if (gold.count(e.sentence_id) == 0) {
      std::cerr << "error: prediction '" << e.text << "' references sentence '"
                << e.sentence_id << "' absent from the gold file\n";
      return 1;
    }
    by_sentence[e.sentence_id].push_back(e);
    sentence_review[e.sentence_id] = e.review_id;
  }
  std::map<std::string, std::vector<cer::Counts>> counts_by_product;
  for (const auto& [sentence_id, annotation] : gold) {
    std::vector<cer::Extraction> sent_preds;
    auto it = by_sentence.find(sentence_id);
    if (it != by_sentence.end()) sent_preds = it->second;
    std::string product = "all";
    if (!review_product.empty()) {
      // Sentence ids are <review_id>:<ordinal>.
      const std::string review_id =
          sentence_id.substr(0, sentence_id.rfind(':'));
      auto rp = review_product.find(review_id);
      if (rp != review_product.end()) product = rp->second;
    }
    counts_by_product[product].push_back(
        cer::score_sentence(sent_preds, annotation, mode));
  }
  const cer::EvalReport report = cer::aggregate(counts_by_product, mode);
  if (opt.per_product) {
    std::cout << cer::render_report(report);
  } else {
    const cer::Metrics& m = report.overall;
    std::cout << "mode: " << cer::mode_name(mode) << "  tp: " << m.counts.tp
              << "  fp: " << m.counts.fp << "  fn: " << m.counts.fn
              << "  P: " << m.precision << "  R: " << m.recall
              << "  F1: " << m.f1 << "\n";
  }
  if (!opt.out.empty()) {
    cer::write_file_atomic(opt.out, cer::report_to_json(report));
  }
  return 0;
}

struct MatchOpts {
  std::string path_dsl, path_id, sentence_file;
  bool explain = false;
};

int run_match(const MatchOpts& opt) {
  cer::PathPattern pattern;
  if (!opt.path_dsl.empty()) {
    try {
      pattern = cer::parse_path_dsl(opt.path_dsl);
      pattern.set_path_id("cli");
    } catch (const cer::PathSyntaxError& e) {
      std::cerr << "error: " << e.what() << "\n  " << opt.path_dsl << "\n  "
                << std::string(e.position(), ' ') << "^\n";
      return 1;
    }
  } else if (!opt.path_id.empty()) {
    const cer::PathCatalog catalog;
    const cer::CatalogEntry* entry = catalog.find(opt.path_id);
    if (!entry) {
      std::cerr << "error: unknown catalog path id '" << opt.path_id << "'\n";
      return 1;
    }
    pattern = entry->pattern;
  } else {
    std::cerr << "error: provide --path or --path-id\n";
    return 1;
  }

  std::cout << "path: " << cer::to_dsl(pattern) << "\n";
  for (const cer::Review& review : cer::load_corpus(opt.sentence_file)) {
    for (const cer::ParsedSentence& sent : review.sentences) {
      for (const cer::PathMatch& m : cer::match_path(pattern, sent)) {
        std::cout << sent.sentence_id << ":";
        for (const auto& [tag, idx] : m.bindings) {
          std::cout << " " << tag << "=" << idx;
        }
        std::cout << " relations=[";
        for (std::size_t i = 0; i < m.matched_relations.size(); ++i) {
          const cer::DependencyRelation& r = m.matched_relations[i];
          std::cout << (i ? " " : "") << r.rel_type << "(" << r.gov_idx << ","
                    << r.dep_idx << ")";
        }
        std::cout << "]\n";
        if (opt.explain) {
          for (std::size_t i = 0; i < m.matched_relations.size(); ++i) {
            std::cout << "  segment " << i + 1 << ":\n";
            for (const std::string& line : cer::explain_segment(
                     pattern.segment(i), m.matched_relations[i], sent)) {
              std::cout << "    " << line << "\n";
            }
          }
        }
      }
    }
  }
  return 0;
}

struct ConvertOpts {
  std::string in, out, review_id = "r1", product, category = "unknown";
};

int run_convert(const ConvertOpts& opt) {
  std::ifstream in(opt.in);
  if (!in) {
    std::cerr << "error: cannot open " << opt.in << "\n";
    return 1;
  }
  const cer::Review review =
      cer::convert_conllu(in, opt.review_id, opt.product, opt.category);
  cer::save_corpus(opt.out, {review});
  std::cout << "sentences: " << review.sentences.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complementary-entity recognition over dependency-parsed "
               "product reviews"};
  app.require_subcommand(1);

  ExpandOpts expand_opts;
  CLI::App* expand = app.add_subcommand(
      "expand", "bootstrap domain knowledge from a category corpus");
  expand->add_option("--corpus", expand_opts.corpus)->required()
      ->envname("CER_CORPUS");
  expand->add_option("--category", expand_opts.category)->required()
      ->envname("CER_CATEGORY");
  expand->add_option("--sample", expand_opts.sample,
                     "number of reviews to sample (-1 = all)");
  expand->add_option("--seed", expand_opts.seed)->envname("CER_SEED");
  expand->add_option("--seeds", expand_opts.seeds,
                     "comma-separated seed verb lemmas");
  expand->add_option("--cce-min-count", expand_opts.cce_min_count);
  expand->add_option("--exclude-verbs", expand_opts.exclude_verbs);
  expand->add_flag("--printed-path9", expand_opts.printed_path9);
  expand->add_option("--out", expand_opts.out)->required();

  ExtractOpts extract_opts;
  CLI::App* extract =
      app.add_subcommand("extract", "run the path catalog over a corpus");
  extract->add_option("--corpus", extract_opts.corpus)->required()
      ->envname("CER_CORPUS");
  extract->add_option("--knowledge", extract_opts.knowledge)
      ->envname("CER_KNOWLEDGE");
  extract->add_option("--mode", extract_opts.mode)
      ->check(CLI::IsMember({"basic", "knowledge", "baseline-my"}));
  extract->add_option("--seeds", extract_opts.seeds);
  extract->add_option("--out", extract_opts.out)->required();

  EvaluateOpts eval_opts;
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "score extractions against gold");
  evaluate->add_option("--pred", eval_opts.pred)->required();
  evaluate->add_option("--gold", eval_opts.gold)->required()
      ->envname("CER_GOLD");
  evaluate->add_option("--mode", eval_opts.mode)
      ->check(CLI::IsMember({"equality", "containment"}));
  evaluate->add_option("--corpus", eval_opts.corpus,
                       "resolve review -> product grouping")
      ->envname("CER_CORPUS");
  evaluate->add_flag("--per-product", eval_opts.per_product);
  evaluate->add_option("--out", eval_opts.out, "also write a JSON report");

  MatchOpts match_opts;
  CLI::App* match =
      app.add_subcommand("match", "debug a path against sentences");
  match->add_option("--path", match_opts.path_dsl, "path DSL text");
  match->add_option("--path-id", match_opts.path_id, "built-in path id");
  match->add_option("--sentence-file", match_opts.sentence_file)->required();
  match->add_flag("--explain", match_opts.explain);

  ConvertOpts convert_opts;
  CLI::App* convert =
      app.add_subcommand("convert", "convert a CoNLL-U export to corpus form");
  convert->add_option("--in", convert_opts.in)->required();
  convert->add_option("--out", convert_opts.out)->required();
  convert->add_option("--review-id", convert_opts.review_id);
  convert->add_option("--product", convert_opts.product);
  convert->add_option("--category", convert_opts.category);

  CLI11_PARSE(app, argc, argv);

  try {
    if (expand->parsed()) return run_expand(expand_opts);
    if (extract->parsed()) return run_extract(extract_opts);
    if (evaluate->parsed()) return run_evaluate(eval_opts);
    if (match->parsed()) return run_match(match_opts);
    if (convert->parsed()) return run_convert(convert_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
