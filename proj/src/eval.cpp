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

#include "cer/eval.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace cer {

namespace {

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

bool contiguous_subsequence(const std::vector<std::string>& needle,
                            const std::vector<std::string>& haystack) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + i))
      return true;
  }
  return false;
}

bool pair_matches(const std::string& pred, const std::string& gold,
                  MatchMode mode) {
  const std::string p = to_lower(pred);
  const std::string g = to_lower(gold);
  if (p == g) return true;
  if (mode == MatchMode::Equality) return false;
  const auto pt = tokenize(p);
  const auto gt = tokenize(g);
  return contiguous_subsequence(pt, gt) || contiguous_subsequence(gt, pt);
}

}  // namespace

Metrics compute_metrics(Counts counts) {
  Metrics m;
  m.counts = counts;
  const int pred = counts.tp + counts.fp;
  const int gold = counts.tp + counts.fn;
  m.precision = pred == 0 ? 0.0 : static_cast<double>(counts.tp) / pred;
  m.recall = gold == 0 ? 0.0 : static_cast<double>(counts.tp) / gold;
  m.f1 = (m.precision + m.recall) == 0.0
             ? 0.0
             : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

Counts score_sentence(const std::vector<Extraction>& pred,
                      const GoldAnnotation& gold, MatchMode mode) {
  for (const Extraction& e : pred) {
    if (e.sentence_id != gold.sentence_id) {
      throw Error("prediction for sentence '" + e.sentence_id +
                  "' scored against gold for '" + gold.sentence_id + "'");
    }
  }
  std::vector<bool> consumed(gold.entities.size(), false);
  Counts c;
  for (const Extraction& e : pred) {
    bool matched = false;
    for (std::size_t i = 0; i < gold.entities.size(); ++i) {
      if (consumed[i]) continue;
      if (pair_matches(e.text, gold.entities[i], mode)) {
        consumed[i] = true;
        matched = true;
        break;
      }
    }
    matched ? ++c.tp : ++c.fp;
  }
  for (bool used : consumed) {
    if (!used) ++c.fn;
  }
  return c;
}

EvalReport aggregate(
    const std::map<std::string, std::vector<Counts>>& counts_by_product,
    MatchMode mode) {
  EvalReport report;
  report.mode = mode;
  Counts total;
  for (const auto& [product, sentence_counts] : counts_by_product) {
    Counts product_total;
    for (const Counts& c : sentence_counts) product_total += c;
    report.per_product[product] = compute_metrics(product_total);
    total += product_total;
  }
  report.overall = compute_metrics(total);
  return report;
}

const char* mode_name(MatchMode mode) {
  return mode == MatchMode::Equality ? "equality" : "containment";
}

namespace {

void print_row(std::ostream& out, const std::string& name, const Metrics& m) {
  out << std::left << std::setw(24) << name << std::right << std::setw(6)
      << m.counts.tp << std::setw(6) << m.counts.fp << std::setw(6)
      << m.counts.fn << std::fixed << std::setprecision(3) << std::setw(8)
      << m.precision << std::setw(8) << m.recall << std::setw(8) << m.f1
      << '\n';
}

}  // namespace

std::string render_report(const EvalReport& report) {
  std::ostringstream out;
  out << "match mode: " << mode_name(report.mode) << '\n';
  out << std::left << std::setw(24) << "product" << std::right << std::setw(6)
      << "tp" << std::setw(6) << "fp" << std::setw(6) << "fn" << std::setw(8)
      << "P" << std::setw(8) << "R" << std::setw(8) << "F1" << '\n';
  for (const auto& [product, m] : report.per_product) {
    print_row(out, product, m);
  }
  print_row(out, "OVERALL", report.overall);
  return out.str();
}

std::string report_to_json(const EvalReport& report) {
  using json = nlohmann::ordered_json;
  auto metrics_json = [](const Metrics& m) {
    return json{{"tp", m.counts.tp},          {"fp", m.counts.fp},
                {"fn", m.counts.fn},          {"precision", m.precision},
                {"recall", m.recall},         {"f1", m.f1}};
  };
  json j;
  j["mode"] = mode_name(report.mode);
  j["per_product"] = json::object();
  for (const auto& [product, m] : report.per_product) {
    j["per_product"][product] = metrics_json(m);
  }
  j["overall"] = metrics_json(report.overall);
  return j.dump(2) + "\n";
}

}  // namespace cer
