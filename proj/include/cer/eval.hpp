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

#ifndef CER_EVAL_HPP_
#define CER_EVAL_HPP_

#include <map>
#include <string>
#include <vector>

#include "cer/core.hpp"

namespace cer {

// equality: case-insensitive string equality.
// containment: contiguous token-subsequence in either direction,
// case-insensitive; never stricter than equality.
enum class MatchMode { Equality, Containment };

struct Counts {
  int tp = 0;
  int fp = 0;
  int fn = 0;

  bool operator==(const Counts&) const = default;
  Counts& operator+=(const Counts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
};

struct Metrics {
  Counts counts;
  double precision = 0.0;  // tp/(tp+fp), 0/0 -> 0
  double recall = 0.0;     // tp/(tp+fn), 0/0 -> 0
  double f1 = 0.0;         // harmonic mean, 0 when p+r = 0
};

Metrics compute_metrics(Counts counts);

struct EvalReport {
  std::map<std::string, Metrics> per_product;
  Metrics overall;  // micro-averaged over all products
  MatchMode mode = MatchMode::Equality;
};

// Greedy one-to-one matching between predicted and gold strings; each gold
// entity is consumed at most once. Throws Error on sentence-id mismatch.
Counts score_sentence(const std::vector<Extraction>& pred,
                      const GoldAnnotation& gold, MatchMode mode);

// Micro-averaged sums per product plus an overall total.
EvalReport aggregate(
    const std::map<std::string, std::vector<Counts>>& counts_by_product,
    MatchMode mode);

// Aligned human-readable P/R/F1 table.
std::string render_report(const EvalReport& report);
std::string report_to_json(const EvalReport& report);

const char* mode_name(MatchMode mode);

}  // namespace cer

#endif  // CER_EVAL_HPP_
