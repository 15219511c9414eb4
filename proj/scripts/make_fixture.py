#!/usr/bin/env python3
# Copyright 2026 The cer Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Assembles the 50-review fixture corpus from hand-written template parses.

This script performs no pattern matching: every parse, every gold label and
every expected knowledge count below was written out by hand, so the fixture
stays an independent oracle for the extraction and expansion code.
"""

import json
import os

CATEGORY = "micro sd card"
PRODUCTS = ["sd-card-A", "sd-card-B", "sd-card-C"]

# (name, multiplicity, tokens [(surface, lemma, pos)], deps [(type, gov, dep)],
#  gold entities)
TEMPLATES = [
    ("T1", 7,
     [("It", "it", "PRP"), ("works", "work", "VBZ"), ("with", "with", "IN"),
      ("my", "my", "PRP$"), ("phone", "phone", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("case", 5, 3), ("nmod:poss", 5, 4),
      ("nmod:with", 2, 5)],
     ["phone"]),
    ("T2", 2,
     [("It", "it", "PRP"), ("works", "work", "VBZ"), ("with", "with", "IN"),
      ("my", "my", "PRP$"), ("Samsung", "samsung", "NNP"),
      ("Galaxy", "galaxy", "NNP"), ("S6", "s6", "NNP")],
     [("nsubj", 2, 1), ("root", 0, 2), ("case", 7, 3), ("nmod:poss", 7, 4),
      ("compound", 7, 5), ("compound", 7, 6), ("nmod:with", 2, 7)],
     ["Samsung Galaxy S6"]),
    ("T3", 2,
     [("It", "it", "PRP"), ("fits", "fit", "VBZ"), ("my", "my", "PRP$"),
      ("tablet", "tablet", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("nmod:poss", 4, 3), ("dobj", 2, 4)],
     ["tablet"]),
    ("T4", 2,
     [("It", "it", "PRP"), ("works", "work", "VBZ"), ("with", "with", "IN"),
      ("my", "my", "PRP$"), ("tablet", "tablet", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("case", 5, 3), ("nmod:poss", 5, 4),
      ("nmod:with", 2, 5)],
     ["tablet"]),
    ("T5", 2,
     [("I", "i", "PRP"), ("insert", "insert", "VBP"), ("the", "the", "DT"),
      ("card", "card", "NN"), ("into", "into", "IN"), ("my", "my", "PRP$"),
      ("phone", "phone", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("det", 4, 3), ("dobj", 2, 4),
      ("case", 7, 5), ("nmod:poss", 7, 6), ("nmod:into", 2, 7)],
     ["phone"]),
    ("T6", 2,
     [("This", "this", "DT"), ("holds", "hold", "VBZ"), ("my", "my", "PRP$"),
      ("phone", "phone", "NN"), ("well", "well", "RB")],
     [("nsubj", 2, 1), ("root", 0, 2), ("nmod:poss", 4, 3), ("dobj", 2, 4),
      ("advmod", 2, 5)],
     ["phone"]),
    ("T7", 4,
     [("It", "it", "PRP"), ("works", "work", "VBZ"), ("in", "in", "IN"),
      ("practice", "practice", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("case", 4, 3), ("nmod:in", 2, 4)],
     []),
    ("T8", 3,
     [("It", "it", "PRP"), ("has", "have", "VBZ"), ("fast", "fast", "JJ"),
      ("speed", "speed", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("amod", 4, 3), ("dobj", 2, 4)],
     []),
    ("T9", 1,
     [("It", "it", "PRP"), ("prevents", "prevent", "VBZ"),
      ("my", "my", "PRP$"), ("finger", "finger", "NN"),
      ("going", "go", "VBG"), ("numb", "numb", "JJ")],
     [("nsubj", 2, 1), ("root", 0, 2), ("nmod:poss", 4, 3), ("dobj", 2, 4),
      ("acl", 4, 5), ("xcomp", 5, 6)],
     []),
    ("T10", 2,
     [("I", "i", "PRP"), ("plug", "plug", "VBP"), ("it", "it", "PRP"),
      ("into", "into", "IN"), ("my", "my", "PRP$"),
      ("camera", "camera", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("dobj", 2, 3), ("case", 6, 4),
      ("nmod:poss", 6, 5), ("nmod:into", 2, 6)],
     ["camera"]),
    ("T11", 1,
     [("It", "it", "PRP"), ("works", "work", "VBZ"), ("with", "with", "IN"),
      ("my", "my", "PRP$"), ("camera", "camera", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("case", 5, 3), ("nmod:poss", 5, 4),
      ("nmod:with", 2, 5)],
     ["camera"]),
    ("T12", 1,
     [("I", "i", "PRP"), ("transfer", "transfer", "VBP"),
      ("files", "file", "NNS"), ("to", "to", "IN"), ("my", "my", "PRP$"),
      ("phone", "phone", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("dobj", 2, 3), ("case", 6, 4),
      ("nmod:poss", 6, 5), ("nmod:to", 2, 6)],
     ["phone"]),
    ("T13", 2,
     [("No", "no", "DT"), ("problem", "problem", "NN"),
      ("with", "with", "IN"), ("my", "my", "PRP$"), ("phone", "phone", "NN")],
     [("neg", 2, 1), ("root", 0, 2), ("case", 5, 3), ("nmod:poss", 5, 4),
      ("nmod:with", 2, 5)],
     ["phone"]),
    ("T14", 2,
     [("It", "it", "PRP"), ("is", "be", "VBZ"),
      ("compatible", "compatible", "JJ"), ("with", "with", "IN"),
      ("my", "my", "PRP$"), ("phone", "phone", "NN")],
     [("nsubj", 3, 1), ("cop", 3, 2), ("root", 0, 3), ("case", 6, 4),
      ("nmod:poss", 6, 5), ("nmod:with", 3, 6)],
     ["phone"]),
    ("T15", 2,
     [("I", "i", "PRP"), ("use", "use", "VBP"), ("this", "this", "DT"),
      ("for", "for", "IN"), ("my", "my", "PRP$"), ("phone", "phone", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("dobj", 2, 3), ("case", 6, 4),
      ("nmod:poss", 6, 5), ("nmod:for", 3, 6)],
     ["phone"]),
    ("T16", 1,
     [("It", "it", "PRP"), ("works", "work", "VBZ"), ("with", "with", "IN"),
      ("my", "my", "PRP$"), ("phone", "phone", "NN"), (",", ",", ","),
      ("laptop", "laptop", "NN"), ("and", "and", "CC"),
      ("tablet", "tablet", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("case", 5, 3), ("nmod:poss", 5, 4),
      ("nmod:with", 2, 5), ("punct", 5, 6), ("conj", 5, 7), ("cc", 5, 8),
      ("nmod:with", 2, 7), ("nmod:with", 2, 9), ("conj", 5, 9)],
     ["phone", "laptop", "tablet"]),
    ("T17", 1,
     [("It", "it", "PRP"), ("works", "work", "VBZ"), ("with", "with", "IN"),
      ("my", "my", "PRP$"), ("laptop", "laptop", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("case", 5, 3), ("nmod:poss", 5, 4),
      ("nmod:with", 2, 5)],
     ["laptop"]),
    ("T18", 4,
     [("Samsung", "samsung", "NNP"), ("Galaxy", "galaxy", "NNP"),
      ("S6", "s6", "NNP"), ("is", "be", "VBZ"), ("great", "great", "JJ")],
     [("compound", 3, 1), ("compound", 3, 2), ("nsubj", 5, 3), ("cop", 5, 4),
      ("root", 0, 5)],
     []),
    ("T19", 1,
     [("My", "my", "PRP$"), ("phone", "phone", "NN"),
      ("likes", "like", "VBZ"), ("this", "this", "DT"),
      ("card", "card", "NN")],
     [("nmod:poss", 2, 1), ("nsubj", 3, 2), ("root", 0, 3), ("det", 5, 4),
      ("dobj", 3, 5)],
     ["phone"]),
    ("T20", 3,
     [("It", "it", "PRP"), ("works", "work", "VBZ"), ("in", "in", "IN"),
      ("4G", "4g", "NN")],
     [("nsubj", 2, 1), ("root", 0, 2), ("case", 4, 3), ("nmod:in", 2, 4)],
     []),
    ("T21", 2,
     [("The", "the", "DT"), ("stand", "stand", "NN"),
      ("holds", "hold", "VBZ"), ("my", "my", "PRP$"), ("ipad", "ipad", "NN"),
      ("2", "2", "CD"), ("nicely", "nicely", "RB")],
     [("det", 2, 1), ("nsubj", 3, 2), ("root", 0, 3), ("nmod:poss", 5, 4),
      ("dobj", 3, 5), ("nummod", 5, 6), ("advmod", 3, 7)],
     ["ipad 2"]),
    ("T22", 2,
     [("I", "i", "PRP"), ("store", "store", "VBP"), ("music", "music", "NN"),
      ("on", "on", "IN"), ("my", "my", "PRP$"), ("galaxy", "galaxy", "NNP"),
      ("s4", "s4", "NNP")],
     [("nsubj", 2, 1), ("root", 0, 2), ("dobj", 2, 3), ("case", 7, 4),
      ("nmod:poss", 7, 5), ("compound", 7, 6), ("nmod:on", 2, 7)],
     ["galaxy s4"]),
    ("T23", 1,
     [("It", "it", "PRP"), ("works", "work", "VBZ"), ("with", "with", "IN"),
      ("my", "my", "PRP$"), ("galaxy", "galaxy", "NNP"),
      ("s4", "s4", "NNP")],
     [("nsubj", 2, 1), ("root", 0, 2), ("case", 6, 3), ("nmod:poss", 6, 4),
      ("compound", 6, 5), ("nmod:with", 2, 6)],
     ["galaxy s4"]),
]

# Hand-derived from the template table above (multiplicities times one
# occurrence per instance; see tests for the per-template reasoning).
EXPECTED_KNOWLEDGE = {
    "domain": CATEGORY,
    "seed_verbs": ["fit", "work"],
    "source_review_count": 50,
    "cce": [
        {"text": "camera", "count": 1},
        {"text": "galaxy s4", "count": 1},
        {"text": "laptop", "count": 1},
        {"text": "phone", "count": 8},
        {"text": "samsung galaxy s6", "count": 2},
        {"text": "tablet", "count": 2},
    ],
    "dsv": [
        {"lemma": "hold", "count": 2},
        {"lemma": "insert", "count": 2},
        {"lemma": "plug", "count": 2},
        {"lemma": "store", "count": 2},
        {"lemma": "work", "count": 15},
    ],
}


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "data", "fixtures")
    os.makedirs(out_dir, exist_ok=True)

    corpus_lines = []
    gold_lines = []
    review_no = 0
    for name, mult, tokens, deps, gold in TEMPLATES:
        for _ in range(mult):
            review_no += 1
            review_id = f"r{review_no:03d}"
            review = {
                "review_id": review_id,
                "product_id": PRODUCTS[(review_no - 1) % len(PRODUCTS)],
                "category": CATEGORY,
                "sentences": [{
                    "tokens": [
                        {"index": i + 1, "surface": s, "lemma": l, "pos": p}
                        for i, (s, l, p) in enumerate(tokens)
                    ],
                    "deps": [
                        {"type": t, "gov": g, "dep": d} for t, g, d in deps
                    ],
                }],
            }
            corpus_lines.append(json.dumps(review))
            gold_lines.append(json.dumps(
                {"sentence_id": f"{review_id}:1", "entities": gold}))
    assert review_no == 50, review_no

    with open(os.path.join(out_dir, "corpus.jsonl"), "w") as f:
        f.write("\n".join(corpus_lines) + "\n")
    with open(os.path.join(out_dir, "gold.jsonl"), "w") as f:
        f.write("\n".join(gold_lines) + "\n")
    with open(os.path.join(out_dir, "expected_knowledge.json"), "w") as f:
        json.dump(EXPECTED_KNOWLEDGE, f, indent=2)
        f.write("\n")
    print(f"wrote {review_no} reviews to {out_dir}")


if __name__ == "__main__":
    main()
