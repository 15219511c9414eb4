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

// Dependency-path patterns: a textual DSL, its parser, and the matcher that
// enumerates every assignment of sentence relations to pattern segments.
//
// DSL grammar:
//   path     := node (edge node)+
//   node     := '(' word_pat ',' pos_pat ')'
//   word_pat := '*' | 'CETT' | 'VERB' | literal ('|' literal)*
//   pos_pat  := 'N' | 'V' | 'J' | tag ('|' tag)*
//   edge     := '-' type '->' | '<-' type '-'
//   type     := dependency type, or the macro 'nmod:cmprel'
// Adjacent edges share the node written between them; a forward arrow makes
// the left node the governor, a backward arrow the right node.

#ifndef CER_PATH_HPP_
#define CER_PATH_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cer/core.hpp"

namespace cer {

class PathSyntaxError : public Error {
 public:
  PathSyntaxError(const std::string& msg, std::size_t position)
      : Error(msg + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct WordPattern {
  enum class Kind { Literal, Wildcard, CaptureCETT, SlotVERB };
  Kind kind = Kind::Wildcard;
  std::set<std::string> lemmas;  // non-empty, lowercase, Literal only

  bool operator==(const WordPattern&) const = default;

  // Literal = lemma-set membership; everything else matches any word.
  bool matches(const std::string& lemma) const {
    return kind != Kind::Literal || lemmas.count(lemma) > 0;
  }
};

struct PosPattern {
  enum class Kind { ClassN, ClassV, ClassJ, Exact };
  Kind kind = Kind::Exact;
  std::set<std::string> tags;  // Exact only; usually one tag

  bool operator==(const PosPattern&) const = default;

  bool matches(const std::string& pos) const {
    switch (kind) {
      case Kind::ClassN: return pos_is_noun(pos);
      case Kind::ClassV: return pos_is_verb(pos);
      case Kind::ClassJ: return pos_is_adjective(pos);
      case Kind::Exact: return tags.count(pos) > 0;
    }
    return false;
  }
};

struct EdgePattern {
  enum class Kind { Exact, CmprelMacro };
  Kind kind = Kind::Exact;
  std::string type;  // Exact only

  bool operator==(const EdgePattern&) const = default;

  bool matches(const std::string& rel_type) const;

  // The 7 nmod types covered by nmod:cmprel.
  static const std::vector<std::string>& cmprel_expansions();
};

struct NodePattern {
  WordPattern word;
  PosPattern pos;

  bool operator==(const NodePattern&) const = default;
};

// One edge of the written chain. forward = left node is the governor.
struct ChainEdge {
  EdgePattern edge;
  bool forward = true;

  bool operator==(const ChainEdge&) const = default;
};

// Derived per-edge view: src is always the governor side, dst the dependent.
struct Segment {
  NodePattern src;
  NodePattern dst;
  EdgePattern edge;
  int src_node = 0;  // index into PathPattern::nodes
  int dst_node = 0;
};

enum class SegmentEndpoint { Src, Dst };

// Which endpoint of segment i and segment i+1 is the shared written node.
struct Connection {
  SegmentEndpoint in_prev = SegmentEndpoint::Dst;
  SegmentEndpoint in_next = SegmentEndpoint::Src;
};

class PathPattern {
 public:
  PathPattern() = default;
  PathPattern(std::string path_id, std::vector<NodePattern> nodes,
              std::vector<ChainEdge> edges);

  const std::string& path_id() const { return path_id_; }
  void set_path_id(std::string id) { path_id_ = std::move(id); }
  const std::vector<NodePattern>& nodes() const { return nodes_; }
  const std::vector<ChainEdge>& edges() const { return edges_; }

  std::size_t segment_count() const { return edges_.size(); }
  Segment segment(std::size_t i) const;
  Connection connection(std::size_t i) const;  // between segment i and i+1

  // Node index carrying the CETT / VERB tag, if any.
  std::optional<int> cett_node() const { return cett_node_; }
  bool has_verb_slot() const { return !verb_nodes_.empty(); }
  const std::vector<int>& verb_nodes() const { return verb_nodes_; }

  bool operator==(const PathPattern& o) const {
    return nodes_ == o.nodes_ && edges_ == o.edges_;
  }

 private:
  std::string path_id_;
  std::vector<NodePattern> nodes_;
  std::vector<ChainEdge> edges_;
  std::optional<int> cett_node_;
  std::vector<int> verb_nodes_;
};

// Throws PathSyntaxError on malformed text, Error when two CETT tags appear.
PathPattern parse_path_dsl(const std::string& text);

// Inverse of parse_path_dsl up to whitespace: parse(to_dsl(p)) == p.
std::string to_dsl(const PathPattern& pattern);

struct PathMatch {
  std::string path_id;
  std::map<std::string, int> bindings;  // "CETT" / "VERB" -> token index
  std::vector<DependencyRelation> matched_relations;  // one per segment

  bool operator==(const PathMatch&) const = default;
};

// Pure attribute-level predicate of Def. 8 / Table II: does the segment's
// src/dst/edge pattern cover the relation's gov/dep/type?
bool match_segment(const Segment& seg, const DependencyRelation& rel,
                   const ParsedSentence& sent);

// Enumerates every distinct assignment of one relation per segment such that
// each segment matches and all shared nodes bind to the same token index.
// Results are ordered by (first segment's dep_idx, then lexicographically
// over the remaining bound indices); duplicates by relation tuple are removed.
std::vector<PathMatch> match_path(const PathPattern& pattern,
                                  const ParsedSentence& sent);

// Human-readable per-attribute decisions for one segment vs one relation,
// used by `cer match --explain`.
std::vector<std::string> explain_segment(const Segment& seg,
                                         const DependencyRelation& rel,
                                         const ParsedSentence& sent);

}  // namespace cer

#endif  // CER_PATH_HPP_
