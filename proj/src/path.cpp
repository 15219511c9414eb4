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

#include "cer/path.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cer {

const std::vector<std::string>& EdgePattern::cmprel_expansions() {
  static const std::vector<std::string> kTypes = {
      "nmod:with", "nmod:for",    "nmod:in", "nmod:on",
      "nmod:to",   "nmod:inside", "nmod:into"};
  return kTypes;
}

bool EdgePattern::matches(const std::string& rel_type) const {
  if (kind == Kind::Exact) return type == rel_type;
  const auto& types = cmprel_expansions();
  return std::find(types.begin(), types.end(), rel_type) != types.end();
}

PathPattern::PathPattern(std::string path_id, std::vector<NodePattern> nodes,
                         std::vector<ChainEdge> edges)
    : path_id_(std::move(path_id)),
      nodes_(std::move(nodes)),
      edges_(std::move(edges)) {
  if (!edges_.empty() && nodes_.size() != edges_.size() + 1) {
    throw Error("path " + path_id_ + ": node/edge count mismatch");
  }
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    switch (nodes_[static_cast<std::size_t>(i)].word.kind) {
      case WordPattern::Kind::CaptureCETT:
        if (cett_node_) {
          throw Error("path " + path_id_ + ": more than one CETT tag");
        }
        cett_node_ = i;
        break;
      case WordPattern::Kind::SlotVERB:
        verb_nodes_.push_back(i);
        break;
      default:
        break;
    }
  }
}

Segment PathPattern::segment(std::size_t i) const {
  const ChainEdge& e = edges_[i];
  Segment seg;
  seg.edge = e.edge;
  if (e.forward) {
    seg.src_node = static_cast<int>(i);
    seg.dst_node = static_cast<int>(i + 1);
  } else {
    seg.src_node = static_cast<int>(i + 1);
    seg.dst_node = static_cast<int>(i);
  }
  seg.src = nodes_[static_cast<std::size_t>(seg.src_node)];
  seg.dst = nodes_[static_cast<std::size_t>(seg.dst_node)];
  return seg;
}

Connection PathPattern::connection(std::size_t i) const {
  // The shared written node is node i+1.
  Connection c;
  c.in_prev = edges_[i].forward ? SegmentEndpoint::Dst : SegmentEndpoint::Src;
  c.in_next =
      edges_[i + 1].forward ? SegmentEndpoint::Src : SegmentEndpoint::Dst;
  return c;
}

namespace {

class DslParser {
 public:
  explicit DslParser(const std::string& text) : text_(text) {}

  PathPattern parse() {
    std::vector<NodePattern> nodes;
    std::vector<ChainEdge> edges;
    nodes.push_back(parse_node());
    skip_ws();
    if (at_end()) fail("expected an edge after the first node");
    while (!at_end()) {
      edges.push_back(parse_edge());
      nodes.push_back(parse_node());
      skip_ws();
    }
    return PathPattern("", std::move(nodes), std::move(edges));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PathSyntaxError(msg, pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string read_until(char stop) {
    std::size_t begin = pos_;
    while (!at_end() && text_[pos_] != stop) ++pos_;
    if (at_end()) fail(std::string("expected '") + stop + "'");
    std::string out = text_.substr(begin, pos_ - begin);
    // trim
    auto issp = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
    while (!out.empty() && issp(out.front())) out.erase(out.begin());
    while (!out.empty() && issp(out.back())) out.pop_back();
    return out;
  }

  static std::vector<std::string> split_alternation(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == '|') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  }

  WordPattern parse_word_pattern(const std::string& s) {
    WordPattern w;
    if (s == "*") {
      w.kind = WordPattern::Kind::Wildcard;
    } else if (s == "CETT") {
      w.kind = WordPattern::Kind::CaptureCETT;
    } else if (s == "VERB") {
      w.kind = WordPattern::Kind::SlotVERB;
    } else {
      w.kind = WordPattern::Kind::Literal;
      for (const std::string& part : split_alternation(s)) {
        if (part.empty()) fail("empty word alternative");
        w.lemmas.insert(to_lower(part));
      }
    }
    return w;
  }

  PosPattern parse_pos_pattern(const std::string& s) {
    if (s.empty()) fail("empty POS pattern");
    PosPattern p;
    if (s == "N") {
      p.kind = PosPattern::Kind::ClassN;
    } else if (s == "V") {
      p.kind = PosPattern::Kind::ClassV;
    } else if (s == "J") {
      p.kind = PosPattern::Kind::ClassJ;
    } else {
      p.kind = PosPattern::Kind::Exact;
      for (const std::string& part : split_alternation(s)) {
        if (part.empty()) fail("empty POS alternative");
        p.tags.insert(part);
      }
    }
    return p;
  }

  NodePattern parse_node() {
    skip_ws();
    expect('(');
    std::string word = read_until(',');
    if (word.empty()) fail("empty word pattern");
    expect(',');
    std::string pos = read_until(')');
    NodePattern node{parse_word_pattern(word), parse_pos_pattern(pos)};
    expect(')');
    return node;
  }

  std::string read_type() {
    std::size_t begin = pos_;
    while (!at_end()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '_')
        ++pos_;
      else
        break;
    }
    if (pos_ == begin) fail("expected a dependency type");
    return text_.substr(begin, pos_ - begin);
  }

  EdgePattern make_edge_pattern(const std::string& type) {
    EdgePattern e;
    if (type == "nmod:cmprel") {
      e.kind = EdgePattern::Kind::CmprelMacro;
    } else {
      e.kind = EdgePattern::Kind::Exact;
      e.type = type;
    }
    return e;
  }

  ChainEdge parse_edge() {
    skip_ws();
    ChainEdge edge;
    if (peek() == '<') {
      ++pos_;
      expect('-');
      edge.edge = make_edge_pattern(read_type());
      expect('-');
      edge.forward = false;
    } else if (peek() == '-') {
      ++pos_;
      edge.edge = make_edge_pattern(read_type());
      expect('-');
      expect('>');
      edge.forward = true;
    } else {
      fail("expected an edge ('-type->' or '<-type-')");
    }
    return edge;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string word_pattern_to_string(const WordPattern& w) {
  switch (w.kind) {
    case WordPattern::Kind::Wildcard: return "*";
    case WordPattern::Kind::CaptureCETT: return "CETT";
    case WordPattern::Kind::SlotVERB: return "VERB";
    case WordPattern::Kind::Literal: break;
  }
  std::string out;
  for (const std::string& lemma : w.lemmas) {
    if (!out.empty()) out += '|';
    out += lemma;
  }
  return out;
}

std::string pos_pattern_to_string(const PosPattern& p) {
  switch (p.kind) {
    case PosPattern::Kind::ClassN: return "N";
    case PosPattern::Kind::ClassV: return "V";
    case PosPattern::Kind::ClassJ: return "J";
    case PosPattern::Kind::Exact: break;
  }
  std::string out;
  for (const std::string& tag : p.tags) {
    if (!out.empty()) out += '|';
    out += tag;
  }
  return out;
}

std::string edge_type_to_string(const EdgePattern& e) {
  return e.kind == EdgePattern::Kind::CmprelMacro ? "nmod:cmprel" : e.type;
}

}  // namespace

PathPattern parse_path_dsl(const std::string& text) {
  return DslParser(text).parse();
}

std::string to_dsl(const PathPattern& pattern) {
  std::ostringstream out;
  const auto& nodes = pattern.nodes();
  const auto& edges = pattern.edges();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) {
      const ChainEdge& e = edges[i - 1];
      if (e.forward) {
        out << " -" << edge_type_to_string(e.edge) << "-> ";
      } else {
        out << " <-" << edge_type_to_string(e.edge) << "- ";
      }
    }
    out << '(' << word_pattern_to_string(nodes[i].word) << ", "
        << pos_pattern_to_string(nodes[i].pos) << ')';
  }
  return out.str();
}

bool match_segment(const Segment& seg, const DependencyRelation& rel,
                   const ParsedSentence& sent) {
  const Endpoint gov = resolve_endpoint(sent, rel, RelSide::Gov);
  const Endpoint dep = resolve_endpoint(sent, rel, RelSide::Dep);
  return seg.edge.matches(rel.rel_type) && seg.src.word.matches(gov.lemma) &&
         seg.src.pos.matches(gov.pos) && seg.dst.word.matches(dep.lemma) &&
         seg.dst.pos.matches(dep.pos);
}

namespace {

class PathMatcher {
 public:
  PathMatcher(const PathPattern& pattern, const ParsedSentence& sent)
      : pattern_(pattern),
        sent_(sent),
        node_binding_(pattern.nodes().size(), kUnbound) {
    for (std::size_t i = 0; i < pattern.segment_count(); ++i) {
      segments_.push_back(pattern.segment(i));
    }
  }

  std::vector<PathMatch> run() {
    if (segments_.empty()) return {};
    chosen_.reserve(segments_.size());
    descend(0);
    finalize();
    return std::move(results_);
  }

 private:
  static constexpr int kUnbound = -1;

  void descend(std::size_t seg_i) {
    if (seg_i == segments_.size()) {
      emit();
      return;
    }
    const Segment& seg = segments_[seg_i];
    for (const DependencyRelation& rel : sent_.relations) {
      if (!match_segment(seg, rel, sent_)) continue;
      int saved_src = node_binding_[static_cast<std::size_t>(seg.src_node)];
      int saved_dst = node_binding_[static_cast<std::size_t>(seg.dst_node)];
      if (saved_src != kUnbound && saved_src != rel.gov_idx) continue;
      if (saved_dst != kUnbound && saved_dst != rel.dep_idx) continue;
      node_binding_[static_cast<std::size_t>(seg.src_node)] = rel.gov_idx;
      node_binding_[static_cast<std::size_t>(seg.dst_node)] = rel.dep_idx;
      chosen_.push_back(rel);
      descend(seg_i + 1);
      chosen_.pop_back();
      node_binding_[static_cast<std::size_t>(seg.src_node)] = saved_src;
      node_binding_[static_cast<std::size_t>(seg.dst_node)] = saved_dst;
    }
  }

  void emit() {
    // All VERB slots must bind to one token.
    const auto& verb_nodes = pattern_.verb_nodes();
    for (std::size_t i = 1; i < verb_nodes.size(); ++i) {
      if (node_binding_[static_cast<std::size_t>(verb_nodes[i])] !=
          node_binding_[static_cast<std::size_t>(verb_nodes[0])])
        return;
    }
    PathMatch m;
    m.path_id = pattern_.path_id();
    m.matched_relations = chosen_;
    if (pattern_.cett_node()) {
      m.bindings["CETT"] =
          node_binding_[static_cast<std::size_t>(*pattern_.cett_node())];
    }
    if (!verb_nodes.empty()) {
      m.bindings["VERB"] =
          node_binding_[static_cast<std::size_t>(verb_nodes[0])];
    }
    results_.push_back(std::move(m));
  }

  static std::vector<int> order_key(const PathMatch& m) {
    std::vector<int> key;
    key.reserve(m.matched_relations.size() * 2);
    for (const DependencyRelation& r : m.matched_relations) {
      key.push_back(r.dep_idx);
      key.push_back(r.gov_idx);
    }
    return key;
  }

  void finalize() {
    std::stable_sort(results_.begin(), results_.end(),
                     [](const PathMatch& a, const PathMatch& b) {
                       const std::vector<int> ka = order_key(a);
                       const std::vector<int> kb = order_key(b);
                       if (ka != kb) return ka < kb;
                       // Ties broken on the relation tuples, so the result
                       // does not depend on the input relation order.
                       return a.matched_relations < b.matched_relations;
                     });
    results_.erase(std::unique(results_.begin(), results_.end(),
                               [](const PathMatch& a, const PathMatch& b) {
                                 return a.matched_relations ==
                                        b.matched_relations;
                               }),
                   results_.end());
  }

  const PathPattern& pattern_;
  const ParsedSentence& sent_;
  std::vector<Segment> segments_;
  std::vector<int> node_binding_;
  std::vector<DependencyRelation> chosen_;
  std::vector<PathMatch> results_;
};

std::string describe_word(const WordPattern& w, const Endpoint& ep,
                          bool matched) {
  std::ostringstream out;
  switch (w.kind) {
    case WordPattern::Kind::Literal:
      out << "lemma '" << ep.lemma << (matched ? "' in {" : "' not in {")
          << word_pattern_to_string(w) << "}";
      break;
    case WordPattern::Kind::Wildcard:
      out << "wildcard * covers '" << ep.surface << "'";
      break;
    case WordPattern::Kind::CaptureCETT:
      out << "CETT covers '" << ep.surface << "'";
      break;
    case WordPattern::Kind::SlotVERB:
      out << "VERB slot covers '" << ep.surface << "'";
      break;
  }
  return out.str();
}

std::string describe_pos(const PosPattern& p, const Endpoint& ep,
                         bool matched) {
  std::ostringstream out;
  out << "POS " << ep.pos << (matched ? " covered by " : " not covered by ");
  switch (p.kind) {
    case PosPattern::Kind::ClassN: out << "class N"; break;
    case PosPattern::Kind::ClassV: out << "class V"; break;
    case PosPattern::Kind::ClassJ: out << "class J"; break;
    case PosPattern::Kind::Exact:
      out << "{" << pos_pattern_to_string(p) << "}";
      break;
  }
  return out.str();
}

}  // namespace

std::vector<PathMatch> match_path(const PathPattern& pattern,
                                  const ParsedSentence& sent) {
  return PathMatcher(pattern, sent).run();
}

std::vector<std::string> explain_segment(const Segment& seg,
                                         const DependencyRelation& rel,
                                         const ParsedSentence& sent) {
  const Endpoint gov = resolve_endpoint(sent, rel, RelSide::Gov);
  const Endpoint dep = resolve_endpoint(sent, rel, RelSide::Dep);
  std::vector<std::string> lines;
  lines.push_back("src: " + describe_word(seg.src.word, gov,
                                          seg.src.word.matches(gov.lemma)));
  lines.push_back("src: " +
                  describe_pos(seg.src.pos, gov, seg.src.pos.matches(gov.pos)));
  {
    std::ostringstream out;
    out << "edge: type " << rel.rel_type
        << (seg.edge.matches(rel.rel_type) ? " covered by " : " not covered by ")
        << edge_type_to_string(seg.edge);
    lines.push_back(out.str());
  }
  lines.push_back("dst: " + describe_word(seg.dst.word, dep,
                                          seg.dst.word.matches(dep.lemma)));
  lines.push_back("dst: " +
                  describe_pos(seg.dst.pos, dep, seg.dst.pos.matches(dep.pos)));
  return lines;
}

}  // namespace cer
