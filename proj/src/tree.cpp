#include "wtower/tree.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <sstream>

#include "wtower/errors.hpp"

namespace wtower {

int DecoratedTree::order() const {
  int n = 0;
  for (const auto& v : verts_)
    if (v.label == 0) ++n;
  return n;
}

std::vector<int> DecoratedTree::labels() const {
  std::vector<int> out;
  for (const auto& v : verts_)
    if (v.label > 0) out.push_back(v.label);
  return out;
}

bool DecoratedTree::non_repeating() const {
  auto ls = labels();
  std::sort(ls.begin(), ls.end());
  return std::adjacent_find(ls.begin(), ls.end()) == ls.end();
}

int DecoratedTree::min_label() const {
  int best = 0;
  for (const auto& v : verts_)
    if (v.label > 0 && (best == 0 || v.label < best)) best = v.label;
  return best;
}

int DecoratedTree::max_label() const {
  int best = 0;
  for (const auto& v : verts_)
    if (v.label > best) best = v.label;
  return best;
}

int DecoratedTree::leaf_vertex(int label) const {
  for (size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i].label == label) return (int)i;
  return -1;
}

int DecoratedTree::other_end(int edge, int v) const {
  const auto& e = edges_[edge];
  return e.a == v ? e.b : e.a;
}

GroupElement DecoratedTree::path_product(int from_vertex, int to_vertex) const {
  // BFS parent pointers from `from_vertex`.
  std::vector<int> via(verts_.size(), -1);
  std::vector<int> prev(verts_.size(), -1);
  std::queue<int> q;
  q.push(from_vertex);
  prev[from_vertex] = from_vertex;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (u == to_vertex) break;
    for (int eid : verts_[u].edges) {
      int w = other_end(eid, u);
      if (prev[w] == -1) {
        prev[w] = u;
        via[w] = eid;
        q.push(w);
      }
    }
  }
  // Walk back from to_vertex, accumulating right-to-left.
  GroupElement acc = GroupElement::identity(spec_);
  int u = to_vertex;
  while (u != from_vertex) {
    int eid = via[u];
    const auto& e = edges_[eid];
    // Traversal direction prev[u] -> u.
    GroupElement step = (e.a == prev[u]) ? e.g : e.g.inverse();
    acc = step * acc;
    u = prev[u];
  }
  return acc;
}

namespace {

// Effective decoration of `eid` traversed from `u` toward the other end.
GroupElement eff_deco(const DecoratedTree& t, int eid, int u) {
  const auto& e = t.edges()[eid];
  return e.a == u ? e.g : e.g.inverse();
}

void serialize_from(const DecoratedTree& t, int u, int via, std::string& out) {
  out += '{';
  out += eff_deco(t, via, t.other_end(via, u)).str();
  out += '}';
  const auto& v = t.vertices()[u];
  if (v.label > 0) {
    out += 'L';
    out += std::to_string(v.label);
    return;
  }
  // Children in cyclic order after the incoming edge.
  int pos = 0;
  for (int i = 0; i < 3; ++i)
    if (v.edges[i] == via) pos = i;
  int c1 = v.edges[(pos + 1) % 3];
  int c2 = v.edges[(pos + 2) % 3];
  out += '(';
  serialize_from(t, t.other_end(c1, u), c1, out);
  out += ',';
  serialize_from(t, t.other_end(c2, u), c2, out);
  out += ')';
}

}  // namespace

std::string DecoratedTree::canonical_key() const {
  std::string best;
  for (size_t i = 0; i < verts_.size(); ++i) {
    if (verts_[i].label == 0) continue;
    std::string cand = "R" + std::to_string(verts_[i].label) + "|";
    if (!verts_[i].edges.empty()) {
      int eid = verts_[i].edges[0];
      serialize_from(*this, other_end(eid, (int)i), eid, cand);
    }
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

namespace {

void print_from(const DecoratedTree& t, int u, int via, std::ostringstream& os) {
  const auto& v = t.vertices()[u];
  std::string deco = eff_deco(t, via, u).str();
  if (v.label > 0) {
    os << v.label;
    if (deco != "e") os << '[' << deco << ']';
    return;
  }
  int pos = 0;
  for (int i = 0; i < 3; ++i)
    if (v.edges[i] == via) pos = i;
  int c1 = v.edges[(pos + 1) % 3];
  int c2 = v.edges[(pos + 2) % 3];
  os << '(';
  print_from(t, t.other_end(c1, u), c1, os);
  os << ',';
  print_from(t, t.other_end(c2, u), c2, os);
  os << ')';
  if (deco != "e") os << '[' << deco << ']';
}

}  // namespace

std::string DecoratedTree::str() const {
  int min_v = leaf_vertex(min_label());
  if (min_v < 0) return "()";
  int eid = verts_[min_v].edges[0];
  int a = other_end(eid, min_v);
  std::ostringstream os;
  os << '(';
  print_from(*this, a, eid, os);
  os << ',' << verts_[min_v].label << ')';
  return os.str();
}

DecoratedTree DecoratedTree::with_flipped_vertex(int v) const {
  DecoratedTree t = *this;
  assert(t.verts_[v].label == 0);
  std::swap(t.verts_[v].edges[1], t.verts_[v].edges[2]);
  return t;
}

DecoratedTree DecoratedTree::with_reversed_edge(int e) const {
  DecoratedTree t = *this;
  std::swap(t.edges_[e].a, t.edges_[e].b);
  t.edges_[e].g = t.edges_[e].g.inverse();
  return t;
}

DecoratedTree DecoratedTree::with_holonomy(int v, const GroupElement& phi) const {
  DecoratedTree t = *this;
  assert(t.verts_[v].label == 0);
  for (int eid : t.verts_[v].edges) {
    auto& e = t.edges_[eid];
    if (e.b == v)
      e.g = e.g * phi;
    else
      e.g = phi.inverse() * e.g;
  }
  return t;
}

DecoratedTree DecoratedTree::with_relabeled_leaf(int vertex, int new_label) const {
  DecoratedTree t = *this;
  assert(t.verts_[vertex].label > 0);
  t.verts_[vertex].label = new_label;
  return t;
}

void validate_tree(const DecoratedTree& t, int label_bound) {
  const auto& vs = t.vertices();
  const auto& es = t.edges();
  if (vs.empty() || es.empty())
    throw DomainError("NotATree", "tree has no edges");
  if (es.size() + 1 != vs.size())
    throw DomainError("NotATree", "edge count does not match a tree");
  std::vector<int> deg(vs.size(), 0);
  for (const auto& e : es) {
    if (e.a < 0 || e.b < 0 || e.a >= (int)vs.size() || e.b >= (int)vs.size() ||
        e.a == e.b)
      throw DomainError("NotATree", "bad edge endpoints");
    ++deg[e.a];
    ++deg[e.b];
    if (e.g.spec() != t.spec())
      throw DomainError("ContextMismatch", "edge decoration from a different group");
    if (!e.g.is_reduced())
      throw DomainError("UnreducedWord", "edge decoration is not freely reduced");
  }
  for (size_t i = 0; i < vs.size(); ++i) {
    if ((int)vs[i].edges.size() != deg[i])
      throw DomainError("NotATree", "vertex incidence list is inconsistent");
    if (vs[i].label > 0) {
      if (deg[i] != 1)
        throw DomainError("BadValence", "labeled vertex of valence " +
                                            std::to_string(deg[i]));
      if (vs[i].label > label_bound)
        throw DomainError("LabelOutOfRange",
                          "label " + std::to_string(vs[i].label) + " exceeds " +
                              std::to_string(label_bound));
    } else {
      if (deg[i] != 3)
        throw DomainError("BadValence", "unlabeled vertex of valence " +
                                            std::to_string(deg[i]));
    }
  }
  // Connectivity.
  std::vector<char> seen(vs.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int eid : vs[u].edges) {
      int w = t.other_end(eid, u);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  if (count != (int)vs.size())
    throw DomainError("NotATree", "graph is disconnected");
}

namespace {

// Recursive-descent parser for the tree grammar.
struct TreeParser {
  const std::string& s;
  size_t pos = 0;
  int line;
  const GroupSpec& spec;
  std::vector<TreeVertex> verts;
  std::vector<TreeEdge> edges;

  TreeParser(const GroupSpec& sp, const std::string& text, int ln)
      : s(text), line(ln), spec(sp) {}

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line, (int)pos + 1, msg);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  GroupElement parse_deco() {
    if (!peek('[')) return GroupElement::identity(spec);
    expect('[');
    size_t start = pos;
    while (pos < s.size() && s[pos] != ']') ++pos;
    if (pos >= s.size()) fail("unterminated decoration");
    std::string word = s.substr(start, pos - start);
    ++pos;
    try {
      return parse_group_element(spec, word, line);
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      fail(e.what());
    }
  }

  // Returns (root vertex, decoration of the edge above it).
  std::pair<int, GroupElement> parse_node() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of tree");
    if (s[pos] == '(') {
      ++pos;
      auto left = parse_node();
      expect(',');
      auto right = parse_node();
      expect(')');
      GroupElement deco = parse_deco();
      int v = (int)verts.size();
      verts.push_back(TreeVertex{0, {}});
      int e1 = (int)edges.size();
      edges.push_back(TreeEdge{left.first, v, left.second});
      int e2 = (int)edges.size();
      edges.push_back(TreeEdge{right.first, v, right.second});
      // Cyclic order (parent, left child, right child); the parent slot is
      // filled via place_parent when the edge above v is created.
      verts[v].edges = {-1, e1, e2};
      place_parent(left.first, e1);
      place_parent(right.first, e2);
      return {v, deco};
    }
    if (!isdigit((unsigned char)s[pos])) fail("expected leaf label or '('");
    int label = 0;
    while (pos < s.size() && isdigit((unsigned char)s[pos]))
      label = label * 10 + (s[pos++] - '0');
    if (label < 1) fail("leaf labels start at 1");
    GroupElement deco = parse_deco();
    int v = (int)verts.size();
    verts.push_back(TreeVertex{label, {}});
    return {v, deco};
  }

  DecoratedTree parse() {
    skip_ws();
    if (pos >= s.size() || s[pos] != '(')
      fail("a tree is the inner product of two subtrees: '(t,t)'");
    ++pos;
    auto left = parse_node();
    expect(',');
    auto right = parse_node();
    expect(')');
    skip_ws();
    if (pos != s.size()) fail("trailing input after tree");
    // Glue the two roots along one edge carrying both decorations.
    int e = (int)edges.size();
    edges.push_back(
        TreeEdge{left.first, right.first, left.second * right.second.inverse()});
    place_parent(left.first, e);
    place_parent(right.first, e);
    return DecoratedTree(spec, std::move(verts), std::move(edges));
  }

  void place_parent(int v, int e) {
    if (verts[v].label > 0) {
      verts[v].edges.push_back(e);
    } else {
      verts[v].edges[0] = e;
    }
  }
};

}  // namespace

DecoratedTree parse_tree(const GroupSpec& spec, const std::string& text, int line) {
  TreeParser p(spec, text, line);
  DecoratedTree t = p.parse();
  // Fix up interior parent slots left at -1 (children created before parents).
  // parse_node fills them on edge creation below the node, so only the two
  // glued roots needed attention; assert the structure is complete.
  for (const auto& v : t.vertices())
    for (int e : v.edges) (void)e, assert(e >= 0);
  return t;
}

DecoratedTree basis_tree(const GroupSpec& spec, const std::vector<int>& subset,
                         const std::vector<int>& mid_perm) {
  int n = (int)subset.size() - 2;
  assert(n >= 0 && (int)mid_perm.size() == n);
  std::vector<TreeVertex> verts;
  std::vector<TreeEdge> edges;
  GroupElement e0 = GroupElement::identity(spec);
  int lo = subset.front(), hi = subset.back();
  int v_min = 0;
  verts.push_back(TreeVertex{lo, {}});
  int v_max = 1;
  verts.push_back(TreeVertex{hi, {}});
  if (n == 0) {
    edges.push_back(TreeEdge{v_min, v_max, e0});
    verts[v_min].edges = {0};
    verts[v_max].edges = {0};
    return DecoratedTree(spec, std::move(verts), std::move(edges));
  }
  int prev = v_min;
  int prev_edge_src = v_min;
  for (int i = 0; i < n; ++i) {
    int vi = (int)verts.size();
    verts.push_back(TreeVertex{0, {}});
    int leaf = (int)verts.size();
    verts.push_back(TreeVertex{mid_perm[i], {}});
    int e_in = (int)edges.size();
    edges.push_back(TreeEdge{prev_edge_src, vi, e0});
    verts[prev].edges.push_back(e_in);
    int e_leaf = (int)edges.size();
    edges.push_back(TreeEdge{vi, leaf, e0});
    verts[leaf].edges = {e_leaf};
    // Vertex orientation (toward-min, leaf, toward-max); the toward-max slot
    // is appended when the next edge is created.
    verts[vi].edges = {e_in, e_leaf};
    prev = vi;
    prev_edge_src = vi;
  }
  int e_out = (int)edges.size();
  edges.push_back(TreeEdge{prev, v_max, e0});
  verts[prev].edges.push_back(e_out);
  verts[v_max].edges = {e_out};
  return DecoratedTree(spec, std::move(verts), std::move(edges));
}

namespace {

using Expansion = std::map<std::vector<int>, int64_t>;

Expansion bracket_product(const Expansion& A, const Expansion& B) {
  Expansion out;
  for (const auto& [wa, ca] : A)
    for (const auto& [wb, cb] : B) {
      std::vector<int> ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      out[ab] += ca * cb;
      std::vector<int> ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      out[ba] -= ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Expansion expand_from(const DecoratedTree& t, int u, int via) {
  const auto& v = t.vertices()[u];
  if (v.label > 0) return {{{v.label}, 1}};
  int pos = 0;
  for (int i = 0; i < 3; ++i)
    if (v.edges[i] == via) pos = i;
  int c1 = v.edges[(pos + 1) % 3];
  int c2 = v.edges[(pos + 2) % 3];
  return bracket_product(expand_from(t, t.other_end(c1, u), c1),
                         expand_from(t, t.other_end(c2, u), c2));
}

}  // namespace

std::map<std::vector<int>, int64_t> root_expansion(const DecoratedTree& t,
                                                   int root_label) {
  if (!t.non_repeating())
    throw DomainError("RepeatingTree", "rooted reading needs distinct labels");
  int rv = t.leaf_vertex(root_label);
  if (rv < 0)
    throw DomainError("LabelOutOfRange",
                      "no leaf labeled " + std::to_string(root_label));
  int eid = t.vertices()[rv].edges[0];
  return expand_from(t, t.other_end(eid, rv), eid);
}

}  // namespace wtower
