#include "wtower/lie.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <sstream>

#include "wtower/errors.hpp"

namespace wtower {

int BracketExpr::degree() const {
  if (is_leaf()) return 1;
  return kids[0].degree() + kids[1].degree();
}

std::vector<int> BracketExpr::support() const {
  std::vector<int> out;
  if (is_leaf()) {
    out.push_back(leaf);
    return out;
  }
  for (const auto& k : kids) {
    auto sub = k.support();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string BracketExpr::str() const {
  if (is_leaf()) return "X" + std::to_string(leaf);
  return "[" + kids[0].str() + "," + kids[1].str() + "]";
}

BracketExpr make_generator(int i) {
  assert(i > 0);
  BracketExpr b;
  b.leaf = i;
  return b;
}

BracketExpr make_bracket(BracketExpr a, BracketExpr b) {
  BracketExpr out;
  out.kids.push_back(std::move(a));
  out.kids.push_back(std::move(b));
  return out;
}

BracketExpr left_normed(const std::vector<int>& word) {
  assert(!word.empty());
  BracketExpr acc = make_generator(word.back());
  for (int i = (int)word.size() - 2; i >= 0; --i)
    acc = make_bracket(make_generator(word[i]), std::move(acc));
  return acc;
}

void LieElement::add(const BracketExpr& b, int64_t c) {
  if (c == 0) return;
  int d = b.degree();
  if (terms_.empty()) {
    degree_ = d;
  } else if (d != degree_) {
    throw DomainError("MixedDegree", "mixing degrees " + std::to_string(degree_) +
                                         " and " + std::to_string(d));
  }
  auto sup = b.support();
  if (std::adjacent_find(sup.begin(), sup.end()) != sup.end()) return;  // reduced
  std::string key = b.str();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::make_pair(b, c));
  } else {
    it->second.second += c;
    if (it->second.second == 0) terms_.erase(it);
  }
}

void LieElement::add(const LieElement& o) {
  for (const auto& [k, bc] : o.terms_) add(bc.first, bc.second);
}

LieElement LieElement::scaled(int64_t k) const {
  LieElement out(degree_);
  if (k == 0) return out;
  for (const auto& [key, bc] : terms_) out.add(bc.first, bc.second * k);
  return out;
}

LieElement LieElement::operator+(const LieElement& o) const {
  LieElement out = *this;
  out.add(o);
  return out;
}

LieElement LieElement::operator-(const LieElement& o) const {
  LieElement out = *this;
  out.add(o.scaled(-1));
  return out;
}

std::string LieElement::str() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [k, bc] : terms_) os << bc.second << '\t' << k << '\n';
  return os.str();
}

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
  if (a.is_zero() || b.is_zero()) return LieElement();
  LieElement out(a.degree() + b.degree());
  for (const auto& [ka, ac] : a.terms())
    for (const auto& [kb, bc] : b.terms()) {
      // Reduced relations: drop brackets with overlapping supports.
      auto sa = ac.first.support();
      auto sb = bc.first.support();
      std::vector<int> inter;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::back_inserter(inter));
      if (!inter.empty()) continue;
      out.add(make_bracket(ac.first, bc.first), ac.second * bc.second);
    }
  return out;
}

namespace {

using Expansion = std::map<std::vector<int>, int64_t>;

Expansion expand(const BracketExpr& b) {
  if (b.is_leaf()) return {{{b.leaf}, 1}};
  Expansion A = expand(b.kids[0]);
  Expansion B = expand(b.kids[1]);
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
  return out;
}

}  // namespace

LieNormalForm lie_normalize(const LieElement& a) {
  LieNormalForm nf;
  nf.degree = a.degree();
  for (const auto& [k, bc] : a.terms()) {
    auto sup = bc.first.support();
    int anchor = sup.back();
    for (const auto& [w, c] : expand(bc.first)) {
      if (w.back() != anchor) continue;
      int64_t v = c * bc.second;
      if (v == 0) continue;
      auto it = nf.coords.find(w);
      if (it == nf.coords.end()) {
        nf.coords.emplace(w, v);
      } else {
        it->second += v;
        if (it->second == 0) nf.coords.erase(it);
      }
    }
  }
  return nf;
}

std::string LieNormalForm::str() const {
  if (coords.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [w, c] : coords) {
    os << c << '\t';
    os << left_normed(w).str() << '\n';
  }
  return os.str();
}

namespace {

BracketExpr tree_to_bracket(const DecoratedTree& t, int u, int via) {
  const auto& v = t.vertices()[u];
  if (v.label > 0) return make_generator(v.label);
  int pos = 0;
  for (int i = 0; i < 3; ++i)
    if (v.edges[i] == via) pos = i;
  int c1 = v.edges[(pos + 1) % 3];
  int c2 = v.edges[(pos + 2) % 3];
  return make_bracket(tree_to_bracket(t, t.other_end(c1, u), c1),
                      tree_to_bracket(t, t.other_end(c2, u), c2));
}

}  // namespace

LieElement eta(int i, const TreeSum& s) {
  if (s.context().spec.kind != GroupKind::trivial)
    throw DomainError("GroupKindUnsupported",
                      "eta is defined for trivial decorations only");
  LieElement out;
  for (const auto& [k, tc] : s.terms()) {
    const DecoratedTree& t = tc.first;
    if (!t.non_repeating())
      throw DomainError("RepeatingTree", "eta needs non-repeating trees");
    int rv = t.leaf_vertex(i);
    if (rv < 0) continue;
    int eid = t.vertices()[rv].edges[0];
    out.add(tree_to_bracket(t, t.other_end(eid, rv), eid), tc.second);
  }
  return out;
}

LieElement eta(int i, const LambdaVector& v) {
  if (v.context().spec.kind != GroupKind::trivial)
    throw DomainError("GroupKindUnsupported",
                      "eta is defined for trivial decorations only");
  LieElement out;
  for (const auto& [b, ring] : v.coords()) {
    for (const auto& [d, c] : ring) {
      TreeSum one = basis_tree_sum(v.context(), b);
      out.add(eta(i, one).scaled(c));
    }
  }
  return out;
}

namespace {

// Builds the unrooted tree of a bracket with an extra i-labeled leaf at the
// root. Returns vertices/edges with (parent, left, right) orientations.
int build_vertices(const BracketExpr& b, std::vector<TreeVertex>& verts,
                   std::vector<TreeEdge>& edges, const GroupSpec& spec) {
  if (b.is_leaf()) {
    verts.push_back(TreeVertex{b.leaf, {}});
    return (int)verts.size() - 1;
  }
  int left = build_vertices(b.kids[0], verts, edges, spec);
  int right = build_vertices(b.kids[1], verts, edges, spec);
  int v = (int)verts.size();
  verts.push_back(TreeVertex{0, {}});
  int e1 = (int)edges.size();
  edges.push_back(TreeEdge{left, v, GroupElement::identity(spec)});
  int e2 = (int)edges.size();
  edges.push_back(TreeEdge{right, v, GroupElement::identity(spec)});
  if (verts[left].label > 0)
    verts[left].edges.push_back(e1);
  else
    verts[left].edges[0] = e1;
  if (verts[right].label > 0)
    verts[right].edges.push_back(e2);
  else
    verts[right].edges[0] = e2;
  verts[v].edges = {-1, e1, e2};
  return v;
}

}  // namespace

TreeSum eta_left_inverse(int i, const LieElement& a, int labels) {
  GroupSpec spec{GroupKind::trivial, 0};
  int maxlab = i;
  for (const auto& [k, bc] : a.terms()) {
    auto sup = bc.first.support();
    if (std::binary_search(sup.begin(), sup.end(), i))
      throw DomainError("GeneratorClash",
                        "element mentions X" + std::to_string(i));
    maxlab = std::max(maxlab, sup.back());
  }
  SumContext ctx;
  ctx.spec = spec;
  ctx.order = a.is_zero() ? 0 : a.degree() - 1;
  ctx.labels = std::max(labels, maxlab);
  TreeSum out(ctx);
  for (const auto& [k, bc] : a.terms()) {
    std::vector<TreeVertex> verts;
    std::vector<TreeEdge> edges;
    int root = build_vertices(bc.first, verts, edges, spec);
    int leaf = (int)verts.size();
    verts.push_back(TreeVertex{i, {}});
    int e = (int)edges.size();
    edges.push_back(TreeEdge{leaf, root, GroupElement::identity(spec)});
    verts[leaf].edges.push_back(e);
    if (verts[root].label > 0)
      verts[root].edges.push_back(e);
    else
      verts[root].edges[0] = e;
    out.add(DecoratedTree(spec, std::move(verts), std::move(edges)), bc.second);
  }
  return out;
}

namespace {

struct BracketParser {
  const std::string& s;
  size_t pos = 0;
  int line;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line, (int)pos + 1, msg);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  BracketExpr parse_expr() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of bracket");
    if (s[pos] == '[') {
      ++pos;
      BracketExpr a = parse_expr();
      skip_ws();
      if (pos >= s.size() || s[pos] != ',') fail("expected ','");
      ++pos;
      BracketExpr b = parse_expr();
      skip_ws();
      if (pos >= s.size() || s[pos] != ']') fail("expected ']'");
      ++pos;
      return make_bracket(std::move(a), std::move(b));
    }
    if (s[pos] != 'X') fail("expected 'X' or '['");
    ++pos;
    if (pos >= s.size() || !isdigit((unsigned char)s[pos]))
      fail("expected generator index");
    int idx = 0;
    while (pos < s.size() && isdigit((unsigned char)s[pos]))
      idx = idx * 10 + (s[pos++] - '0');
    return make_generator(idx);
  }
};

}  // namespace

BracketExpr parse_bracket(const std::string& text, int line) {
  BracketParser p{text, 0, line};
  BracketExpr b = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input after bracket");
  return b;
}

LieElement parse_lie_sum(std::istream& in) {
  LieElement out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    int64_t coeff;
    if (!(ls >> coeff)) throw ParseError(lineno, 1, "expected integer coefficient");
    std::string rest;
    std::getline(ls, rest);
    out.add(parse_bracket(rest, lineno), coeff);
  }
  return out;
}

}  // namespace wtower
