#include "wtower/tree_sum.hpp"

#include <istream>
#include <sstream>

#include "wtower/errors.hpp"

namespace wtower {

void TreeSum::add(const DecoratedTree& t, int64_t coeff) {
  if (coeff == 0) return;
  if (t.spec() != ctx_.spec)
    throw DomainError("ContextMismatch", "tree decorated over a different group");
  if (t.order() != ctx_.order)
    throw DomainError("ContextMismatch",
                      "tree of order " + std::to_string(t.order()) +
                          " added to an order-" + std::to_string(ctx_.order) +
                          " sum");
  if (t.max_label() > ctx_.labels)
    throw DomainError("LabelOutOfRange",
                      "tree label exceeds context bound " +
                          std::to_string(ctx_.labels));
  std::string key = t.canonical_key();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::make_pair(t, coeff));
  } else {
    it->second.second += coeff;
    if (it->second.second == 0) terms_.erase(it);
  }
}

void TreeSum::add(const TreeSum& other) {
  if (!(other.ctx_ == ctx_))
    throw DomainError("ContextMismatch", "adding sums with different contexts");
  for (const auto& [k, tc] : other.terms_) add(tc.first, tc.second);
}

TreeSum TreeSum::scaled(int64_t k) const {
  TreeSum out(ctx_);
  if (k == 0) return out;
  for (const auto& [key, tc] : terms_)
    out.terms_.emplace(key, std::make_pair(tc.first, tc.second * k));
  return out;
}

TreeSum TreeSum::operator+(const TreeSum& o) const {
  TreeSum out = *this;
  out.add(o);
  return out;
}

TreeSum TreeSum::operator-(const TreeSum& o) const {
  TreeSum out = *this;
  out.add(o.scaled(-1));
  return out;
}

bool TreeSum::operator==(const TreeSum& o) const {
  if (!(ctx_ == o.ctx_) || terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second.second != jt->second.second)
      return false;
  }
  return true;
}

TreeSum TreeSum::with_labels(int m) const {
  SumContext ctx = ctx_;
  ctx.labels = m;
  TreeSum out(ctx);
  for (const auto& [k, tc] : terms_) out.add(tc.first, tc.second);
  return out;
}

std::string TreeSum::str() const {
  std::ostringstream os;
  for (const auto& [k, tc] : terms_)
    os << tc.second << '\t' << tc.first.str() << '\n';
  return os.str();
}

TreeSum forest_to_sum(const IntersectionForest& f) {
  TreeSum out(f.ctx);
  for (const auto& [sign, tree] : f.entries) {
    validate_tree(tree, f.ctx.labels);
    if (tree.order() != f.ctx.order)
      throw DomainError("ContextMismatch", "forest entry of wrong order");
    out.add(tree, sign);
  }
  return out;
}

TreeSum op_parallel(const TreeSum& s, int i) {
  const SumContext& ctx = s.context();
  if (i < 1 || i > ctx.labels)
    throw DomainError("LabelOutOfRange", "delta label out of range");
  SumContext out_ctx = ctx;
  out_ctx.labels = ctx.labels + 1;
  int fresh = ctx.labels + 1;
  TreeSum out(out_ctx);
  for (const auto& [k, tc] : s.terms()) {
    const DecoratedTree& t = tc.first;
    std::vector<int> spots;
    for (size_t v = 0; v < t.vertices().size(); ++v)
      if (t.vertices()[v].label == i) spots.push_back((int)v);
    size_t r = spots.size();
    for (size_t mask = 0; mask < (size_t(1) << r); ++mask) {
      DecoratedTree variant = t;
      for (size_t b = 0; b < r; ++b)
        if (mask & (size_t(1) << b))
          variant = variant.with_relabeled_leaf(spots[b], fresh);
      out.add(variant, tc.second);
    }
  }
  return out;
}

TreeSum op_sum(const TreeSum& s, int i, int j) {
  const SumContext& ctx = s.context();
  if (i < 1 || i > ctx.labels || j < 1 || j > ctx.labels)
    throw DomainError("LabelOutOfRange", "sigma label out of range");
  if (i == j)
    throw DomainError("IdenticalLabels", "sigma needs two distinct labels");
  TreeSum out(ctx);
  for (const auto& [k, tc] : s.terms()) {
    DecoratedTree t = tc.first;
    for (size_t v = 0; v < t.vertices().size(); ++v)
      if (t.vertices()[v].label == i) t = t.with_relabeled_leaf((int)v, j);
    out.add(t, tc.second);
  }
  return out;
}

TreeSum op_reverse(const TreeSum& s, int i) {
  const SumContext& ctx = s.context();
  if (i < 1 || i > ctx.labels)
    throw DomainError("LabelOutOfRange", "reversal label out of range");
  TreeSum out(ctx);
  for (const auto& [k, tc] : s.terms()) {
    int count = 0;
    for (const auto& v : tc.first.vertices())
      if (v.label == i) ++count;
    out.add(tc.first, (count % 2 == 0) ? tc.second : -tc.second);
  }
  return out;
}

TreeSum op_delete(const TreeSum& s, int i) {
  const SumContext& ctx = s.context();
  if (i < 1 || i > ctx.labels)
    throw DomainError("LabelOutOfRange", "deletion label out of range");
  TreeSum out(ctx);
  for (const auto& [k, tc] : s.terms()) {
    bool has = false;
    for (const auto& v : tc.first.vertices())
      if (v.label == i) has = true;
    if (!has) out.add(tc.first, tc.second);
  }
  return out;
}

namespace {

struct ParsedLines {
  std::vector<std::pair<int64_t, DecoratedTree>> items;  // (coefficient, tree)
  int order = -1;
  int max_label = 0;
};

ParsedLines read_lines(const GroupSpec& spec, std::istream& in, bool signed_form) {
  ParsedLines out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    int64_t coeff = 0;
    if (signed_form) {
      std::string sign;
      ls >> sign;
      if (sign == "+")
        coeff = 1;
      else if (sign == "-")
        coeff = -1;
      else
        throw ParseError(lineno, (int)start + 1, "expected '+' or '-'");
    } else {
      if (!(ls >> coeff))
        throw ParseError(lineno, (int)start + 1, "expected integer coefficient");
    }
    std::string rest;
    std::getline(ls, rest);
    DecoratedTree t = parse_tree(spec, rest, lineno);
    if (out.order < 0) out.order = t.order();
    out.max_label = std::max(out.max_label, t.max_label());
    out.items.emplace_back(coeff, std::move(t));
  }
  return out;
}

SumContext make_ctx(const GroupSpec& spec, const ParsedLines& p, int order_hint,
                    int labels_hint) {
  SumContext ctx;
  ctx.spec = spec;
  ctx.order = order_hint >= 0 ? order_hint : std::max(p.order, 0);
  ctx.labels = labels_hint >= 0 ? labels_hint : p.max_label;
  return ctx;
}

}  // namespace

IntersectionForest parse_forest(const GroupSpec& spec, std::istream& in,
                                int order_hint, int labels_hint) {
  ParsedLines p = read_lines(spec, in, true);
  IntersectionForest f;
  f.ctx = make_ctx(spec, p, order_hint, labels_hint);
  for (auto& [c, t] : p.items) f.entries.emplace_back((int)c, std::move(t));
  return f;
}

TreeSum parse_tree_sum(const GroupSpec& spec, std::istream& in, int order_hint,
                       int labels_hint) {
  ParsedLines p = read_lines(spec, in, false);
  TreeSum s(make_ctx(spec, p, order_hint, labels_hint));
  for (auto& [c, t] : p.items) {
    validate_tree(t, s.context().labels);
    s.add(t, c);
  }
  return s;
}

}  // namespace wtower
