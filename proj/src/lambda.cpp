#include "wtower/lambda.hpp"

#include <algorithm>
#include <sstream>

#include "wtower/errors.hpp"

namespace wtower {

std::string BasisIndex::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) os << ',';
    os << subset[i];
  }
  os << "} (";
  for (size_t i = 0; i < mid_perm.size(); ++i) {
    if (i) os << ',';
    os << mid_perm[i];
  }
  os << ')';
  return os.str();
}

std::string deco_tuple_str(const DecoTuple& t) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << " | ";
    os << t[i].str();
  }
  os << ']';
  return os.str();
}

void LambdaVector::add(const BasisIndex& b, const DecoTuple& d, int64_t c) {
  if (c == 0) return;
  auto& ring = coords_[b];
  auto it = ring.find(d);
  if (it == ring.end()) {
    ring.emplace(d, c);
  } else {
    it->second += c;
    if (it->second == 0) ring.erase(it);
  }
  if (ring.empty()) coords_.erase(b);
}

void LambdaVector::add(const LambdaVector& o) {
  if (!(ctx_ == o.ctx_))
    throw DomainError("ContextMismatch", "adding vectors with different contexts");
  for (const auto& [b, ring] : o.coords_)
    for (const auto& [d, c] : ring) add(b, d, c);
}

LambdaVector LambdaVector::scaled(int64_t k) const {
  LambdaVector out(ctx_);
  if (k == 0) return out;
  for (const auto& [b, ring] : coords_)
    for (const auto& [d, c] : ring) out.add(b, d, c * k);
  return out;
}

LambdaVector LambdaVector::operator+(const LambdaVector& o) const {
  LambdaVector out = *this;
  out.add(o);
  return out;
}

LambdaVector LambdaVector::operator-(const LambdaVector& o) const {
  LambdaVector out = *this;
  out.add(o.scaled(-1));
  return out;
}

bool LambdaVector::operator==(const LambdaVector& o) const {
  return ctx_ == o.ctx_ && coords_ == o.coords_;
}

GroupRingElement LambdaVector::at(const BasisIndex& b) const {
  auto it = coords_.find(b);
  return it == coords_.end() ? GroupRingElement{} : it->second;
}

std::string LambdaVector::str() const {
  if (coords_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [b, ring] : coords_)
    for (const auto& [d, c] : ring)
      os << c << '\t' << b.str() << '\t' << deco_tuple_str(d) << '\n';
  return os.str();
}

int64_t lambda_rank(int order, int labels) {
  if (order < 0 || labels < 1) throw DomainError("ContextMismatch", "bad rank query");
  int k = order + 2;
  if (labels < k) return 0;
  // C(labels, k)
  int64_t binom = 1;
  for (int i = 1; i <= k; ++i) binom = binom * (labels - k + i) / i;
  int64_t fact = 1;
  for (int i = 2; i <= order; ++i) fact *= i;
  return binom * fact;
}

std::vector<BasisIndex> enumerate_basis(int order, int labels) {
  std::vector<BasisIndex> out;
  int k = order + 2;
  if (labels < k) return out;
  std::vector<int> subset(k);
  // Enumerate k-subsets of 1..labels in lexicographic order.
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    std::vector<int> mids(idx.begin() + 1, idx.end() - 1);
    std::sort(mids.begin(), mids.end());
    do {
      out.push_back(BasisIndex{idx, mids});
    } while (std::next_permutation(mids.begin(), mids.end()));
    // Advance the subset.
    int i = k - 1;
    while (i >= 0 && idx[i] == labels - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

LambdaVector normalize_lambda_tree(const DecoratedTree& t, int64_t coeff,
                                   const SumContext& ctx) {
  LambdaVector out(ctx);
  if (coeff == 0) return out;
  if (!t.non_repeating())
    throw DomainError("RepeatingTree", "normalization needs distinct labels");

  std::vector<int> subset = t.labels();
  std::sort(subset.begin(), subset.end());
  int lo = subset.front();
  int hi = subset.back();

  // Decoration invariants: product along the path from each non-minimal leaf
  // to the minimal leaf. These are precisely the HOL/OR-normal coordinates.
  int min_v = t.leaf_vertex(lo);
  DecoTuple deco;
  for (size_t i = 1; i < subset.size(); ++i)
    deco.push_back(t.path_product(t.leaf_vertex(subset[i]), min_v));

  // Shape rewriting: root at the minimal leaf and read the bracket off the
  // vertex orientations. AS maps to skew-symmetry and IHX to Jacobi, so the
  // coefficients on left-normed monomials anchored at the maximal label are
  // the canonical coordinates.
  auto words = root_expansion(t, lo);
  for (const auto& [w, c] : words) {
    if (w.back() != hi) continue;
    std::vector<int> mid(w.begin(), w.end() - 1);
    out.add(BasisIndex{subset, mid}, deco, coeff * c);
  }
  return out;
}

LambdaVector normalize_lambda(const TreeSum& s) {
  LambdaVector out(s.context());
  for (const auto& [k, tc] : s.terms())
    out.add(normalize_lambda_tree(tc.first, tc.second, s.context()));
  return out;
}

TreeSum basis_tree_sum(const SumContext& ctx, const BasisIndex& b) {
  TreeSum out(ctx);
  out.add(basis_tree(ctx.spec, b.subset, b.mid_perm), 1);
  return out;
}

}  // namespace wtower
