#ifndef WTOWER_LAMBDA_HPP
#define WTOWER_LAMBDA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wtower/tree_sum.hpp"

namespace wtower {

// Index of a simple-tree basis element: the sorted label subset S with
// |S| = n+2 and the arrangement of its n interior labels along the geodesic
// from min(S) to max(S).
struct BasisIndex {
  std::vector<int> subset;
  std::vector<int> mid_perm;

  bool operator<(const BasisIndex& o) const {
    if (subset != o.subset) return subset < o.subset;
    return mid_perm < o.mid_perm;
  }
  bool operator==(const BasisIndex& o) const {
    return subset == o.subset && mid_perm == o.mid_perm;
  }
  std::string str() const;
};

// Group-ring coefficient: Z-linear combination of (n+1)-tuples of group
// elements, one per non-minimal label of S in ascending order.
using DecoTuple = std::vector<GroupElement>;
using GroupRingElement = std::map<DecoTuple, int64_t>;

std::string deco_tuple_str(const DecoTuple& t);

// Canonical coordinates of an element of Lambda_n(pi, m).
class LambdaVector {
 public:
  LambdaVector() = default;
  explicit LambdaVector(SumContext ctx) : ctx_(ctx) {}

  const SumContext& context() const { return ctx_; }
  bool is_zero() const { return coords_.empty(); }

  void add(const BasisIndex& b, const DecoTuple& d, int64_t c);
  void add(const LambdaVector& o);
  LambdaVector scaled(int64_t k) const;
  LambdaVector operator+(const LambdaVector& o) const;
  LambdaVector operator-(const LambdaVector& o) const;
  bool operator==(const LambdaVector& o) const;
  bool operator!=(const LambdaVector& o) const { return !(*this == o); }

  const std::map<BasisIndex, GroupRingElement>& coords() const { return coords_; }

  // The group-ring coefficient at one basis index (empty if absent).
  GroupRingElement at(const BasisIndex& b) const;

  std::string str() const;

 private:
  SumContext ctx_;
  std::map<BasisIndex, GroupRingElement> coords_;
};

// Rank formula C(m, n+2) * n! counting basis indices per group-ring copy.
int64_t lambda_rank(int order, int labels);

// All basis indices for the context, lexicographically ordered.
std::vector<BasisIndex> enumerate_basis(int order, int labels);

// Rewrites a non-repeating TreeSum to canonical coordinates. The kernel is
// exactly the span of AS/IHX/OR/HOL relation instances. Throws RepeatingTree
// if some term has duplicate labels.
LambdaVector normalize_lambda(const TreeSum& s);
LambdaVector normalize_lambda_tree(const DecoratedTree& t, int64_t coeff,
                                   const SumContext& ctx);

// The basis caterpillar of a BasisIndex as a one-term TreeSum.
TreeSum basis_tree_sum(const SumContext& ctx, const BasisIndex& b);

}  // namespace wtower

#endif
