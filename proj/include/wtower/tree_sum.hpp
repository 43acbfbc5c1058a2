#ifndef WTOWER_TREE_SUM_HPP
#define WTOWER_TREE_SUM_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wtower/tree.hpp"

namespace wtower {

struct SumContext {
  int order = 0;   // n: trivalent vertices per tree
  int labels = 0;  // m: labels run over 1..m
  GroupSpec spec;

  bool operator==(const SumContext& o) const {
    return order == o.order && labels == o.labels && spec == o.spec;
  }
};

// A formal Z-linear combination of decorated trees of one order. Repeating
// trees are allowed; zero coefficients are never stored.
class TreeSum {
 public:
  TreeSum() = default;
  explicit TreeSum(SumContext ctx) : ctx_(ctx) {}

  const SumContext& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const DecoratedTree& t, int64_t coeff);
  void add(const TreeSum& other);
  TreeSum scaled(int64_t k) const;
  TreeSum operator+(const TreeSum& o) const;
  TreeSum operator-(const TreeSum& o) const;

  // Formal equality of term maps (same context, same coefficients).
  bool operator==(const TreeSum& o) const;
  bool operator!=(const TreeSum& o) const { return !(*this == o); }

  // Reinterprets the sum in a wider/narrower label context. Fails if a term
  // uses a label above the new bound.
  TreeSum with_labels(int m) const;

  const std::map<std::string, std::pair<DecoratedTree, int64_t>>& terms() const {
    return terms_;
  }

  std::string str() const;  // "coeff<TAB>tree" lines in canonical order

 private:
  SumContext ctx_;
  std::map<std::string, std::pair<DecoratedTree, int64_t>> terms_;
};

// List of signed trees as read from a forest file.
struct IntersectionForest {
  SumContext ctx;
  std::vector<std::pair<int, DecoratedTree>> entries;  // sign in {+1,-1}
};

// Collates isomorphic entries; isomorphism respects labels, cyclic orders,
// decorations and (up to inversion-compensated reversal) edge orientations.
TreeSum forest_to_sum(const IntersectionForest& f);

// Surface operations of the tree algebra. All are Z-linear.
TreeSum op_parallel(const TreeSum& s, int i);           // delta_i, adds label m+1
TreeSum op_sum(const TreeSum& s, int i, int j);         // sigma: relabels i -> j
TreeSum op_reverse(const TreeSum& s, int i);            // s_i, sign (-1)^{#i}
TreeSum op_delete(const TreeSum& s, int i);             // e_i

// Parsers for the line-oriented file formats. Lines starting with '#' and
// blank lines are skipped.
IntersectionForest parse_forest(const GroupSpec& spec, std::istream& in,
                                int order_hint = -1, int labels_hint = -1);
TreeSum parse_tree_sum(const GroupSpec& spec, std::istream& in,
                       int order_hint = -1, int labels_hint = -1);

}  // namespace wtower

#endif
