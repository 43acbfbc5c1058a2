#ifndef WTOWER_LIE_HPP
#define WTOWER_LIE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wtower/lambda.hpp"
#include "wtower/tree_sum.hpp"

namespace wtower {

// A formal bracket over generators X_1, X_2, ...: either a generator or a
// pair of sub-brackets.
struct BracketExpr {
  int leaf = 0;                    // > 0: generator index
  std::vector<BracketExpr> kids;   // size 2 when leaf == 0

  bool is_leaf() const { return leaf > 0; }
  int degree() const;
  std::vector<int> support() const;
  std::string str() const;  // "X2" or "[X2,[X3,X4]]"
};

BracketExpr make_generator(int i);
BracketExpr make_bracket(BracketExpr a, BracketExpr b);
// Left-normed bracket [w0,[w1,...[w_{k-1},w_k]...]] over a generator word.
BracketExpr left_normed(const std::vector<int>& word);

// Element of the reduced free Lie algebra: a Z-combination of brackets with
// square-free monomials, homogeneous of one degree.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const BracketExpr& b, int64_t c);
  void add(const LieElement& o);
  LieElement scaled(int64_t k) const;
  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;

  const std::map<std::string, std::pair<BracketExpr, int64_t>>& terms() const {
    return terms_;
  }

  std::string str() const;  // "coeff<TAB>bracket" lines

 private:
  int degree_ = 0;
  std::map<std::string, std::pair<BracketExpr, int64_t>> terms_;
};

// Bilinear bracket; monomials with a repeated generator are dropped.
LieElement lie_bracket(const LieElement& a, const LieElement& b);

// Coordinates on the left-normed basis anchored at each support's maximal
// generator: the key is the full monomial (sigma_1..sigma_k, max).
struct LieNormalForm {
  int degree = 0;
  std::map<std::vector<int>, int64_t> coords;

  bool is_zero() const { return coords.empty(); }
  bool operator==(const LieNormalForm& o) const {
    return degree == o.degree && coords == o.coords;
  }
  bool operator!=(const LieNormalForm& o) const { return !(*this == o); }
  std::string str() const;
};

// Z-linear normalization whose kernel is the span of Jacobi and
// skew-symmetry instances. Throws MixedDegree for inhomogeneous input.
LieNormalForm lie_normalize(const LieElement& a);

// Rooting map: trees with an i-labeled leaf map to the bracket read off by
// rooting there; trees without one map to zero. Trivial group kind only.
LieElement eta(int i, const TreeSum& s);
LieElement eta(int i, const LambdaVector& v);

// Left inverse on the image: replaces the root by an i-labeled leaf.
// Throws GeneratorClash if the element mentions X_i.
TreeSum eta_left_inverse(int i, const LieElement& a, int labels = 0);

// Bracket grammar ("X2" | "[expr,expr]") and "INT WS expr" sum lines.
BracketExpr parse_bracket(const std::string& text, int line = 0);
LieElement parse_lie_sum(std::istream& in);

}  // namespace wtower

#endif
