#ifndef WTOWER_MAGNUS_HPP
#define WTOWER_MAGNUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wtower {

// A longitude written as a word in the meridian generators x_1..x_m.
struct MeridianWord {
  int component = 0;                            // the component it belongs to
  std::vector<std::pair<int, int64_t>> runs;    // freely reduced (gen, exponent)

  bool empty() const { return runs.empty(); }
  int max_generator() const;
  std::string str() const;
};

MeridianWord parse_meridian_word(int component, const std::string& text,
                                 int line = 0);

// Truncated noncommutative polynomial in X_1, X_2, ...
class MagnusPolynomial {
 public:
  MagnusPolynomial() = default;
  MagnusPolynomial(int degree_cap, bool non_repeating)
      : cap_(degree_cap), non_repeating_(non_repeating) {}

  int degree_cap() const { return cap_; }
  bool non_repeating() const { return non_repeating_; }

  int64_t coefficient(const std::vector<int>& mono) const;
  const std::map<std::vector<int>, int64_t>& terms() const { return terms_; }

  void add(const std::vector<int>& mono, int64_t c);
  MagnusPolynomial operator*(const MagnusPolynomial& o) const;

  static MagnusPolynomial one(int degree_cap, bool non_repeating);

  bool operator==(const MagnusPolynomial& o) const { return terms_ == o.terms_; }
  std::string str() const;  // "1 + X2X3 - X3X2"

 private:
  int cap_ = 1;
  bool non_repeating_ = false;
  std::map<std::vector<int>, int64_t> terms_;  // key () is the constant term
};

// Expansion x_j -> 1 + X_j, x_j^{-1} -> 1 - X_j + X_j^2 - ..., truncated at
// degree D; with non_repeating set, monomials with a repeated index are
// dropped after each multiplication.
MagnusPolynomial magnus_expand(const MeridianWord& w, int degree_cap,
                               bool non_repeating);

}  // namespace wtower

#endif
