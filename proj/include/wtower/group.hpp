#ifndef WTOWER_GROUP_HPP
#define WTOWER_GROUP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wtower {

// Coefficient groups for edge decorations: the trivial group, free abelian
// Z^k, or the free group on k generators.
enum class GroupKind { trivial, free_abelian, free_group };

struct GroupSpec {
  GroupKind kind = GroupKind::trivial;
  int rank = 0;

  bool operator==(const GroupSpec& o) const {
    return kind == o.kind && (kind == GroupKind::trivial || rank == o.rank);
  }
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }
  std::string str() const;
};

GroupSpec parse_group_spec(const std::string& s);  // "trivial" | "zk:K" | "free:K"

// An element of the decoration group. Free words are stored reduced as
// (generator, exponent) runs with nonzero exponents and distinct adjacent
// generators; free abelian elements as exponent vectors of length k.
class GroupElement {
 public:
  GroupElement() = default;  // identity of the trivial group

  static GroupElement identity(const GroupSpec& spec);
  static GroupElement abelian(const GroupSpec& spec, std::vector<int64_t> exps);
  // Reduces the given runs; use raw_word to bypass reduction (tests only).
  static GroupElement word(const GroupSpec& spec,
                           std::vector<std::pair<int, int64_t>> runs);
  static GroupElement raw_word(const GroupSpec& spec,
                               std::vector<std::pair<int, int64_t>> runs);
  // Single generator x_i^e in either nontrivial kind.
  static GroupElement generator(const GroupSpec& spec, int i, int64_t e = 1);

  const GroupSpec& spec() const { return spec_; }
  bool is_identity() const;
  bool is_reduced() const;

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;  // total order for map keys

  const std::vector<int64_t>& exponents() const { return exps_; }
  const std::vector<std::pair<int, int64_t>>& runs() const { return word_; }

  // Grammar form: "e" or space-separated terms "x2", "x1^-3".
  std::string str() const;

 private:
  GroupSpec spec_;
  std::vector<int64_t> exps_;
  std::vector<std::pair<int, int64_t>> word_;
};

// Parses the gword grammar:  gword := "e" | term (" " term)* ;
// term := "x" INT ("^" "-"? INT)? . Free words are reduced on construction.
GroupElement parse_group_element(const GroupSpec& spec, const std::string& text,
                                 int line = 0);

}  // namespace wtower

#endif
