#ifndef WTOWER_TESTS_ORACLE_LATTICE_HPP
#define WTOWER_TESTS_ORACLE_LATTICE_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace wtower::testing {

// Online integer echelon basis for a sublattice of Z^dim, independent of the
// library's lattice code. Rows are kept sparse.
class EchelonLattice {
 public:
  using SparseRow = std::map<int, int64_t>;

  void insert(SparseRow row);
  bool contains(SparseRow row) const;
  int rank() const { return (int)basis_.size(); }

 private:
  std::map<int, SparseRow> basis_;  // pivot column -> row
};

}  // namespace wtower::testing

#endif
