#ifndef WTOWER_HNF_HPP
#define WTOWER_HNF_HPP

#include <cstdint>
#include <vector>

namespace wtower {

using IntVec = std::vector<int64_t>;
using IntMat = std::vector<IntVec>;

// Canonical row Hermite normal form of the lattice spanned by the rows:
// nonzero rows with strictly increasing pivot columns, positive pivots,
// entries above each pivot reduced into [0, pivot). Unique per lattice.
IntMat row_hnf(IntMat rows);

// Membership of v in the lattice with HNF basis `hnf`.
bool hnf_member(const IntMat& hnf, IntVec v);

// Solves c * rows = v exactly over Z if possible (least-significant pivots
// first); returns empty on failure. `rows` need not be in HNF.
bool hnf_solve(const IntMat& rows, const IntVec& v, IntVec& coeffs_out);

// Invariant factors of Z^dim / rowspan: (d_1 | d_2 | ... | d_r, 0, ..., 0)
// padded with zeros to length dim.
IntVec invariant_factors(IntMat rows, int dim);

int64_t gcd64(int64_t a, int64_t b);

}  // namespace wtower

#endif
