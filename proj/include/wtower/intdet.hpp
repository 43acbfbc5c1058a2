#ifndef WTOWER_INTDET_HPP
#define WTOWER_INTDET_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wtower/hnf.hpp"

namespace wtower {

// Order-zero pairing data between basis spheres and the surfaces: vectors
// a_{ij} / a_{ij,k} of length r and the r x r intersection matrix Q.
// Q is stored as given; no symmetry is assumed.
struct IntersectionData {
  int r = 0;
  IntMat Q;                                  // r x r, defaults to zero
  std::map<std::string, IntVec> pair_vecs;   // key "ij"
  std::map<std::string, IntVec> triple_vecs; // key "ij,k"

  // a_{ij}; looking up "ji" negates. Empty optional if absent.
  std::optional<IntVec> pair_vec(int i, int j) const;
  // a_{ij,k}; looking up "ji,k" negates.
  std::optional<IntVec> triple_vec(int i, int j, int k) const;
};

// Line-oriented data file:
//   r = INT
//   Q = q11 q12 ; q21 q22 ; ...
//   a ij = v1 ... vr
//   a ij,k = v1 ... vr
IntersectionData parse_intersection_data(std::istream& in);

// HNF-presented subgroup of Z^dim with the invariant factors of the quotient.
struct LatticeSubgroup {
  int dim = 0;
  IntMat basis;          // canonical HNF rows
  IntVec factors;        // invariant factors of Z^dim / subgroup
};

LatticeSubgroup make_subgroup(int dim, const IntMat& generators);

// gcd quotient for the triple case; d = 0 encodes the infinite quotient Z.
struct TripleResult {
  int64_t d = 0;
};
TripleResult int1_triple(const IntersectionData& data);

// Image of the 4 x 6r matrix of the quadruple case in the basis
// { <(1,2),3>, <(1,2),4>, <(1,3),4>, <(2,3),4> }.
LatticeSubgroup int1_quadruple(const IntersectionData& data);

// Image of the 2 x 6r matrix of the linear order-2 case in the basis {t1,t2}.
LatticeSubgroup int2_linear(const IntersectionData& data);

using Point2 = std::array<int64_t, 2>;

struct QuadImageReport {
  int64_t bound = 0;            // requested box bound
  int64_t effective_bound = 0;  // bound actually enumerated
  bool exhaustive = true;
  std::vector<Point2> points;   // attained values, sorted
  std::array<int64_t, 2> projection_gcds{0, 0};
  // Attained p, q with p+q inside the attained bounding box but not attained.
  std::vector<std::array<int64_t, 4>> closure_violations;
  uint64_t closure_pairs_checked = 0;
  bool projection_check_ok = true;
};

// Enumerates the quadratic image over the box [-B,B]^{6r}. The map splits
// over the three pair-choices (12|34), (13|24), (14|23), whose value sets are
// enumerated independently (OpenMP) and combined by a sumset.
QuadImageReport int2_quadratic_image(const IntersectionData& data, int64_t bound,
                                     uint64_t budget = 500000000ull);

// Direct box enumeration of the same map; serial reference for testing and
// benchmarking. Feasible only for small r and bound.
std::vector<Point2> int2_quadratic_points_reference(const IntersectionData& data,
                                                    int64_t bound);

struct MembershipResult {
  bool attained = false;
  // Witness in block order (x12, x34, x13, x24, x14, x23), each of length r.
  IntVec witness;
};

// Yes iff the target is attained within the box; never answers a definite no.
MembershipResult int2_membership(const Point2& target,
                                 const IntersectionData& data, int64_t bound,
                                 uint64_t budget = 500000000ull);

// Evaluates the order-2 map at one assignment; used by reference paths and
// witness verification.
Point2 int2_evaluate(const IntersectionData& data,
                     const std::array<IntVec, 6>& x);

// True iff gcd of all pairings is exactly 1 (sufficiency flag only).
bool gcd_pullapart_check(const std::vector<int64_t>& sphere_pairings);

}  // namespace wtower

#endif
