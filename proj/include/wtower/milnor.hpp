#ifndef WTOWER_MILNOR_HPP
#define WTOWER_MILNOR_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "wtower/lie.hpp"
#include "wtower/magnus.hpp"
#include "wtower/tree_sum.hpp"

namespace wtower {

// Longitude data for an m-component link.
struct Longitudes {
  std::vector<MeridianWord> words;  // one per listed component
  int components = 0;               // m

  const MeridianWord* find(int i) const;
};

// File format: lines "i : word"; "e" denotes the empty word.
Longitudes parse_longitudes(std::istream& in);

// Non-repeating Milnor invariants of order n: for each component i, the
// degree-(n+1) element of the reduced free Lie algebra on the other
// generators, read off the square-free Magnus coefficients of the i-th
// longitude. Throws LowerOrderNonzero if some lower coefficient survives.
std::map<int, LieElement> mu_invariants(const Longitudes& l, int order);

struct FirstOrderResult {
  bool all_vanish = false;
  int order = -1;
  std::map<int, LieElement> invariants;
};

// Scans n = 0..m-2 for the first non-vanishing order.
FirstOrderResult first_nonvanishing_order(const Longitudes& l);

// Checks eta_i(lambda_n(forest)) against mu_i_n(longitudes) per component.
std::vector<std::pair<int, bool>> verify_eta_identity(const IntersectionForest& f,
                                                      const Longitudes& l);

}  // namespace wtower

#endif
