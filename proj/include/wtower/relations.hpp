#ifndef WTOWER_RELATIONS_HPP
#define WTOWER_RELATIONS_HPP

#include <utility>
#include <vector>

#include "wtower/tree_sum.hpp"

namespace wtower {

// Builders for single relation instances on decorated trees. Each returns a
// pair of TreeSums (lhs, rhs) that are equal in Lambda_n / T_n.

// Antisymmetry at a trivalent vertex: t = -t_flipped.
std::pair<TreeSum, TreeSum> as_instance(const DecoratedTree& t, int vertex,
                                        const SumContext& ctx);

// Edge orientation reversal with inverted decoration: t = t_reversed.
std::pair<TreeSum, TreeSum> or_instance(const DecoratedTree& t, int edge,
                                        const SumContext& ctx);

// Holonomy twist at a trivalent vertex: t = t_twisted.
std::pair<TreeSum, TreeSum> hol_instance(const DecoratedTree& t, int vertex,
                                         const GroupElement& phi,
                                         const SumContext& ctx);

// Jacobi-type relation at an internal (trivalent-trivalent) edge:
// t = H - X. The builder first clears the edge decoration by a holonomy
// twist, which is itself a relation.
std::pair<TreeSum, TreeSum> ihx_instance(const DecoratedTree& t, int edge,
                                         const SumContext& ctx);

// The two exchanged trees of the IHX relation at `edge` (whose decoration
// must already be trivial): branches are swapped across the edge with the
// vertex orientations dictated by the relation.
std::pair<DecoratedTree, DecoratedTree> ihx_pair(const DecoratedTree& t, int edge);

// All internal edges (both endpoints trivalent).
std::vector<int> internal_edges(const DecoratedTree& t);

// Clears the decoration of `edge` by a holonomy twist at one of its
// trivalent endpoints; identity on the class in T_n.
DecoratedTree hol_clear_edge(const DecoratedTree& t, int edge);

}  // namespace wtower

#endif
