#ifndef WTOWER_TREE_HPP
#define WTOWER_TREE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wtower/group.hpp"

namespace wtower {

struct TreeEdge {
  int a = -1;  // oriented a -> b
  int b = -1;
  GroupElement g;
};

struct TreeVertex {
  int label = 0;            // > 0 for univalent vertices, 0 for trivalent
  std::vector<int> edges;   // incident edge ids; cyclic order for trivalent
};

// A signed-free, labeled, vertex-oriented, edge-decorated unitrivalent tree.
// Immutable after construction through the public builders.
class DecoratedTree {
 public:
  DecoratedTree() = default;
  DecoratedTree(GroupSpec spec, std::vector<TreeVertex> verts,
                std::vector<TreeEdge> edges)
      : spec_(spec), verts_(std::move(verts)), edges_(std::move(edges)) {}

  const GroupSpec& spec() const { return spec_; }
  const std::vector<TreeVertex>& vertices() const { return verts_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }

  int order() const;                    // number of trivalent vertices
  std::vector<int> labels() const;      // leaf labels in vertex order
  bool non_repeating() const;
  int min_label() const;
  int max_label() const;
  int leaf_vertex(int label) const;     // first leaf carrying the label, -1 if none
  int other_end(int edge, int v) const;

  // Decoration product along the path from `from_vertex` to `to_vertex`;
  // edges traversed against their stored orientation contribute inverses.
  GroupElement path_product(int from_vertex, int to_vertex) const;

  // Canonical serialization: minimal string over all leaf-anchored traversals
  // respecting cyclic orders, orientations and decorations. Equal strings
  // characterize isomorphic decorated trees.
  std::string canonical_key() const;

  // Grammar form with the minimal-label leaf pulled to the front.
  std::string str() const;

  // Mutating helpers used by the relation builders; they return copies.
  DecoratedTree with_flipped_vertex(int v) const;          // AS move
  DecoratedTree with_reversed_edge(int e) const;           // OR move
  DecoratedTree with_holonomy(int v, const GroupElement& phi) const;  // HOL move
  DecoratedTree with_relabeled_leaf(int vertex, int new_label) const;

 private:
  GroupSpec spec_;
  std::vector<TreeVertex> verts_;
  std::vector<TreeEdge> edges_;
};

// Checks all DecoratedTree invariants and the label bound.
// Throws DomainError with code NotATree, BadValence, LabelOutOfRange or
// UnreducedWord.
void validate_tree(const DecoratedTree& t, int label_bound);

// Tree grammar:
//   tree := leaf | "(" tree "," tree ")" deco?
//   leaf := INT deco?
//   deco := "[" gword "]"
// The outermost pair is the inner product of two rooted trees; inner pairs are
// rooted products. Each subtree's decoration sits on the edge above it,
// oriented from the subtree toward its parent.
DecoratedTree parse_tree(const GroupSpec& spec, const std::string& text,
                         int line = 0);

// Builds the simple ("caterpillar") basis tree for the sorted label set S and
// the given arrangement of its n interior labels, with trivial decorations.
DecoratedTree basis_tree(const GroupSpec& spec, const std::vector<int>& subset,
                         const std::vector<int>& mid_perm);

// Rooted binary reading of a non-repeating tree: roots at the leaf carrying
// `root_label` and returns the bracket word expansion, i.e. the coefficients
// of the associative monomials (as label sequences) of the Lie element read
// off the tree. Throws if the label is absent or repeated.
std::map<std::vector<int>, int64_t> root_expansion(const DecoratedTree& t,
                                                   int root_label);

}  // namespace wtower

#endif
