#ifndef WTOWER_TESTS_RNG_HPP
#define WTOWER_TESTS_RNG_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "wtower/tree_sum.hpp"

namespace wtower::testing {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline GroupElement random_group_element(Rng& rng, const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::trivial:
      return GroupElement::identity(spec);
    case GroupKind::free_abelian: {
      std::vector<int64_t> e(spec.rank);
      for (auto& v : e) v = pick(rng, -3, 3);
      return GroupElement::abelian(spec, e);
    }
    case GroupKind::free_group: {
      int len = pick(rng, 0, 3);
      std::vector<std::pair<int, int64_t>> runs;
      for (int i = 0; i < len; ++i)
        runs.emplace_back(pick(rng, 1, spec.rank), pick(rng, 0, 1) ? 1 : -1);
      return GroupElement::word(spec, runs);
    }
  }
  return GroupElement::identity(spec);
}

// Random unitrivalent tree with the given leaf labels (possibly repeating),
// built by random edge insertion, with random vertex orientations and
// random edge orientations/decorations.
inline DecoratedTree random_tree(Rng& rng, const GroupSpec& spec,
                                 std::vector<int> leaf_labels) {
  int k = (int)leaf_labels.size();
  std::vector<TreeVertex> verts;
  std::vector<TreeEdge> edges;
  auto deco = [&] { return random_group_element(rng, spec); };
  verts.push_back(TreeVertex{leaf_labels[0], {0}});
  verts.push_back(TreeVertex{leaf_labels[1], {0}});
  edges.push_back(TreeEdge{0, 1, deco()});
  for (int i = 2; i < k; ++i) {
    int e = pick(rng, 0, (int)edges.size() - 1);
    int w = (int)verts.size();
    verts.push_back(TreeVertex{0, {}});
    int leaf = (int)verts.size();
    verts.push_back(TreeVertex{leaf_labels[i], {}});
    // Split edge e at w: e keeps endpoint a, a new edge runs from w to old b.
    int old_b = edges[e].b;
    int e2 = (int)edges.size();
    edges.push_back(TreeEdge{w, old_b, deco()});
    auto& lst = verts[old_b].edges;
    std::replace(lst.begin(), lst.end(), e, e2);
    edges[e].b = w;
    int e3 = (int)edges.size();
    edges.push_back(TreeEdge{w, leaf, deco()});
    verts[leaf].edges = {e3};
    if (pick(rng, 0, 1))
      verts[w].edges = {e, e2, e3};
    else
      verts[w].edges = {e, e3, e2};
  }
  // Random edge orientation flips (compensated by inversion).
  DecoratedTree t(spec, std::move(verts), std::move(edges));
  for (int e = 0; e < (int)t.edges().size(); ++e)
    if (pick(rng, 0, 1)) t = t.with_reversed_edge(e);
  return t;
}

// Random non-repeating tree of order n with labels drawn from 1..m.
inline DecoratedTree random_nonrepeating_tree(Rng& rng, const GroupSpec& spec,
                                              int order, int m) {
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> labels(all.begin(), all.begin() + order + 2);
  return random_tree(rng, spec, labels);
}

inline TreeSum random_nonrepeating_sum(Rng& rng, const GroupSpec& spec, int order,
                                       int m, int terms) {
  SumContext ctx{order, m, spec};
  TreeSum s(ctx);
  for (int i = 0; i < terms; ++i)
    s.add(random_nonrepeating_tree(rng, spec, order, m), pick(rng, -3, 3));
  return s;
}

}  // namespace wtower::testing

#endif
