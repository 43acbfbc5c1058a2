#include "wtower/relations.hpp"

#include <cassert>

#include "wtower/errors.hpp"

namespace wtower {

namespace {

TreeSum single(const DecoratedTree& t, int64_t c, const SumContext& ctx) {
  TreeSum s(ctx);
  s.add(t, c);
  return s;
}

int position_of(const std::vector<int>& edges, int e) {
  for (int i = 0; i < (int)edges.size(); ++i)
    if (edges[i] == e) return i;
  assert(false);
  return -1;
}

// Moves the far endpoint of `branch` from vertex `from` to vertex `to`.
void reattach(std::vector<TreeEdge>& edges, int branch, int from, int to) {
  if (edges[branch].a == from)
    edges[branch].a = to;
  else
    edges[branch].b = to;
}

}  // namespace

std::pair<TreeSum, TreeSum> as_instance(const DecoratedTree& t, int vertex,
                                        const SumContext& ctx) {
  return {single(t, 1, ctx), single(t.with_flipped_vertex(vertex), -1, ctx)};
}

std::pair<TreeSum, TreeSum> or_instance(const DecoratedTree& t, int edge,
                                        const SumContext& ctx) {
  return {single(t, 1, ctx), single(t.with_reversed_edge(edge), 1, ctx)};
}

std::pair<TreeSum, TreeSum> hol_instance(const DecoratedTree& t, int vertex,
                                         const GroupElement& phi,
                                         const SumContext& ctx) {
  return {single(t, 1, ctx), single(t.with_holonomy(vertex, phi), 1, ctx)};
}

std::vector<int> internal_edges(const DecoratedTree& t) {
  std::vector<int> out;
  for (int e = 0; e < (int)t.edges().size(); ++e) {
    if (t.vertices()[t.edges()[e].a].label == 0 &&
        t.vertices()[t.edges()[e].b].label == 0)
      out.push_back(e);
  }
  return out;
}

DecoratedTree hol_clear_edge(const DecoratedTree& t, int edge) {
  const TreeEdge& e = t.edges()[edge];
  if (e.g.is_identity()) return t;
  if (t.vertices()[e.b].label == 0) return t.with_holonomy(e.b, e.g.inverse());
  assert(t.vertices()[e.a].label == 0);
  return t.with_holonomy(e.a, e.g);
}

std::pair<DecoratedTree, DecoratedTree> ihx_pair(const DecoratedTree& t, int edge) {
  const TreeEdge& e = t.edges()[edge];
  assert(e.g.is_identity());
  int u = e.a, v = e.b;
  assert(t.vertices()[u].label == 0 && t.vertices()[v].label == 0);
  int pu = position_of(t.vertices()[u].edges, edge);
  int A = t.vertices()[u].edges[(pu + 1) % 3];
  int B = t.vertices()[u].edges[(pu + 2) % 3];
  int pv = position_of(t.vertices()[v].edges, edge);
  int C = t.vertices()[v].edges[(pv + 1) % 3];
  int D = t.vertices()[v].edges[(pv + 2) % 3];

  // H: swap branches B and D; orientations (A, e, D) at u and (e, B, C) at v.
  DecoratedTree H = t;
  {
    std::vector<TreeVertex> verts = H.vertices();
    std::vector<TreeEdge> edges = H.edges();
    reattach(edges, B, u, v);
    reattach(edges, D, v, u);
    verts[u].edges = {A, edge, D};
    verts[v].edges = {edge, B, C};
    H = DecoratedTree(t.spec(), std::move(verts), std::move(edges));
  }
  // X: swap branches B and C; orientations (A, e, C) at u and (e, B, D) at v.
  DecoratedTree X = t;
  {
    std::vector<TreeVertex> verts = X.vertices();
    std::vector<TreeEdge> edges = X.edges();
    reattach(edges, B, u, v);
    reattach(edges, C, v, u);
    verts[u].edges = {A, edge, C};
    verts[v].edges = {edge, B, D};
    X = DecoratedTree(t.spec(), std::move(verts), std::move(edges));
  }
  return {H, X};
}

std::pair<TreeSum, TreeSum> ihx_instance(const DecoratedTree& t, int edge,
                                         const SumContext& ctx) {
  DecoratedTree cleared = hol_clear_edge(t, edge);
  auto [H, X] = ihx_pair(cleared, edge);
  TreeSum rhs(ctx);
  rhs.add(H, 1);
  rhs.add(X, -1);
  return {single(t, 1, ctx), rhs};
}

}  // namespace wtower
