#pragma once

#include <optional>
#include <vector>

#include "errors.hpp"
#include "spanner.hpp"

namespace hopnav {

struct PathStats {
  int hops = 0;
  int nav_depth = 0;  // navigator descents taken, at most floor(k/2)
};

// Spanner path between two required vertices (internal tree indices).
// At most k hops; the hop weights sum to the exact tree distance; the
// vertices appear in order along the tree path from u to v.
std::vector<int> find_path(const HopSpanner& s, int u, int v, PathStats* stats = nullptr);

// Recursion-tree lookups, exposed for inspection and tests.
int phi_lca(const HopSpanner& s, int a, int b);
int phi_level_ancestor(const HopSpanner& s, int a, int level);

// Directed fold values attached to one edge: fwd follows the edge's stored
// orientation u -> v, bwd the reverse.
template <typename T>
struct EdgeFold {
  T fwd{};
  T bwd{};
};

namespace detail {

// Folds one instance-local path given the per-vertex values of the edges
// (v -> parent). op(a, b) must mean "a, then b" so word order is preserved.
template <typename T, typename Op>
EdgeFold<T> fold_inst_path(const Inst& I, const std::vector<EdgeFold<T>>& vals,
                           const std::vector<int>& path, Op&& op) {
  EdgeFold<T> acc;
  bool first = true;
  for (size_t i = 0; i + 1 < path.size(); i++) {
    int x = path[i], y = path[i + 1];
    EdgeFold<T> step;
    if (I.par[x] == y) {
      step = vals[x];
    } else if (I.par[y] == x) {
      step.fwd = vals[y].bwd;
      step.bwd = vals[y].fwd;
    } else {
      throw InternalError("instance path contains a non-edge");
    }
    if (first) {
      acc = step;
      first = false;
    } else {
      acc.fwd = op(acc.fwd, step.fwd);
      acc.bwd = op(step.bwd, acc.bwd);
    }
  }
  if (first) throw InternalError("cannot fold an empty path");
  return acc;
}

}  // namespace detail

// Computes, for every spanner edge, the fold of the per-tree-edge values
// along the tree path it shortcuts. `vals` is indexed by input-tree edge id
// and oriented like the stored edge.
template <typename T, typename Op>
std::vector<EdgeFold<T>> annotate(const HopSpanner& s, const std::vector<EdgeFold<T>>& vals,
                                  Op&& op) {
  if (vals.size() != s.tree.edges.size())
    throw InputError("one value per tree edge is required");
  std::vector<std::vector<EdgeFold<T>>> inst_vals(s.insts.size());
  for (size_t ii = 0; ii < s.insts.size(); ii++) {
    const Inst& I = s.insts[ii];
    auto& cur = inst_vals[ii];
    cur.resize(I.size());
    for (int v = 0; v < I.size(); v++) {
      if (I.par[v] < 0) continue;
      if (I.parent == -1) {
        int e = s.tree.par_edge[I.orig[v]];
        bool up_is_fwd = s.tree.edges[e].u == I.orig[v];
        cur[v].fwd = up_is_fwd ? vals[e].fwd : vals[e].bwd;
        cur[v].bwd = up_is_fwd ? vals[e].bwd : vals[e].fwd;
      } else {
        const Inst& P = s.insts[I.parent];
        auto path = inst_path(P, P.loc.at(I.orig[v]), P.loc.at(I.orig[I.par[v]]));
        cur[v] = detail::fold_inst_path(P, inst_vals[I.parent], path, op);
      }
    }
  }
  std::vector<EdgeFold<T>> out(s.edges.size());
  for (size_t e = 0; e < s.edges.size(); e++) {
    const SpannerEdge& ed = s.edges[e];
    const Inst& I = s.insts[ed.inst];
    auto path = inst_path(I, I.loc.at(ed.u), I.loc.at(ed.v));
    out[e] = detail::fold_inst_path(I, inst_vals[ed.inst], path, op);
  }
  return out;
}

// Folds annotated values along a spanner path; nullopt for a trivial path.
// `ops`, when given, counts the op applications (hops minus one).
template <typename T, typename Op>
std::optional<T> fold_along(const HopSpanner& s, const std::vector<EdgeFold<T>>& ann,
                            const std::vector<int>& path, Op&& op, long long* ops = nullptr) {
  std::optional<T> acc;
  for (size_t i = 0; i + 1 < path.size(); i++) {
    int e = s.edge_between(path[i], path[i + 1]);
    if (e < 0) throw InternalError("query path steps outside the spanner");
    const T& val = s.edges[e].u == path[i] ? ann[e].fwd : ann[e].bwd;
    if (!acc) {
      acc = val;
    } else {
      acc = op(*acc, val);
      if (ops) (*ops)++;
    }
  }
  return acc;
}

}  // namespace hopnav
