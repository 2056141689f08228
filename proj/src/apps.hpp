#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cover.hpp"
#include "metric.hpp"
#include "pathquery.hpp"
#include "spanner.hpp"
#include "tree.hpp"

namespace hopnav {

// Vertices of the union spanner: points keep their ids, and each tree's
// Steiner vertices get fresh ids past the largest point id, assigned in
// (tree, vertex) order so runs are reproducible.
struct UnionIds {
  std::vector<std::unordered_map<long long, long long>> to_global;  // per tree
};
UnionIds union_ids(const MetricNavigator& nav);

struct SptResult {
  long long rt = -1;
  std::vector<long long> verts;  // reached union vertices, in reach order
  std::unordered_map<long long, long long> parent;  // absent at the root
  std::unordered_map<long long, Weight> pweight;    // weight of the parent edge
  std::unordered_map<long long, Weight> dist;
};

// The relaxation-driven approximate shortest-path tree: one k-hop path query
// per point, relaxed root-to-leaf. The observer runs after every successful
// relaxation with the vertex that improved.
SptResult approximate_spt(
    const MetricNavigator& nav, long long rt,
    const std::function<void(const SptResult&, long long)>& observer = {});

struct MstResult {
  std::vector<std::tuple<long long, long long, Weight>> tree_edges;
  Weight weight = 0;
  std::vector<std::tuple<long long, long long, Weight>> union_edges;  // H
  Weight base_weight = 0;  // exact MST weight of the metric
};

// Exact Prim MST on the metric, each edge replaced by its oracle path; the
// output is a breadth-first spanning tree of the union, rooted at the
// smallest point id.
MstResult approximate_mst(const MetricNavigator& nav);

struct SparsifyResult {
  std::vector<std::tuple<long long, long long, Weight>> edges;
  Weight weight = 0;        // total output weight
  Weight input_weight = 0;  // metric weight of the input edges
};

// Replaces every input edge (a pair of points) by its oracle path and unions
// the results; parallel candidates keep the lightest weight.
SparsifyResult sparsify(const MetricNavigator& nav,
                        const std::vector<std::pair<long long, long long>>& graph);

// Greedy beta-spanner over the metric, the standard candidate generator for
// sparsification tests.
std::vector<std::pair<long long, long long>> greedy_spanner_edges(const FiniteMetric& m,
                                                                  double beta);

// Semigroup product along the spanner path, spending one operation per extra
// hop. Returns nullopt for u == v.
template <typename T, typename Op>
std::optional<T> tree_product(const HopSpanner& s, const std::vector<EdgeFold<T>>& ann, int u,
                              int v, Op&& op, long long* ops = nullptr) {
  if (ops) *ops = 0;
  return fold_along(s, ann, find_path(s, u, v), op, ops);
}

// Path-maximum verifier. Every spanner edge carries the maximum tree-edge
// weight under it; edges of two-hop construction steps and of base leaves
// additionally carry a rank in that step's weight order, which lets even
// hop budgets trade one weight comparison for a free rank comparison.
struct Verifier {
  WeightedTree tree;
  HopSpanner spanner;
  int k = 0;
  std::vector<Weight> edge_max;                          // per spanner edge
  std::vector<std::vector<std::pair<int, int>>> orders;  // per edge: (group, rank)
};

Verifier make_verifier(const WeightedTree& t, int k);

struct VerifyOutcome {
  bool heavier = false;        // query weight exceeds every path edge
  long long comparisons = 0;   // weight comparisons only; rank checks are free
};

// True iff w_query is heavier than the maximum tree-edge weight between the
// endpoints. The pair must not be a tree edge.
VerifyOutcome verify_mst_edge(const Verifier& v, long long u_label, long long v_label,
                              Weight w_query, bool optimized);

// Spanner-size floors for the two hop budgets with known bounds.
double eval_lower_bound(long long n, int k);

}  // namespace hopnav
