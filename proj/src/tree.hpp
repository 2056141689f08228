#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace hopnav {

using Weight = double;

// Rooted edge-weighted tree over external vertex labels. Vertices are stored
// as dense indices 0..n-1; `label` maps index -> external id and `index` maps
// back. Edges keep input order so that serialization round-trips.
struct WeightedTree {
  int n = 0;
  int root = -1;  // internal index

  struct Edge {
    int u, v;  // internal indices
    Weight w;
  };

  std::vector<long long> label;
  std::unordered_map<long long, int> index;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;  // edge ids per vertex
  std::vector<char> required;

  // Derived rooted structure, filled by finalize().
  std::vector<int> par;        // -1 at root
  std::vector<int> par_edge;   // edge id to parent, -1 at root
  std::vector<Weight> par_w;   // weight of edge to parent, 0 at root
  std::vector<int> hop_depth;
  std::vector<Weight> wdepth;  // weighted distance from root
  std::vector<std::vector<int>> kids;
  std::vector<int> order;  // vertices in BFS order from the root

  int idx(long long lab) const;
  long long required_count() const;
  int other_end(int edge_id, int v) const { return edges[edge_id].u == v ? edges[edge_id].v : edges[edge_id].u; }

  void finalize();  // roots the tree; throws InputError if disconnected or cyclic
};

WeightedTree make_tree(const std::vector<long long>& labels, long long root_label,
                       const std::vector<std::tuple<long long, long long, Weight>>& edges,
                       const std::vector<long long>& required_labels = {});

// Text format: first line "n root", then n-1 lines "u v w", then an optional
// line "R: id id ..." naming the required vertices (absent means all).
WeightedTree parse_tree(const std::string& text);
std::string format_tree(const WeightedTree& t);

struct TreePath {
  Weight weight = 0;
  std::vector<int> verts;  // internal indices, endpoints included
};

// Unique simple path between two vertices, found by walking parent pointers.
TreePath tree_distance(const WeightedTree& t, int u, int v);

// Rooted slice of a tree in local index space; the shape shared by the public
// tree type and the builder's sub-instances, so pruning and decomposition are
// implemented once against it.
struct RootedView {
  int m = 0;
  int root = -1;
  const std::vector<int>* par = nullptr;
  const std::vector<Weight>* par_w = nullptr;
  const std::vector<std::vector<int>>* kids = nullptr;  // child vertex lists
  const std::vector<char>* req = nullptr;
};

struct PruneResult {
  std::vector<int> kept;  // local ids of surviving vertices, kept[0] is the new root
  std::vector<int> par;   // positions into kept, -1 at the root
  std::vector<Weight> par_w;
};

// Contracts the view onto the closure of its required set: every surviving
// Steiner vertex either branches toward two required groups or is the new
// root, and spliced chains carry their summed weight.
PruneResult prune_core(const RootedView& view);

// Cut vertices whose removal leaves every component with at most l required
// vertices; at most floor(m / (l+1)) of them. Empty when |R| <= l. Ties and
// output order are resolved by tie_label, ascending.
std::vector<int> decompose_core(const RootedView& view, long long l,
                                const std::vector<long long>& tie_label);

WeightedTree prune_tree(const WeightedTree& t);
std::vector<int> decompose(const WeightedTree& t, long long l);

}  // namespace hopnav
