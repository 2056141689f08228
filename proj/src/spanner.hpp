#pragma once

#include <unordered_map>
#include <vector>

#include "lca.hpp"
#include "tree.hpp"

namespace hopnav {

enum class EdgeOrigin { BaseTree, BaseExtra, Hub, InBorder, CutBlock };

// Edge of the hop spanner. Endpoints are internal indices of the input tree
// and the weight always equals the tree distance of the endpoints.
struct SpannerEdge {
  int u = -1, v = -1;
  Weight w = 0;
  EdgeOrigin origin = EdgeOrigin::BaseTree;
  int inst = -1;  // instance whose tree realizes this edge as a path
};

// One tree the construction works on: the input tree itself, a pruned copy,
// a residual component, or a closure over a cut set. Vertices are local ids;
// `orig` maps them back to input-tree indices. `parent` names the instance
// whose edges refine this instance's edges (-1 for the input tree), which is
// what path walks for weights and annotations run against.
struct Inst {
  enum class Kind { Step, Base, CutBlock };
  Kind kind = Kind::Step;
  int parent = -1;
  int root = 0;
  std::vector<int> orig;
  std::unordered_map<int, int> loc;
  std::vector<int> par;
  std::vector<Weight> par_w;
  std::vector<std::vector<int>> kids;
  std::vector<int> hop_depth;
  std::vector<char> req;
  int k = 0;  // hop budget this instance was processed under
  int phi_node = -1;
  std::vector<int> cuts;  // Step: local ids of the cut set
  std::vector<int> edge_ids;                                // Base: its usable spanner edges
  std::vector<std::vector<std::pair<int, int>>> base_adj;   // Base: local vertex -> (local nbr, edge id)

  long long req_count() const {
    long long c = 0;
    for (char r : req) c += r ? 1 : 0;
    return c;
  }
  int size() const { return (int)orig.size(); }
};

// Contraction of a step instance: one vertex per residual component (sitting
// at the component root) plus every cut vertex. No two component vertices are
// adjacent, and a cut is adjacent to a component exactly when it borders it.
struct ContractedTree {
  std::vector<int> verts;  // contracted vertex -> input-tree index
  std::vector<char> is_cut;
  std::vector<int> par;
  std::vector<std::vector<int>> kids;
  int root = 0;
  std::unordered_map<int, int> loc;  // input-tree index of any instance vertex -> contracted vertex
  RootedIndex idx;
};

struct PhiNode {
  enum class Kind { Base, Regular, Composite };
  Kind kind = Kind::Base;
  int parent = -1;
  int level = 0;
  int nav = 0;
  int inst = -1;
  int center = -1;          // Regular: the cut vertex, input-tree index
  std::vector<int> cuts;    // Composite: cut set, input-tree indices
  int next_nav = -1;        // Composite at hop budget >= 4: nested navigator
  int ctree = -1;           // Composite: contracted-tree id
};

// A navigator is one tree of search nodes with its own vertex-to-node map;
// nested navigators answer the recursive queries between cut vertices.
struct NavRec {
  int phi_root = -1;
  int k = 0;
  std::unordered_map<int, int> eta;  // required input-tree index -> phi node
};

struct HopSpanner {
  WeightedTree tree;
  int k = 0;
  std::vector<SpannerEdge> edges;
  std::vector<Inst> insts;
  std::vector<PhiNode> phi;
  std::vector<ContractedTree> ctrees;
  std::vector<NavRec> navs;
  std::unordered_map<long long, int> edge_index;  // unordered endpoint pair -> edge id
  int max_phi_level = 0;

  int edge_between(int u, int v) const;  // -1 when absent
  long long origin_count(EdgeOrigin o) const;
};

// Builds the k-hop structure for the tree's required set. Requires k >= 2.
HopSpanner build_spanner(const WeightedTree& t, int k);

// One line per edge, "u v w" with vertex labels, in construction order.
std::string format_spanner(const HopSpanner& s);

// Vertices on the path from a to b inside an instance, endpoints included.
std::vector<int> inst_path(const Inst& I, int a, int b);

}  // namespace hopnav
