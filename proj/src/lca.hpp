#pragma once
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hopnav {

// LCA / level-ancestor index over an explicit rooted tree given as parent +
// children arrays. LCA is Euler-tour minimum over a sparse table; level
// ancestors walk heavy-path heads. Construction is iterative, so deep chains
// are fine.
class RootedIndex {
 public:
  RootedIndex() = default;

  void build(const std::vector<int>& parent, const std::vector<std::vector<int>>& kids,
             int root) {
    int n = (int)parent.size();
    par_ = parent;
    depth_.assign(n, 0);
    heavy_ = std::vector<int>(n, -1);
    head_.assign(n, root);
    pos_.assign(n, 0);
    order_.clear();
    order_.reserve(n);

    std::vector<int> size(n, 1);
    std::vector<int> stack{root};
    std::vector<int> visit;
    visit.reserve(n);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      visit.push_back(v);
      for (int c : kids[v]) {
        depth_[c] = depth_[v] + 1;
        stack.push_back(c);
      }
    }
    if ((int)visit.size() != n) throw InternalError("rooted index: disconnected input");
    for (int i = n - 1; i >= 0; --i) {
      int v = visit[i];
      for (int c : kids[v]) {
        size[v] += size[c];
        if (heavy_[v] == -1 || size[c] > size[heavy_[v]]) heavy_[v] = c;
      }
    }
    // Assign heavy-path heads and a preorder that lists each heavy path
    // contiguously, so jumping to `head` plus an offset lands on the ancestor.
    stack.assign(1, root);
    while (!stack.empty()) {
      int h = stack.back();
      stack.pop_back();
      for (int v = h; v != -1; v = heavy_[v]) {
        head_[v] = h;
        pos_[v] = (int)order_.size();
        order_.push_back(v);
        for (int c : kids[v])
          if (c != heavy_[v]) stack.push_back(c);
      }
    }

    // Euler tour for LCA-by-RMQ.
    first_.assign(n, -1);
    euler_.clear();
    euler_.reserve(2 * n);
    struct Frame {
      int v;
      size_t i;
    };
    std::vector<Frame> fs{{root, 0}};
    first_[root] = 0;
    euler_.push_back(root);
    while (!fs.empty()) {
      Frame& f = fs.back();
      if (f.i < kids[f.v].size()) {
        int c = kids[f.v][f.i++];
        first_[c] = (int)euler_.size();
        euler_.push_back(c);
        fs.push_back({c, 0});
      } else {
        fs.pop_back();
        if (!fs.empty()) euler_.push_back(fs.back().v);
      }
    }
    int m = (int)euler_.size();
    log_.assign(m + 1, 0);
    for (int i = 2; i <= m; ++i) log_[i] = log_[i / 2] + 1;
    int levels = log_[m] + 1;
    table_.assign(levels, std::vector<int>(m));
    for (int i = 0; i < m; ++i) table_[0][i] = euler_[i];
    for (int l = 1; l < levels; ++l)
      for (int i = 0; i + (1 << l) <= m; ++i)
        table_[l][i] = shallower(table_[l - 1][i], table_[l - 1][i + (1 << (l - 1))]);
  }

  int lca(int a, int b) const {
    int i = first_[a], j = first_[b];
    if (i > j) std::swap(i, j);
    int l = log_[j - i + 1];
    return shallower(table_[l][i], table_[l][j + 1 - (1 << l)]);
  }

  // Ancestor of v at depth d (d <= depth(v)).
  int level_ancestor(int v, int d) const {
    if (d > depth_[v]) throw InternalError("level ancestor below the vertex");
    while (depth_[head_[v]] > d) v = par_[head_[v]];
    return order_[pos_[head_[v]] + d - depth_[head_[v]]];
  }

  int depth(int v) const { return depth_[v]; }
  int parent(int v) const { return par_[v]; }

  bool is_ancestor(int a, int b) const { return lca(a, b) == a; }

 private:
  int shallower(int a, int b) const { return depth_[a] <= depth_[b] ? a : b; }

  std::vector<int> par_, depth_, heavy_, head_, pos_, order_, first_, euler_, log_;
  std::vector<std::vector<int>> table_;
};

}
