#include "spanner.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <utility>

#include "ackermann.hpp"
#include "errors.hpp"
#include "textio.hpp"

namespace hopnav {

namespace {

long long pair_key(int n, int u, int v) {
  return (long long)std::min(u, v) * n + std::max(u, v);
}

std::vector<int> bfs_order(const Inst& I) {
  std::vector<int> order;
  order.reserve(I.size());
  std::deque<int> q{I.root};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    order.push_back(v);
    for (int c : I.kids[v]) q.push_back(c);
  }
  if ((int)order.size() != I.size()) throw InternalError("instance tree is not connected");
  return order;
}

bool needs_prune(const Inst& I) {
  for (int v = 0; v < I.size(); v++)
    if (!I.req[v] && I.kids[v].size() < 2) return true;
  return false;
}

struct Builder {
  HopSpanner s;

  Builder(const WeightedTree& t, int k) {
    s.tree = t;
    s.k = k;
  }

  int add_edge(int u, int v, Weight w, EdgeOrigin origin, int inst) {
    if (u == v) throw InternalError("spanner edge endpoints coincide");
    long long key = pair_key(s.tree.n, u, v);
    auto it = s.edge_index.find(key);
    if (it != s.edge_index.end()) {
      Weight old = s.edges[it->second].w;
      if (std::abs(old - w) > 1e-9 * std::max({1.0, std::abs(old), std::abs(w)}))
        throw InternalError("repeated spanner edge with a different weight");
      return it->second;
    }
    int id = (int)s.edges.size();
    s.edges.push_back({u, v, w, origin, inst});
    s.edge_index.emplace(key, id);
    return id;
  }

  void finish_inst(Inst& I) {
    int m = I.size();
    I.kids.assign(m, {});
    for (int v = 0; v < m; v++)
      if (I.par[v] >= 0) I.kids[I.par[v]].push_back(v);
    I.hop_depth.assign(m, 0);
    for (int v : bfs_order(I))
      if (I.par[v] >= 0) I.hop_depth[v] = I.hop_depth[I.par[v]] + 1;
    I.loc.clear();
    for (int v = 0; v < m; v++) I.loc.emplace(I.orig[v], v);
  }

  int make_root_inst() {
    const WeightedTree& t = s.tree;
    Inst I;
    I.parent = -1;
    I.root = t.root;
    I.orig.resize(t.n);
    for (int v = 0; v < t.n; v++) I.orig[v] = v;
    I.par = t.par;
    I.par_w = t.par_w;
    I.req.assign(t.required.begin(), t.required.end());
    finish_inst(I);
    s.insts.push_back(std::move(I));
    return 0;
  }

  int push_pruned(int parent_id, const PruneResult& pr, const std::vector<char>& req_mask,
                  Inst::Kind kind) {
    const Inst& P = s.insts[parent_id];
    Inst I;
    I.kind = kind;
    I.parent = parent_id;
    I.root = 0;
    int m = (int)pr.kept.size();
    I.orig.resize(m);
    I.par = pr.par;
    I.par_w = pr.par_w;
    I.req.resize(m);
    for (int i = 0; i < m; i++) {
      I.orig[i] = P.orig[pr.kept[i]];
      I.req[i] = req_mask[pr.kept[i]];
    }
    finish_inst(I);
    s.insts.push_back(std::move(I));
    return (int)s.insts.size() - 1;
  }

  int make_pruned(int inst_id) {
    const Inst& P = s.insts[inst_id];
    RootedView view{P.size(), P.root, &P.par, &P.par_w, &P.kids, &P.req};
    auto pr = prune_core(view);
    auto mask = P.req;  // copy before insts reallocates
    return push_pruned(inst_id, pr, mask, Inst::Kind::Step);
  }

  // Same tree, different required set (the given cut vertices), pruned.
  int make_subset_inst(int inst_id, const std::vector<int>& req_local, Inst::Kind kind) {
    const Inst& P = s.insts[inst_id];
    std::vector<char> mask(P.size(), 0);
    for (int v : req_local) mask[v] = 1;
    RootedView view{P.size(), P.root, &P.par, &P.par_w, &P.kids, &mask};
    auto pr = prune_core(view);
    return push_pruned(inst_id, pr, mask, kind);
  }

  // members[0] is the component head; members are in parent-before-child order.
  int make_comp_inst(int step_id, const std::vector<int>& members) {
    const Inst& P = s.insts[step_id];
    Inst I;
    I.parent = step_id;
    I.root = 0;
    int m = (int)members.size();
    std::vector<int> local(P.size(), -1);
    for (int i = 0; i < m; i++) local[members[i]] = i;
    I.orig.resize(m);
    I.par.resize(m);
    I.par_w.resize(m);
    I.req.resize(m);
    for (int i = 0; i < m; i++) {
      int v = members[i];
      I.orig[i] = P.orig[v];
      I.req[i] = P.req[v];
      if (i == 0) {
        I.par[i] = -1;
        I.par_w[i] = 0;
      } else {
        I.par[i] = local[P.par[v]];
        I.par_w[i] = P.par_w[v];
        if (I.par[i] < 0) throw InternalError("component member precedes its parent");
      }
    }
    finish_inst(I);
    s.insts.push_back(std::move(I));
    return (int)s.insts.size() - 1;
  }

  int new_phi(PhiNode::Kind kind, int nav, int inst_id, int parent_phi) {
    PhiNode nd;
    nd.kind = kind;
    nd.parent = parent_phi;
    nd.nav = nav;
    nd.inst = inst_id;
    nd.level = parent_phi < 0 ? 0 : s.phi[parent_phi].level + 1;
    int id = (int)s.phi.size();
    s.max_phi_level = std::max(s.max_phi_level, nd.level);
    s.phi.push_back(std::move(nd));
    if (parent_phi < 0) s.navs[nav].phi_root = id;
    s.insts[inst_id].phi_node = id;
    return id;
  }

  void map_eta(int nav, int orig_v, int node) {
    if (!s.navs[nav].eta.emplace(orig_v, node).second)
      throw InternalError("vertex consumed twice within one navigator");
  }

  int build_nav(int inst_id, int k) {
    int nav = (int)s.navs.size();
    s.navs.push_back({-1, k, {}});
    build_rec(inst_id, nav, -1);
    return nav;
  }

  void build_rec(int inst_id, int nav, int parent_phi) {
    if (s.insts[inst_id].req_count() == 0)
      throw InternalError("recursion reached an instance without required vertices");
    if (needs_prune(s.insts[inst_id])) inst_id = make_pruned(inst_id);
    int k = s.navs[nav].k;
    s.insts[inst_id].k = k;
    const Inst I = s.insts[inst_id];  // snapshot; growing s.insts invalidates references
    if (I.req_count() <= (long long)k + 1)
      base_case(I, inst_id, nav, parent_phi);
    else
      step_case(I, inst_id, nav, parent_phi);
  }

  void base_case(const Inst& I, int inst_id, int nav, int parent_phi) {
    int node = new_phi(PhiNode::Kind::Base, nav, inst_id, parent_phi);
    int k = s.navs[nav].k;
    std::vector<int> ids;
    for (int v = 0; v < I.size(); v++) {
      if (v == I.root) continue;
      ids.push_back(add_edge(I.orig[v], I.orig[I.par[v]], I.par_w[v], EdgeOrigin::BaseTree, inst_id));
    }
    // A tree on k+1 required vertices whose root forks exactly twice needs one
    // shortcut between the fork children to stay within the hop budget.
    if (I.req_count() == (long long)k + 1 && I.kids[I.root].size() == 2) {
      int a = I.kids[I.root][0], b = I.kids[I.root][1];
      ids.push_back(
          add_edge(I.orig[a], I.orig[b], I.par_w[a] + I.par_w[b], EdgeOrigin::BaseExtra, inst_id));
    }
    Inst& stored = s.insts[inst_id];
    stored.kind = Inst::Kind::Base;
    stored.edge_ids = ids;
    stored.base_adj.assign(I.size(), {});
    for (int e : ids) {
      int lu = I.loc.at(s.edges[e].u), lv = I.loc.at(s.edges[e].v);
      stored.base_adj[lu].push_back({lv, e});
      stored.base_adj[lv].push_back({lu, e});
    }
    for (int v = 0; v < I.size(); v++)
      if (I.req[v]) map_eta(nav, I.orig[v], node);
  }

  // Weighted depth-first walk from a cut vertex, stopping at other cuts; emits
  // a spanner edge to every required vertex reached.
  void hub_dfs(const Inst& I, int inst_id, int src, const std::vector<char>& cut,
               EdgeOrigin origin) {
    std::vector<char> vis(cut.begin(), cut.end());
    vis[src] = 1;
    std::vector<std::pair<int, Weight>> st;
    auto expand = [&](int v, Weight base) {
      for (int c : I.kids[v])
        if (!vis[c]) {
          vis[c] = 1;
          st.push_back({c, base + I.par_w[c]});
        }
      int p = I.par[v];
      if (p >= 0 && !vis[p]) {
        vis[p] = 1;
        st.push_back({p, base + I.par_w[v]});
      }
    };
    expand(src, 0);
    while (!st.empty()) {
      auto [v, w] = st.back();
      st.pop_back();
      if (I.req[v]) add_edge(I.orig[src], I.orig[v], w, origin, inst_id);
      expand(v, w);
    }
  }

  // All pairwise edges between the required vertices of a cut-closure instance.
  void cut_block_edges(int cb) {
    const Inst I = s.insts[cb];
    for (int a = 0; a < I.size(); a++) {
      if (!I.req[a]) continue;
      std::vector<char> vis(I.size(), 0);
      vis[a] = 1;
      std::vector<std::pair<int, Weight>> st;
      auto expand = [&](int v, Weight base) {
        for (int c : I.kids[v])
          if (!vis[c]) {
            vis[c] = 1;
            st.push_back({c, base + I.par_w[c]});
          }
        int p = I.par[v];
        if (p >= 0 && !vis[p]) {
          vis[p] = 1;
          st.push_back({p, base + I.par_w[v]});
        }
      };
      expand(a, 0);
      while (!st.empty()) {
        auto [v, w] = st.back();
        st.pop_back();
        if (I.req[v] && v > a) add_edge(I.orig[a], I.orig[v], w, EdgeOrigin::CutBlock, cb);
        expand(v, w);
      }
    }
  }

  int build_ctree(const Inst& I, const std::vector<int>& cuts, const std::vector<char>& cut,
                  const std::vector<int>& comp_id, const std::vector<std::vector<int>>& comps) {
    ContractedTree C;
    int nc = (int)comps.size();
    int m = nc + (int)cuts.size();
    C.verts.resize(m);
    C.is_cut.assign(m, 0);
    std::vector<int> cut_cv(I.size(), -1);
    for (int i = 0; i < nc; i++) C.verts[i] = I.orig[comps[i][0]];
    for (size_t j = 0; j < cuts.size(); j++) {
      int cv = nc + (int)j;
      cut_cv[cuts[j]] = cv;
      C.verts[cv] = I.orig[cuts[j]];
      C.is_cut[cv] = 1;
    }
    for (int i = 0; i < nc; i++)
      for (int v : comps[i]) C.loc.emplace(I.orig[v], i);
    for (int c : cuts) C.loc.emplace(I.orig[c], cut_cv[c]);

    auto cv_of = [&](int v) { return cut[v] ? cut_cv[v] : comp_id[v]; };
    C.par.assign(m, -1);
    for (int c : cuts)
      if (c != I.root) C.par[cut_cv[c]] = cv_of(I.par[c]);
    for (int i = 0; i < nc; i++) {
      int head = comps[i][0];
      if (head == I.root) continue;
      if (!cut[I.par[head]]) throw InternalError("adjacent residual components");
      C.par[i] = cut_cv[I.par[head]];
    }
    C.root = cv_of(I.root);
    C.kids.assign(m, {});
    for (int v = 0; v < m; v++)
      if (C.par[v] >= 0) C.kids[C.par[v]].push_back(v);
    C.idx.build(C.par, C.kids, C.root);
    s.ctrees.push_back(std::move(C));
    return (int)s.ctrees.size() - 1;
  }

  void step_case(const Inst& I, int inst_id, int nav, int parent_phi) {
    int k = s.navs[nav].k;
    long long n = I.req_count();
    unsigned long long l = alpha_prime(k - 2, (unsigned long long)n);
    if (l < 1 || (long long)l >= n) throw InternalError("split budget outside (0, n)");
    std::vector<long long> tie(I.size());
    for (int v = 0; v < I.size(); v++) tie[v] = s.tree.label[I.orig[v]];
    RootedView view{I.size(), I.root, &I.par, &I.par_w, &I.kids, &I.req};
    auto cuts = decompose_core(view, (long long)l, tie);
    if (cuts.empty()) throw InternalError("splittable instance produced no cut vertices");
    if (k == 2 && cuts.size() != 1)
      throw InternalError("hop budget 2 must split at a single vertex");
    s.insts[inst_id].cuts = cuts;
    std::vector<char> cut(I.size(), 0);
    for (int c : cuts) cut[c] = 1;

    int node;
    if (k == 2) {
      node = new_phi(PhiNode::Kind::Regular, nav, inst_id, parent_phi);
      s.phi[node].center = I.orig[cuts[0]];
    } else {
      node = new_phi(PhiNode::Kind::Composite, nav, inst_id, parent_phi);
      for (int c : cuts) s.phi[node].cuts.push_back(I.orig[c]);
    }
    for (int c : cuts) map_eta(nav, I.orig[c], node);

    for (int c : cuts)
      hub_dfs(I, inst_id, c, cut, k == 2 ? EdgeOrigin::Hub : EdgeOrigin::InBorder);

    if (k == 3) {
      int cb = make_subset_inst(inst_id, cuts, Inst::Kind::CutBlock);
      s.insts[cb].k = k;
      cut_block_edges(cb);
    }
    if (k >= 4) {
      int pd = make_subset_inst(inst_id, cuts, Inst::Kind::Step);
      s.phi[node].next_nav = build_nav(pd, k - 2);
    }

    std::vector<int> comp_id(I.size(), -1);
    std::vector<std::vector<int>> comps;
    for (int v : bfs_order(I)) {
      if (cut[v] || comp_id[v] >= 0) continue;
      if (!(v == I.root || cut[I.par[v]])) throw InternalError("component head below a non-cut vertex");
      std::vector<int> members;
      std::deque<int> q{v};
      comp_id[v] = (int)comps.size();
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        members.push_back(x);
        for (int c : I.kids[x])
          if (!cut[c]) {
            comp_id[c] = (int)comps.size();
            q.push_back(c);
          }
      }
      comps.push_back(std::move(members));
    }

    if (k >= 3) s.phi[node].ctree = build_ctree(I, cuts, cut, comp_id, comps);

    for (auto& members : comps) {
      long long r = 0;
      for (int v : members) r += I.req[v] ? 1 : 0;
      if (r == 0) continue;  // purely optional pocket between cuts; nothing to navigate
      int ci = make_comp_inst(inst_id, members);
      build_rec(ci, nav, node);
    }
  }
};

}  // namespace

int HopSpanner::edge_between(int u, int v) const {
  auto it = edge_index.find(pair_key(tree.n, u, v));
  return it == edge_index.end() ? -1 : it->second;
}

long long HopSpanner::origin_count(EdgeOrigin o) const {
  long long c = 0;
  for (auto& e : edges) c += e.origin == o ? 1 : 0;
  return c;
}

std::vector<int> inst_path(const Inst& I, int a, int b) {
  std::vector<int> up{a}, down{b};
  int x = a, y = b;
  while (x != y) {
    if (I.hop_depth[x] >= I.hop_depth[y]) {
      x = I.par[x];
      if (x < 0) throw InternalError("instance path walk escaped the tree");
      up.push_back(x);
    } else {
      y = I.par[y];
      if (y < 0) throw InternalError("instance path walk escaped the tree");
      down.push_back(y);
    }
  }
  for (size_t i = down.size() - 1; i-- > 0;) up.push_back(down[i]);
  return up;
}

HopSpanner build_spanner(const WeightedTree& t, int k) {
  if (k < 2) throw InputError("hop budget must be at least 2");
  if (t.required_count() < 1) throw InputError("required set is empty");
  Builder b(t, k);
  b.make_root_inst();
  b.build_nav(0, k);
  return std::move(b.s);
}

std::string format_spanner(const HopSpanner& s) {
  std::string out;
  for (const SpannerEdge& e : s.edges)
    out += std::to_string(s.tree.label[e.u]) + " " + std::to_string(s.tree.label[e.v]) + " " +
           textio::fmt_weight(e.w) + "\n";
  return out;
}

}  // namespace hopnav
