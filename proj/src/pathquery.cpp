#include "pathquery.hpp"

#include <algorithm>
#include <limits>

namespace hopnav {

namespace {

int walk_to_level(const HopSpanner& s, int node, int level) {
  while (s.phi[node].level > level) node = s.phi[node].parent;
  if (s.phi[node].level != level) throw InternalError("requested level above the root");
  return node;
}

// Lexicographic (weight, hops) shortest path inside a base instance, using
// only that instance's spanner edges. Instances here have O(k) vertices.
std::vector<int> base_path(const HopSpanner& s, const Inst& I, int u, int v) {
  int a = I.loc.at(u), b = I.loc.at(v);
  int m = I.size();
  const Weight INF = std::numeric_limits<Weight>::infinity();
  // dp[h][x]: least weight from a to x over at most h hops.
  std::vector<std::vector<Weight>> dp(m + 1, std::vector<Weight>(m, INF));
  std::vector<std::vector<std::pair<int, int>>> pred(m + 1,
                                                     std::vector<std::pair<int, int>>(m, {-1, -1}));
  dp[0][a] = 0;
  for (int h = 1; h <= m; h++) {
    dp[h] = dp[h - 1];
    for (int x = 0; x < m; x++) {
      if (dp[h - 1][x] == INF) continue;
      for (auto [nb, e] : I.base_adj[x]) {
        Weight w = dp[h - 1][x] + s.edges[e].w;
        if (w < dp[h][nb]) {
          dp[h][nb] = w;
          pred[h][nb] = {x, h - 1};
        }
      }
    }
  }
  if (dp[m][b] == INF) throw InternalError("base instance is disconnected");
  int hstar = m;
  while (hstar > 0 && dp[hstar - 1][b] == dp[m][b]) hstar--;
  std::vector<int> rev{b};
  int x = b, h = hstar;
  while (x != a) {
    while (h > 0 && pred[h][x].first < 0) h--;
    if (h == 0) throw InternalError("failed to retrace the base path");
    auto [px, ph] = pred[h][x];
    x = px;
    h = ph;
    rev.push_back(x);
  }
  std::vector<int> out;
  out.reserve(rev.size());
  for (size_t i = rev.size(); i-- > 0;) out.push_back(I.orig[rev[i]]);
  return out;
}

std::vector<int> path_in_nav(const HopSpanner& s, int u, int v, int nav, int depth,
                             int* max_depth) {
  *max_depth = std::max(*max_depth, depth);
  if (u == v) return {u};
  const auto& eta = s.navs[nav].eta;
  auto iu = eta.find(u), iv = eta.find(v);
  if (iu == eta.end() || iv == eta.end())
    throw InputError("endpoint is not a required vertex of this structure");
  int au = iu->second, av = iv->second;
  if (au == av && s.phi[au].kind == PhiNode::Kind::Base)
    return base_path(s, s.insts[s.phi[au].inst], u, v);

  int b = phi_lca(s, au, av);
  const PhiNode& B = s.phi[b];
  std::vector<int> path;
  if (B.kind == PhiNode::Kind::Regular) {
    path = {u, B.center, v};
  } else if (B.kind == PhiNode::Kind::Composite) {
    const ContractedTree& C = s.ctrees[B.ctree];
    auto side = [&](int endpoint, int node) {
      // contracted vertex standing for this endpoint at the meeting step
      if (node == b) return C.loc.at(endpoint);
      int child = walk_to_level(s, node, B.level + 1);
      const Inst& ci = s.insts[s.phi[child].inst];
      return C.loc.at(ci.orig[ci.root]);
    };
    int acv = side(u, au), bcv = side(v, av);
    if (acv == bcv) throw InternalError("distinct endpoints met below the meeting node");
    int z = C.idx.lca(acv, bcv);
    auto cut_toward = [&](int from, int other) {
      int cv = (z == from) ? C.idx.level_ancestor(other, C.idx.depth(from) + 1) : C.par[from];
      if (cv < 0 || !C.is_cut[cv]) throw InternalError("neighbor on the contracted path is not a cut vertex");
      return C.verts[cv];
    };
    int x = (au == b) ? u : cut_toward(acv, bcv);
    int y = (av == b) ? v : cut_toward(bcv, acv);
    if (s.navs[nav].k == 3) {
      path = {u, x, y, v};
    } else {
      auto mid = path_in_nav(s, x, y, B.next_nav, depth + 1, max_depth);
      path.reserve(mid.size() + 2);
      path.push_back(u);
      path.insert(path.end(), mid.begin(), mid.end());
      path.push_back(v);
    }
  } else {
    throw InternalError("meeting node of distinct instances is a base node");
  }
  std::vector<int> out;
  out.reserve(path.size());
  for (int w : path)
    if (out.empty() || out.back() != w) out.push_back(w);
  return out;
}

}  // namespace

int phi_lca(const HopSpanner& s, int a, int b) {
  if (a < 0 || b < 0 || a >= (int)s.phi.size() || b >= (int)s.phi.size())
    throw InputError("node id out of range");
  if (s.phi[a].nav != s.phi[b].nav)
    throw InputError("nodes belong to different recursion trees");
  while (s.phi[a].level > s.phi[b].level) a = s.phi[a].parent;
  while (s.phi[b].level > s.phi[a].level) b = s.phi[b].parent;
  while (a != b) {
    a = s.phi[a].parent;
    b = s.phi[b].parent;
    if (a < 0 || b < 0) throw InternalError("recursion tree has no common ancestor");
  }
  return a;
}

int phi_level_ancestor(const HopSpanner& s, int a, int level) {
  if (a < 0 || a >= (int)s.phi.size()) throw InputError("node id out of range");
  if (level < 0 || level > s.phi[a].level) throw InputError("level out of range");
  return walk_to_level(s, a, level);
}

std::vector<int> find_path(const HopSpanner& s, int u, int v, PathStats* stats) {
  if (u < 0 || u >= s.tree.n || v < 0 || v >= s.tree.n)
    throw InputError("vertex index out of range");
  int max_depth = 0;
  auto path = path_in_nav(s, u, v, 0, 1, &max_depth);
  if (stats) {
    stats->hops = (int)path.size() - 1;
    stats->nav_depth = max_depth;
  }
  return path;
}

}  // namespace hopnav
