#include "apps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>

#include "errors.hpp"

namespace hopnav {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::infinity();

using PairMap = std::map<std::pair<long long, long long>, Weight>;

// Walks the oracle path between two points and folds its hops into the edge
// map; a pair seen through several trees keeps its lightest weight.
void union_path(PairMap& uni, const MetricNavigator& nav, const UnionIds& g, long long a,
                long long b) {
  MetricPath mp = metric_find_path(nav, a, b, true);
  const HopSpanner& s = nav.spanners[mp.tree];
  const auto& to_g = g.to_global[mp.tree];
  for (size_t i = 0; i + 1 < mp.points.size(); i++) {
    int e = s.edge_between(s.tree.idx(mp.points[i]), s.tree.idx(mp.points[i + 1]));
    if (e < 0) throw InternalError("reported path skips a spanner edge");
    long long gx = to_g.at(mp.points[i]), gy = to_g.at(mp.points[i + 1]);
    if (gx > gy) std::swap(gx, gy);
    auto [it, fresh] = uni.emplace(std::make_pair(gx, gy), s.edges[e].w);
    if (!fresh && s.edges[e].w < it->second) it->second = s.edges[e].w;
  }
}

}  // namespace

UnionIds union_ids(const MetricNavigator& nav) {
  UnionIds g;
  g.to_global.resize(nav.spanners.size());
  long long next = 0;
  for (long long p : nav.metric.pid) next = std::max(next, p + 1);
  for (size_t ti = 0; ti < nav.spanners.size(); ti++) {
    const WeightedTree& t = nav.spanners[ti].tree;
    for (int v = 0; v < t.n; v++) {
      long long l = t.label[v];
      g.to_global[ti][l] = nav.metric.pix.count(l) ? l : next++;
    }
  }
  return g;
}

SptResult approximate_spt(const MetricNavigator& nav, long long rt,
                          const std::function<void(const SptResult&, long long)>& observer) {
  nav.metric.ix(rt);
  UnionIds g = union_ids(nav);
  SptResult r;
  r.rt = rt;
  r.dist[rt] = 0;
  r.verts.push_back(rt);
  auto dist_of = [&](long long x) {
    auto it = r.dist.find(x);
    return it == r.dist.end() ? kInf : it->second;
  };
  for (long long v : nav.metric.pid) {
    if (v == rt) continue;
    MetricPath mp = metric_find_path(nav, rt, v, true);
    const HopSpanner& s = nav.spanners[mp.tree];
    const auto& to_g = g.to_global[mp.tree];
    for (size_t i = 0; i + 1 < mp.points.size(); i++) {
      int e = s.edge_between(s.tree.idx(mp.points[i]), s.tree.idx(mp.points[i + 1]));
      if (e < 0) throw InternalError("reported path skips a spanner edge");
      Weight w = s.edges[e].w;
      long long gx = to_g.at(mp.points[i]), gy = to_g.at(mp.points[i + 1]);
      Weight du = dist_of(gx);
      if (du + w < dist_of(gy)) {
        bool fresh = !r.dist.count(gy);
        r.dist[gy] = du + w;
        r.parent[gy] = gx;
        r.pweight[gy] = w;
        if (fresh) r.verts.push_back(gy);
        if (observer) observer(r, gy);
      }
    }
  }
  return r;
}

MstResult approximate_mst(const MetricNavigator& nav) {
  const FiniteMetric& m = nav.metric;
  MstResult r;
  int n = m.n;
  std::vector<std::pair<int, int>> base;
  if (n > 1) {
    std::vector<char> in(n, 0);
    std::vector<Weight> key(n, kInf);
    std::vector<int> from(n, -1);
    in[0] = 1;
    for (int j = 1; j < n; j++) {
      key[j] = m.at(0, j);
      from[j] = 0;
    }
    for (int round = 1; round < n; round++) {
      int best = -1;
      for (int j = 0; j < n; j++)
        if (!in[j] && (best < 0 || key[j] < key[best])) best = j;
      in[best] = 1;
      base.push_back({from[best], best});
      r.base_weight += key[best];
      for (int j = 0; j < n; j++)
        if (!in[j] && m.at(best, j) < key[j]) {
          key[j] = m.at(best, j);
          from[j] = best;
        }
    }
  }

  UnionIds g = union_ids(nav);
  PairMap uni;
  for (auto [a, b] : base) union_path(uni, nav, g, m.pid[a], m.pid[b]);
  std::map<long long, std::vector<std::pair<long long, Weight>>> adj;
  for (auto& [pr, w] : uni) {
    r.union_edges.push_back({pr.first, pr.second, w});
    adj[pr.first].push_back({pr.second, w});
    adj[pr.second].push_back({pr.first, w});
  }

  if (n == 0) return r;
  long long start = *std::min_element(m.pid.begin(), m.pid.end());
  std::map<long long, char> seen;
  seen[start] = 1;
  std::queue<long long> bfs;
  bfs.push(start);
  while (!bfs.empty()) {
    long long cur = bfs.front();
    bfs.pop();
    auto it = adj.find(cur);
    if (it == adj.end()) continue;
    for (auto [nb, w] : it->second) {
      if (seen.emplace(nb, 1).second) {
        r.tree_edges.push_back({cur, nb, w});
        r.weight += w;
        bfs.push(nb);
      }
    }
  }
  if (seen.size() != adj.size() + (adj.count(start) ? 0 : 1))
    throw InternalError("oracle paths left the union disconnected");
  return r;
}

SparsifyResult sparsify(const MetricNavigator& nav,
                        const std::vector<std::pair<long long, long long>>& graph) {
  const FiniteMetric& m = nav.metric;
  UnionIds g = union_ids(nav);
  SparsifyResult r;
  PairMap uni;
  for (auto [a, b] : graph) {
    if (a == b) throw InputError("graph edge endpoints coincide");
    r.input_weight += m.at(m.ix(a), m.ix(b));
    union_path(uni, nav, g, a, b);
  }
  for (auto& [pr, w] : uni) {
    r.edges.push_back({pr.first, pr.second, w});
    r.weight += w;
  }
  return r;
}

std::vector<std::pair<long long, long long>> greedy_spanner_edges(const FiniteMetric& m,
                                                                  double beta) {
  if (beta < 1.0) throw InputError("stretch target must be at least 1");
  struct Cand {
    Weight d;
    int i, j;
  };
  std::vector<Cand> cand;
  for (int i = 0; i < m.n; i++)
    for (int j = i + 1; j < m.n; j++) cand.push_back({m.at(i, j), i, j});
  std::sort(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<std::vector<std::pair<int, Weight>>> adj(m.n);
  auto graph_dist = [&](int src, int dst) {
    std::vector<Weight> dist(m.n, kInf);
    dist[src] = 0;
    std::priority_queue<std::pair<Weight, int>, std::vector<std::pair<Weight, int>>,
                        std::greater<>>
        pq;
    pq.push({0, src});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d > dist[v]) continue;
      if (v == dst) return d;
      for (auto [nb, w] : adj[v])
        if (d + w < dist[nb]) {
          dist[nb] = d + w;
          pq.push({dist[nb], nb});
        }
    }
    return dist[dst];
  };
  std::vector<std::pair<long long, long long>> out;
  for (const Cand& c : cand) {
    if (graph_dist(c.i, c.j) <= beta * c.d * (1 + 1e-12)) continue;
    adj[c.i].push_back({c.j, c.d});
    adj[c.j].push_back({c.i, c.d});
    out.push_back({m.pid[c.i], m.pid[c.j]});
  }
  return out;
}

Verifier make_verifier(const WeightedTree& t, int k) {
  Verifier v;
  v.tree = t;
  v.spanner = build_spanner(t, k);
  v.k = k;
  std::vector<EdgeFold<Weight>> per_edge(t.edges.size());
  for (size_t i = 0; i < t.edges.size(); i++) per_edge[i] = {t.edges[i].w, t.edges[i].w};
  auto mx = [](Weight a, Weight b) { return std::max(a, b); };
  auto folds = annotate(v.spanner, per_edge, mx);
  v.edge_max.resize(folds.size());
  for (size_t e = 0; e < folds.size(); e++) v.edge_max[e] = folds[e].fwd;

  const HopSpanner& s = v.spanner;
  v.orders.assign(s.edges.size(), {});
  for (int ii = 0; ii < (int)s.insts.size(); ii++) {
    const Inst& I = s.insts[ii];
    std::vector<int> ids;
    if (I.kind == Inst::Kind::Base) {
      ids = I.edge_ids;
    } else if (I.kind == Inst::Kind::Step && I.k == 2 && !I.cuts.empty()) {
      int c = I.orig[I.cuts[0]];
      for (int x = 0; x < I.size(); x++) {
        if (!I.req[x] || I.orig[x] == c) continue;
        int e = s.edge_between(c, I.orig[x]);
        if (e < 0) throw InternalError("two-hop step lost one of its edges");
        ids.push_back(e);
      }
    } else {
      continue;
    }
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      if (v.edge_max[a] != v.edge_max[b]) return v.edge_max[a] < v.edge_max[b];
      return a < b;
    });
    for (int rank = 0; rank < (int)ids.size(); rank++)
      v.orders[ids[rank]].push_back({ii, rank + 1});
  }
  return v;
}

VerifyOutcome verify_mst_edge(const Verifier& v, long long u_label, long long v_label,
                              Weight w_query, bool optimized) {
  const HopSpanner& s = v.spanner;
  int u = s.tree.idx(u_label), w = s.tree.idx(v_label);
  if (u == w) throw InputError("verification query needs two distinct vertices");
  if (s.tree.par[u] == w || s.tree.par[w] == u)
    throw InputError("verification query names a tree edge: (" + std::to_string(u_label) +
                     ", " + std::to_string(v_label) + ")");
  auto path = find_path(s, u, w);
  std::vector<int> ids;
  for (size_t i = 0; i + 1 < path.size(); i++) {
    int e = s.edge_between(path[i], path[i + 1]);
    if (e < 0) throw InternalError("reported path skips a spanner edge");
    ids.push_back(e);
  }
  if (ids.empty()) throw InternalError("verification path carries no edges");

  std::vector<char> keep(ids.size(), 1);
  if (optimized && v.k % 2 == 0 && ids.size() >= 2) {
    // Two path edges ranked by the same construction step resolve their
    // heavier maximum by rank alone, saving one weight comparison.
    auto shared = [&](int ea, int eb) -> std::optional<std::pair<int, int>> {
      for (auto [ga, ra] : v.orders[ea])
        for (auto [gb, rb] : v.orders[eb])
          if (ga == gb) return std::make_pair(ra, rb);
      return std::nullopt;
    };
    bool done = false;
    for (size_t i = 0; i < ids.size() && !done; i++)
      for (size_t j = i + 1; j < ids.size() && !done; j++)
        if (auto rk = shared(ids[i], ids[j])) {
          keep[rk->first < rk->second ? i : j] = 0;
          done = true;
        }
  }

  VerifyOutcome out;
  bool have = false;
  Weight best = 0;
  for (size_t i = 0; i < ids.size(); i++) {
    if (!keep[i]) continue;
    Weight val = v.edge_max[ids[i]];
    if (!have) {
      best = val;
      have = true;
    } else {
      out.comparisons++;
      best = std::max(best, val);
    }
  }
  out.comparisons++;
  out.heavier = w_query > best;
  return out;
}

double eval_lower_bound(long long n, int k) {
  if (n < 1) throw InputError("point count must be positive");
  if (k == 2) return 0.125 * (double)n * std::log2((double)n);
  if (k == 3) {
    if (n < 25600) return (double)(n - 1);
    return (double)n * std::log2(std::log2((double)n)) / 51200.0;
  }
  throw InputError("size floors are known for hop budgets 2 and 3 only");
}

}  // namespace hopnav
