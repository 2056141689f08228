#include "routing.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_map>

#include "pathquery.hpp"
#include "rng.hpp"

namespace hopnav {

namespace {

int bits_for(long long count) {
  int b = 0;
  while ((1LL << b) < count) b++;
  return b;
}

// Regular-node ancestor chain of a vertex, root first.
std::vector<int> hub_chain(const HopSpanner& s, int v) {
  std::vector<int> chain;
  for (int node = s.navs[0].eta.at(v); node != -1; node = s.phi[node].parent)
    if (s.phi[node].kind == PhiNode::Kind::Regular) chain.push_back(node);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

void assert_shared_prefix(const RoutingScheme& rs) {
  const HopSpanner& s = rs.spanner;
  int n = rs.tree.n;
  std::vector<std::vector<int>> chains(n);
  for (int v = 0; v < n; v++) chains[v] = hub_chain(s, v);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) {
      size_t lcp = 0;
      while (lcp < chains[u].size() && lcp < chains[v].size() &&
             chains[u][lcp] == chains[v][lcp])
        lcp++;
      int l = phi_lca(s, s.navs[0].eta.at(u), s.navs[0].eta.at(v));
      std::vector<int> expect;
      for (int node = l; node != -1; node = s.phi[node].parent)
        if (s.phi[node].kind == PhiNode::Kind::Regular) expect.push_back(node);
      if (lcp != expect.size())
        throw InternalError("hub ancestor lists do not share a prefix ending at the meeting node");
    }
}

}  // namespace

Decision decide(const VertexTable& table, const Header& header) {
  Decision d;
  auto same = [&d](long long a, long long b) {
    d.comparisons++;
    return a == b;
  };

  if (same(header.to.dest, table.self)) {
    d.act = Decision::Act::Deliver;
    return d;
  }
  for (const auto& [id, port] : table.q)
    if (same(id, header.to.dest)) {
      d.act = Decision::Act::Forward;
      d.port = port;
      return d;
    }

  const auto& up = table.up;
  const auto& down = header.to.down;
  long long hi = (long long)std::min(up.size(), down.size());
  long long lo = -1;
  long long top = hi;
  while (top - lo > 1) {
    long long mid = (lo + top) / 2;
    d.comparisons++;
    if (up[mid].node == down[mid].node)
      lo = mid;
    else
      top = mid;
  }
  if (lo < 0) {
    d.reason = "no shared hub between source and destination";
    return d;
  }
  d.comparisons++;
  int port = up[lo].node == table.node ? down[lo].port : up[lo].port;
  if (port <= 0) {
    d.reason = "header names this vertex as its own hub";
    return d;
  }
  d.act = Decision::Act::Forward;
  d.port = port;
  return d;
}

RoutingScheme build_routing(const WeightedTree& t, uint64_t seed) {
  RoutingScheme rs;
  {
    // The scheme addresses every vertex, so everything becomes required.
    std::vector<std::tuple<long long, long long, Weight>> edges;
    for (const auto& e : t.edges) edges.emplace_back(t.label[e.u], t.label[e.v], e.w);
    rs.tree = make_tree(t.label, t.label[t.root], edges);
  }
  rs.spanner = build_spanner(rs.tree, 2);
  const HopSpanner& s = rs.spanner;
  int n = rs.tree.n;

  rs.ports.adj.resize(n);
  rs.ports.port_of.resize(n);
  rs.ports.slot_of.resize(n);
  std::vector<std::unordered_map<int, int>> slot_by_edge(n);
  for (size_t e = 0; e < s.edges.size(); e++) {
    for (int v : {s.edges[e].u, s.edges[e].v}) {
      slot_by_edge[v][(int)e] = (int)rs.ports.adj[v].size();
      rs.ports.adj[v].emplace_back(s.edges[e].u == v ? s.edges[e].v : s.edges[e].u, (int)e);
    }
  }
  Rng64 rng(seed);
  for (int v = 0; v < n; v++) {
    int deg = (int)rs.ports.adj[v].size();
    auto& ports = rs.ports.port_of[v];
    ports.resize(deg);
    for (int i = 0; i < deg; i++) ports[i] = i + 1;
    for (int i = deg - 1; i > 0; i--)
      std::swap(ports[i], ports[(int)rng.below((uint64_t)i + 1)]);
    rs.ports.slot_of[v].assign(deg, -1);
    for (int i = 0; i < deg; i++) rs.ports.slot_of[v][ports[i] - 1] = i;
  }

  auto port_at = [&](int from, int to) {
    int e = s.edge_between(from, to);
    if (e < 0) throw InternalError("hub ancestor without a spanner edge");
    return rs.ports.port_of[from][slot_by_edge[from].at(e)];
  };

  rs.addr.resize(n);
  rs.table.resize(n);
  for (int v = 0; v < n; v++) {
    rs.addr[v].dest = rs.tree.label[v];
    rs.table[v].self = rs.tree.label[v];
    rs.table[v].node = s.navs[0].eta.at(v);
    for (int node : hub_chain(s, v)) {
      int c = s.phi[node].center;
      rs.addr[v].down.push_back({node, c == v ? 0 : port_at(c, v)});
      rs.table[v].up.push_back({node, c == v ? 0 : port_at(v, c)});
    }
  }

  // Co-residents of each base leaf route greedily inside the leaf graph;
  // with at most three vertices the next hop is the BFS parent.
  for (const auto& I : s.insts) {
    if (I.kind != Inst::Kind::Base || I.size() < 2) continue;
    for (int b = 0; b < I.size(); b++) {
      std::vector<int> next(I.size(), -1);
      std::vector<int> queue{b};
      for (size_t qi = 0; qi < queue.size(); qi++) {
        int x = queue[qi];
        for (auto [y, eid] : I.base_adj[x]) {
          (void)eid;
          if (y == b || next[y] != -1) continue;
          next[y] = x;
          queue.push_back(y);
        }
      }
      for (int a = 0; a < I.size(); a++) {
        if (a == b) continue;
        if (next[a] < 0) throw InternalError("base leaf is not connected");
        rs.table[I.orig[a]].q.emplace_back(rs.tree.label[I.orig[b]],
                                           port_at(I.orig[a], I.orig[next[a]]));
      }
    }
  }

  if (n <= 64) assert_shared_prefix(rs);
  return rs;
}

Header header_for(const RoutingScheme& rs, long long to) {
  Header h;
  h.to = rs.addr[rs.tree.idx(to)];
  return h;
}

RouteResult route_header(const RoutingScheme& rs, long long from, const Header& header) {
  RouteResult r;
  int cur = rs.tree.idx(from);
  bool first = true;
  while (true) {
    Decision d = decide(rs.table[cur], header);
    r.max_comparisons = std::max(r.max_comparisons, d.comparisons);
    if (d.act == Decision::Act::Deliver) {
      r.delivered = true;
      return r;
    }
    if (d.act == Decision::Act::Drop) {
      r.drop_reason = d.reason;
      return r;
    }
    if (d.port < 1 || d.port > (int)rs.ports.slot_of[cur].size()) {
      r.drop_reason = "port out of range";
      return r;
    }
    if (r.hops >= 2) {
      r.drop_reason = "hop budget exhausted";
      return r;
    }
    if (first) {
      r.trace.push_back(rs.tree.label[cur]);
      first = false;
    }
    auto [nbr, eid] = rs.ports.adj[cur][rs.ports.slot_of[cur][d.port - 1]];
    r.weight += rs.spanner.edges[eid].w;
    r.hops++;
    cur = nbr;
    r.trace.push_back(rs.tree.label[cur]);
  }
}

RouteResult route(const RoutingScheme& rs, long long from, long long to) {
  return route_header(rs, from, header_for(rs, to));
}

long long table_bits(const RoutingScheme& rs, int v) {
  int node_bits = bits_for((long long)rs.spanner.phi.size());
  int vid_bits = bits_for(rs.tree.n);
  int max_deg = 0;
  for (const auto& a : rs.ports.adj) max_deg = std::max(max_deg, (int)a.size());
  int port_bits = bits_for(max_deg + 1);
  long long bits = 0;
  bits += (long long)rs.addr[v].down.size() * (node_bits + port_bits);
  bits += (long long)rs.table[v].up.size() * (node_bits + port_bits);
  bits += (long long)rs.table[v].q.size() * (vid_bits + port_bits);
  return bits;
}

CoverRouting build_cover_routing(const FiniteMetric& m, const TreeCover& c, uint64_t seed) {
  if (c.ramsey.empty())
    throw InputError("cover routing needs a ramsey cover: the source must pick its tree locally");
  validate_cover(c, m, CoverCheck{false, 0});
  CoverRouting cr;
  cr.metric = m;
  cr.cover = c;
  Rng64 rng(seed);
  for (const auto& t : c.trees) cr.schemes.push_back(build_routing(t, rng.next()));
  return cr;
}

RouteResult cover_route(const CoverRouting& cr, long long from, long long to) {
  cr.metric.ix(from);
  cr.metric.ix(to);
  int ti = cr.cover.ramsey.at(from);
  const RoutingScheme& rs = cr.schemes[ti];
  Header h = header_for(rs, to);
  h.tree = ti;
  RouteResult r = route_header(rs, from, h);
  r.tree = ti;
  return r;
}

}  // namespace hopnav
