#include "cover.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "pathquery.hpp"
#include "textio.hpp"

namespace hopnav {

using namespace textio;

namespace {

constexpr double kRelTol = 1e-12;

std::string pair_name(long long a, long long b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Distances from src to every vertex of the tree.
std::vector<Weight> distances_from(const WeightedTree& t, int src) {
  std::vector<Weight> dist(t.n, -1);
  std::vector<int> stack{src};
  dist[src] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : t.adj[v]) {
      int u = t.other_end(e, v);
      if (dist[u] >= 0) continue;
      dist[u] = dist[v] + t.edges[e].w;
      stack.push_back(u);
    }
  }
  return dist;
}

void require_points_present(const TreeCover& c, const FiniteMetric& m) {
  for (int ti = 0; ti < c.zeta(); ti++)
    for (long long id : m.pid)
      if (!c.trees[ti].index.count(id))
        throw InputError("tree " + std::to_string(ti) + " is missing point " +
                         std::to_string(id));
}

void require_ramsey_total(const TreeCover& c, const FiniteMetric& m) {
  if (c.ramsey.empty()) return;
  for (long long id : m.pid) {
    auto it = c.ramsey.find(id);
    if (it == c.ramsey.end())
      throw InputError("ramsey map is missing point " + std::to_string(id));
    if (it->second < 0 || it->second >= c.zeta())
      throw InputError("ramsey map sends point " + std::to_string(id) +
                       " to a tree that does not exist");
  }
}

}  // namespace

TreeCover star_cover(const FiniteMetric& m) {
  TreeCover c;
  c.gamma = 1.0;
  for (int i = 0; i < m.n; i++) {
    std::vector<long long> labels{m.pid[i]};
    std::vector<std::tuple<long long, long long, Weight>> edges;
    for (int j = 0; j < m.n; j++) {
      if (j == i) continue;
      labels.push_back(m.pid[j]);
      edges.emplace_back(m.pid[i], m.pid[j], m.at(i, j));
    }
    c.trees.push_back(make_tree(labels, m.pid[i], edges));
    c.ramsey[m.pid[i]] = i;
  }
  return c;
}

TreeCover single_tree_cover(const WeightedTree& t) {
  TreeCover c;
  c.gamma = 1.0;
  c.trees.push_back(t);
  for (int v = 0; v < t.n; v++)
    if (t.required[v]) c.ramsey[t.label[v]] = 0;
  return c;
}

TreeCover parse_cover(const std::string& text) {
  auto lines = split_lines(text);
  size_t li = 0;
  auto next_line = [&](const char* what) -> const std::string& {
    while (li < lines.size() && tokens_of(lines[li]).empty()) li++;
    if (li == lines.size()) throw InputError(std::string("missing ") + what);
    return lines[li++];
  };

  auto head = tokens_of(next_line("cover header"));
  if (head.size() < 2 || head.size() > 3)
    throw InputError("cover header must be 'gamma zeta [ramsey]'");
  TreeCover c;
  c.gamma = parse_real(head[0], "stretch");
  if (c.gamma < 1) throw InputError("stretch must be at least 1");
  long long zeta = parse_ll(head[1], "tree count");
  if (zeta < 1) throw InputError("a cover needs at least one tree");
  bool has_map = false;
  if (head.size() == 3) {
    if (head[2] != "ramsey") throw InputError("unknown header flag '" + head[2] + "'");
    has_map = true;
  }

  for (long long ti = 0; ti < zeta; ti++) {
    std::string block = next_line("tree block");
    auto bhead = tokens_of(block);
    if (bhead.size() != 2) throw InputError("tree block must start with 'n root'");
    long long n = parse_ll(bhead[0], "vertex count");
    block += "\n";
    for (long long i = 1; i < n; i++) block += std::string(next_line("tree edge")) + "\n";
    // The required line is optional, so peek before consuming.
    size_t save = li;
    while (li < lines.size() && tokens_of(lines[li]).empty()) li++;
    if (li < lines.size()) {
      auto toks = tokens_of(lines[li]);
      if (!toks.empty() && toks[0] == "R:") {
        block += lines[li++] + "\n";
      } else {
        li = save;
      }
    }
    c.trees.push_back(parse_tree(block));
  }

  if (has_map) {
    while (li < lines.size()) {
      auto toks = tokens_of(lines[li]);
      li++;
      if (toks.empty()) continue;
      if (toks.size() != 2) throw InputError("ramsey map line must be 'point tree-index'");
      long long id = parse_ll(toks[0], "point id");
      long long ti = parse_ll(toks[1], "tree index");
      if (ti < 0 || ti >= zeta) throw InputError("tree index out of range in ramsey map");
      if (!c.ramsey.emplace(id, (int)ti).second)
        throw InputError("duplicate ramsey entry for point " + std::to_string(id));
    }
    if (c.ramsey.empty()) throw InputError("ramsey flag set but no map lines follow");
  } else {
    while (li < lines.size() && tokens_of(lines[li]).empty()) li++;
    if (li != lines.size()) throw InputError("unexpected extra line '" + lines[li] + "'");
  }
  return c;
}

std::string format_cover(const TreeCover& c) {
  std::string out = fmt_weight(c.gamma) + " " + std::to_string(c.zeta());
  if (!c.ramsey.empty()) out += " ramsey";
  out += "\n";
  for (const auto& t : c.trees) out += format_tree(t);
  if (!c.ramsey.empty()) {
    std::vector<std::pair<long long, int>> entries(c.ramsey.begin(), c.ramsey.end());
    std::sort(entries.begin(), entries.end());
    for (const auto& [id, ti] : entries)
      out += std::to_string(id) + " " + std::to_string(ti) + "\n";
  }
  return out;
}

void validate_cover(const TreeCover& c, const FiniteMetric& m, CoverCheck check) {
  if (c.trees.empty()) throw InputError("a cover needs at least one tree");
  if (c.gamma < 1) throw InputError("stretch must be at least 1");
  require_points_present(c, m);
  require_ramsey_total(c, m);
  if (!check.pairs || m.n > check.pair_limit) return;

  // One traversal per (tree, source point); only the running minimum per
  // pair is kept so memory stays at one n-by-n table.
  std::vector<Weight> best((size_t)m.n * m.n, -1);
  for (int ti = 0; ti < c.zeta(); ti++) {
    const WeightedTree& t = c.trees[ti];
    for (int i = 0; i < m.n; i++) {
      auto dist = distances_from(t, t.idx(m.pid[i]));
      for (int j = 0; j < m.n; j++) {
        if (j == i) continue;
        Weight w = dist[t.idx(m.pid[j])];
        Weight dx = m.at(i, j);
        if (w < dx * (1 - kRelTol))
          throw PropertyError("tree " + std::to_string(ti) +
                              " does not dominate the metric at " +
                              pair_name(m.pid[i], m.pid[j]) + ": " + fmt_weight(w) + " < " +
                              fmt_weight(dx));
        Weight& b = best[(size_t)i * m.n + j];
        if (b < 0 || w < b) b = w;
      }
    }
  }
  for (int i = 0; i < m.n; i++)
    for (int j = i + 1; j < m.n; j++) {
      Weight dx = m.at(i, j);
      if (best[(size_t)i * m.n + j] > c.gamma * dx * (1 + kRelTol))
        throw PropertyError("no tree covers " + pair_name(m.pid[i], m.pid[j]) +
                            " within the declared stretch: best " +
                            fmt_weight(best[(size_t)i * m.n + j]) + " > " + fmt_weight(c.gamma) +
                            " * " + fmt_weight(dx));
    }
  if (!c.ramsey.empty()) {
    for (int i = 0; i < m.n; i++) {
      const WeightedTree& t = c.trees[c.ramsey.at(m.pid[i])];
      auto dist = distances_from(t, t.idx(m.pid[i]));
      for (int j = 0; j < m.n; j++) {
        if (j == i) continue;
        if (dist[t.idx(m.pid[j])] > c.gamma * m.at(i, j) * (1 + kRelTol))
          throw PropertyError("ramsey tree of point " + std::to_string(m.pid[i]) +
                              " misses the stretch at " + pair_name(m.pid[i], m.pid[j]));
      }
    }
  }
}

TreeCover load_cover(const std::string& text, const FiniteMetric& m, CoverCheck check) {
  TreeCover c = parse_cover(text);
  validate_cover(c, m, check);
  return c;
}

long long MetricNavigator::total_edges() const {
  long long total = 0;
  for (const auto& s : spanners) total += (long long)s.edges.size();
  return total;
}

MetricNavigator build_navigator(const FiniteMetric& m, const TreeCover& c, int k) {
  if (k < 2) throw InputError("hop budget must be at least 2");
  if (c.trees.empty()) throw InputError("a cover needs at least one tree");
  require_points_present(c, m);
  require_ramsey_total(c, m);

  MetricNavigator nav;
  nav.metric = m;
  nav.cover = c;
  nav.k = k;
  for (const auto& t : c.trees) {
    // Rebuild with the point set as the required set; everything else in the
    // tree becomes Steiner.
    std::vector<std::tuple<long long, long long, Weight>> edges;
    for (const auto& e : t.edges) edges.emplace_back(t.label[e.u], t.label[e.v], e.w);
    auto bound = make_tree(t.label, t.label[t.root], edges, m.pid);
    nav.spanners.push_back(build_spanner(bound, k));
  }
  return nav;
}

MetricPath metric_find_path(const MetricNavigator& nav, long long u, long long v,
                            bool include_steiner) {
  nav.metric.ix(u);
  nav.metric.ix(v);
  MetricPath out;
  if (u == v) {
    out.points = {u};
    out.tree = nav.cover.ramsey.empty() ? 0 : nav.cover.ramsey.at(u);
    return out;
  }

  auto candidate = [&](int ti) {
    const HopSpanner& s = nav.spanners[ti];
    MetricPath p;
    p.tree = ti;
    auto verts = find_path(s, s.tree.idx(u), s.tree.idx(v));
    p.hops = (int)verts.size() - 1;
    for (size_t i = 0; i + 1 < verts.size(); i++) {
      int e = s.edge_between(verts[i], verts[i + 1]);
      if (e < 0) throw InternalError("query path steps outside the spanner");
      p.weight += s.edges[e].w;
    }
    for (int x : verts) p.points.push_back(s.tree.label[x]);
    return p;
  };

  if (!nav.cover.ramsey.empty()) {
    out = candidate(nav.cover.ramsey.at(u));
  } else {
    bool have = false;
    for (int ti = 0; ti < (int)nav.spanners.size(); ti++) {
      auto p = candidate(ti);
      if (!have || p.weight < out.weight) {
        out = p;
        have = true;
      }
    }
  }
  if (!include_steiner) {
    std::vector<long long> kept;
    for (long long id : out.points)
      if (nav.metric.pix.count(id)) kept.push_back(id);
    out.points = std::move(kept);
  }
  return out;
}

}  // namespace hopnav
