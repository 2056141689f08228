#include "metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "textio.hpp"

namespace hopnav {

using namespace textio;

namespace {

constexpr double kRelTol = 1e-12;

std::string pair_name(long long a, long long b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

void check_triple(const FiniteMetric& m, int i, int j, int k) {
  Weight lhs = m.at(i, k);
  Weight rhs = m.at(i, j) + m.at(j, k);
  if (lhs > rhs * (1 + kRelTol))
    throw InputError("triangle inequality fails: d" + pair_name(m.pid[i], m.pid[k]) + " > d" +
                     pair_name(m.pid[i], m.pid[j]) + " + d" + pair_name(m.pid[j], m.pid[k]));
}

void validate_metric(const FiniteMetric& m) {
  for (int i = 0; i < m.n; i++) {
    if (m.at(i, i) != 0)
      throw InputError("nonzero self-distance at point " + std::to_string(m.pid[i]));
    for (int j = i + 1; j < m.n; j++) {
      if (m.at(i, j) != m.at(j, i))
        throw InputError("asymmetric distances at " + pair_name(m.pid[i], m.pid[j]));
      if (!(m.at(i, j) > 0))
        throw InputError("distance must be positive at " + pair_name(m.pid[i], m.pid[j]));
      if (!std::isfinite(m.at(i, j)))
        throw InputError("distance must be finite at " + pair_name(m.pid[i], m.pid[j]));
    }
  }
  if (m.n <= kExhaustiveMetricCheck) {
    for (int i = 0; i < m.n; i++)
      for (int j = 0; j < m.n; j++)
        for (int k = 0; k < m.n; k++) check_triple(m, i, j, k);
  } else {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return s;
    };
    for (long long t = 0; t < (long long)m.n * 1024; t++) {
      int i = (int)(next() % m.n), j = (int)(next() % m.n), k = (int)(next() % m.n);
      check_triple(m, i, j, k);
    }
  }
}

void index_ids(FiniteMetric& m) {
  for (int i = 0; i < m.n; i++) {
    if (!m.pix.emplace(m.pid[i], i).second)
      throw InputError("duplicate point id " + std::to_string(m.pid[i]));
  }
}

}  // namespace

int FiniteMetric::ix(long long id) const {
  auto it = pix.find(id);
  if (it == pix.end()) throw InputError("unknown point id " + std::to_string(id));
  return it->second;
}

FiniteMetric metric_from_matrix(std::vector<long long> ids, std::vector<Weight> entries) {
  FiniteMetric m;
  m.n = (int)ids.size();
  if (m.n < 1) throw InputError("a metric needs at least one point");
  if (entries.size() != (size_t)m.n * m.n)
    throw InputError("distance matrix must have n*n entries");
  m.pid = std::move(ids);
  m.d = std::move(entries);
  index_ids(m);
  validate_metric(m);
  return m;
}

FiniteMetric metric_from_points(const std::vector<std::vector<double>>& pts) {
  FiniteMetric m;
  m.n = (int)pts.size();
  if (m.n < 1) throw InputError("a metric needs at least one point");
  size_t dim = pts[0].size();
  if (dim == 0) throw InputError("points need at least one coordinate");
  for (const auto& p : pts)
    if (p.size() != dim) throw InputError("points must share one dimension");
  m.d.assign((size_t)m.n * m.n, 0);
  for (int i = 0; i < m.n; i++) {
    m.pid.push_back(i);
    for (int j = i + 1; j < m.n; j++) {
      double acc = 0;
      for (size_t c = 0; c < dim; c++) {
        double diff = pts[i][c] - pts[j][c];
        acc += diff * diff;
      }
      Weight w = std::sqrt(acc);
      if (w == 0) throw InputError("coincident points " + pair_name(i, j));
      m.d[(size_t)i * m.n + j] = m.d[(size_t)j * m.n + i] = w;
    }
  }
  index_ids(m);
  return m;
}

FiniteMetric tree_metric(const WeightedTree& t) {
  FiniteMetric m;
  for (int v = 0; v < t.n; v++)
    if (t.required[v]) m.pid.push_back(t.label[v]);
  std::sort(m.pid.begin(), m.pid.end());
  m.n = (int)m.pid.size();
  if (m.n < 1) throw InputError("tree has no required vertices");
  m.d.assign((size_t)m.n * m.n, 0);
  index_ids(m);
  // One traversal per point; wdepth differences only work within a root path,
  // so walk distances explicitly.
  std::vector<Weight> dist(t.n);
  std::vector<int> stack;
  for (int i = 0; i < m.n; i++) {
    int src = t.idx(m.pid[i]);
    dist.assign(t.n, -1);
    dist[src] = 0;
    stack.assign(1, src);
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
    for (int j = 0; j < m.n; j++) m.d[(size_t)i * m.n + j] = dist[t.idx(m.pid[j])];
  }
  return m;
}

FiniteMetric parse_metric(const std::string& text) {
  auto lines = split_lines(text);
  size_t li = 0;
  while (li < lines.size() && tokens_of(lines[li]).empty()) li++;
  if (li == lines.size()) throw InputError("empty metric file");
  auto head = tokens_of(lines[li++]);
  auto row_at = [&](const char* what) {
    while (li < lines.size() && tokens_of(lines[li]).empty()) li++;
    if (li == lines.size()) throw InputError(std::string("missing ") + what);
    return tokens_of(lines[li++]);
  };
  auto expect_end = [&] {
    while (li < lines.size() && tokens_of(lines[li]).empty()) li++;
    if (li != lines.size()) throw InputError("unexpected extra line '" + lines[li] + "'");
  };

  if (head.size() == 2 && head[0] == "matrix") {
    long long n = parse_ll(head[1], "point count");
    if (n < 1) throw InputError("point count must be positive");
    std::vector<long long> ids;
    std::vector<Weight> entries;
    for (long long i = 0; i < n; i++) {
      ids.push_back(i);
      auto toks = row_at("matrix row");
      if ((long long)toks.size() != n)
        throw InputError("matrix row " + std::to_string(i) + " must have " + std::to_string(n) +
                         " entries");
      for (const auto& tok : toks) {
        double v = parse_real(tok, "distance");
        if (v < 0) throw InputError("distance must be non-negative, got '" + tok + "'");
        entries.push_back(v);
      }
    }
    expect_end();
    return metric_from_matrix(std::move(ids), std::move(entries));
  }
  if (head.size() == 3 && head[0] == "points") {
    long long n = parse_ll(head[1], "point count");
    long long dim = parse_ll(head[2], "dimension");
    if (n < 1) throw InputError("point count must be positive");
    if (dim < 1) throw InputError("dimension must be positive");
    std::vector<std::vector<double>> pts;
    for (long long i = 0; i < n; i++) {
      auto toks = row_at("coordinate row");
      if ((long long)toks.size() != dim)
        throw InputError("coordinate row " + std::to_string(i) + " must have " +
                         std::to_string(dim) + " entries");
      std::vector<double> p;
      for (const auto& tok : toks) p.push_back(parse_real(tok, "coordinate"));
      pts.push_back(std::move(p));
    }
    expect_end();
    return metric_from_points(pts);
  }
  throw InputError("metric header must be 'matrix n' or 'points n dim'");
}

std::string format_metric(const FiniteMetric& m) {
  std::string out = "matrix " + std::to_string(m.n) + "\n";
  for (int i = 0; i < m.n; i++) {
    for (int j = 0; j < m.n; j++) {
      if (j) out += " ";
      out += fmt_weight(m.at(i, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace hopnav
