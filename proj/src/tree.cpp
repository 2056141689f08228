#include "tree.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <set>
#include <tuple>
#include <utility>

#include "textio.hpp"

namespace hopnav {

namespace textio {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) i++;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') j++;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

long long parse_ll(const std::string& tok, const char* what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw InputError(std::string("bad ") + what + " '" + tok + "'");
  return v;
}

double parse_real(const std::string& tok, const char* what) {
  if (tok.empty()) throw InputError(std::string("empty ") + what);
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || errno == ERANGE || !std::isfinite(v))
    throw InputError(std::string("bad ") + what + " '" + tok + "'");
  return v;
}

Weight parse_weight(const std::string& tok) {
  double v = parse_real(tok, "edge weight");
  if (v <= 0) throw InputError("edge weight must be positive, got '" + tok + "'");
  return v;
}

std::string fmt_weight(Weight w) {
  if (w == std::floor(w) && std::abs(w) < 9.007199254740992e15)
    return std::to_string((long long)w);
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace textio

using namespace textio;

int WeightedTree::idx(long long lab) const {
  auto it = index.find(lab);
  if (it == index.end()) throw InputError("unknown vertex id " + std::to_string(lab));
  return it->second;
}

long long WeightedTree::required_count() const {
  long long c = 0;
  for (char r : required) c += r ? 1 : 0;
  return c;
}

void WeightedTree::finalize() {
  par.assign(n, -1);
  par_edge.assign(n, -1);
  par_w.assign(n, 0);
  hop_depth.assign(n, 0);
  wdepth.assign(n, 0);
  kids.assign(n, {});
  order.clear();
  order.reserve(n);

  std::vector<char> seen(n, 0);
  std::deque<int> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int e : adj[v]) {
      int w = other_end(e, v);
      if (seen[w]) continue;
      seen[w] = 1;
      par[w] = v;
      par_edge[w] = e;
      par_w[w] = edges[e].w;
      hop_depth[w] = hop_depth[v] + 1;
      wdepth[w] = wdepth[v] + edges[e].w;
      kids[v].push_back(w);
      queue.push_back(w);
    }
  }
  if ((int)order.size() != n) throw InputError("tree is disconnected");
}

WeightedTree make_tree(const std::vector<long long>& labels, long long root_label,
                       const std::vector<std::tuple<long long, long long, Weight>>& edge_list,
                       const std::vector<long long>& required_labels) {
  WeightedTree t;
  t.n = (int)labels.size();
  if (t.n < 1) throw InputError("tree must have at least one vertex");
  t.label = labels;
  for (int i = 0; i < t.n; i++) {
    if (!t.index.emplace(labels[i], i).second)
      throw InputError("duplicate vertex id " + std::to_string(labels[i]));
  }
  t.root = t.idx(root_label);
  if ((int)edge_list.size() != t.n - 1)
    throw InputError("expected " + std::to_string(t.n - 1) + " edges, got " +
                     std::to_string(edge_list.size()));
  t.adj.assign(t.n, {});
  std::set<std::pair<int, int>> pairs;
  for (auto& [ul, vl, w] : edge_list) {
    int u = t.idx(ul), v = t.idx(vl);
    if (u == v) throw InputError("self loop at vertex " + std::to_string(ul));
    if (w <= 0 || !std::isfinite(w)) throw InputError("edge weight must be positive");
    if (!pairs.emplace(std::min(u, v), std::max(u, v)).second)
      throw InputError("duplicate edge " + std::to_string(ul) + " " + std::to_string(vl));
    int id = (int)t.edges.size();
    t.edges.push_back({u, v, w});
    t.adj[u].push_back(id);
    t.adj[v].push_back(id);
  }
  if (required_labels.empty()) {
    t.required.assign(t.n, 1);
  } else {
    t.required.assign(t.n, 0);
    for (long long lab : required_labels) {
      int i = t.idx(lab);
      if (t.required[i]) throw InputError("vertex " + std::to_string(lab) + " listed twice in required set");
      t.required[i] = 1;
    }
  }
  t.finalize();
  return t;
}

WeightedTree parse_tree(const std::string& text) {
  auto lines = split_lines(text);
  size_t li = 0;
  auto next_line = [&]() -> std::vector<std::string> {
    while (li < lines.size()) {
      auto toks = tokens_of(lines[li]);
      li++;
      if (!toks.empty()) return toks;
    }
    throw InputError("unexpected end of tree file");
  };

  auto head = next_line();
  if (head.size() != 2) throw InputError("first line must be 'n root'");
  long long n = parse_ll(head[0], "vertex count");
  if (n < 1 || n > 10'000'000) throw InputError("vertex count out of range: " + std::to_string(n));
  long long root_label = parse_ll(head[1], "root id");

  std::vector<long long> labels;
  std::set<long long> label_set;
  auto add_label = [&](long long lab) {
    if (label_set.insert(lab).second) labels.push_back(lab);
  };
  std::vector<std::tuple<long long, long long, Weight>> edge_list;
  for (long long i = 0; i < n - 1; i++) {
    auto toks = next_line();
    if (toks.size() != 3) throw InputError("edge line must be 'u v w'");
    long long u = parse_ll(toks[0], "vertex id");
    long long v = parse_ll(toks[1], "vertex id");
    Weight w = parse_weight(toks[2]);
    add_label(u);
    add_label(v);
    edge_list.emplace_back(u, v, w);
  }
  if (n == 1) add_label(root_label);
  if ((long long)labels.size() != n)
    throw InputError("edges name " + std::to_string(labels.size()) + " vertices, expected " +
                     std::to_string(n));

  std::vector<long long> required_labels;
  while (li < lines.size()) {
    auto toks = tokens_of(lines[li]);
    li++;
    if (toks.empty()) continue;
    if (toks[0] != "R:") throw InputError("unexpected line after edges: '" + lines[li - 1] + "'");
    if (!required_labels.empty()) throw InputError("more than one required-set line");
    if (toks.size() == 1) throw InputError("required set must not be empty");
    for (size_t j = 1; j < toks.size(); j++) required_labels.push_back(parse_ll(toks[j], "required id"));
  }
  return make_tree(labels, root_label, edge_list, required_labels);
}

std::string format_tree(const WeightedTree& t) {
  std::string out = std::to_string(t.n) + " " + std::to_string(t.label[t.root]) + "\n";
  for (auto& e : t.edges)
    out += std::to_string(t.label[e.u]) + " " + std::to_string(t.label[e.v]) + " " + fmt_weight(e.w) + "\n";
  if (t.required_count() != t.n) {
    std::vector<long long> req;
    for (int i = 0; i < t.n; i++)
      if (t.required[i]) req.push_back(t.label[i]);
    std::sort(req.begin(), req.end());
    out += "R:";
    for (long long lab : req) out += " " + std::to_string(lab);
    out += "\n";
  }
  return out;
}

TreePath tree_distance(const WeightedTree& t, int u, int v) {
  if (u < 0 || u >= t.n || v < 0 || v >= t.n) throw InputError("vertex index out of range");
  std::vector<int> up{u}, down{v};
  Weight w = 0;
  int a = u, b = v;
  while (a != b) {
    if (t.hop_depth[a] >= t.hop_depth[b]) {
      w += t.par_w[a];
      a = t.par[a];
      up.push_back(a);
    } else {
      w += t.par_w[b];
      b = t.par[b];
      down.push_back(b);
    }
  }
  TreePath p;
  p.weight = w;
  p.verts = std::move(up);
  for (size_t i = down.size() - 1; i-- > 0;) p.verts.push_back(down[i]);
  return p;
}

namespace {

std::vector<int> preorder_of(const RootedView& view) {
  std::vector<int> order;
  order.reserve(view.m);
  std::vector<int> st{view.root};
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    order.push_back(v);
    for (int c : (*view.kids)[v]) st.push_back(c);
  }
  if ((int)order.size() != view.m) throw InternalError("rooted view does not span its vertex set");
  return order;
}

std::vector<long long> required_below(const RootedView& view, const std::vector<int>& order) {
  std::vector<long long> below(view.m, 0);
  for (size_t i = order.size(); i-- > 0;) {
    int v = order[i];
    below[v] += (*view.req)[v] ? 1 : 0;
    if ((*view.par)[v] >= 0) below[(*view.par)[v]] += below[v];
  }
  return below;
}

}  // namespace

PruneResult prune_core(const RootedView& view) {
  const auto& kids = *view.kids;
  const auto& req = *view.req;
  const auto& par_w = *view.par_w;
  auto order = preorder_of(view);
  auto below = required_below(view, order);
  long long total_req = below[view.root];
  if (total_req == 0) throw InputError("required set is empty");

  auto kept_child_count = [&](int v) {
    int c = 0;
    for (int k : kids[v])
      if (below[k] > 0) c++;
    return c;
  };
  auto only_kept_child = [&](int v) {
    for (int k : kids[v])
      if (below[k] > 0) return k;
    throw InternalError("no surviving child under pruned vertex");
  };

  int r = view.root;
  while (!req[r] && kept_child_count(r) == 1) r = only_kept_child(r);

  PruneResult res;
  std::vector<int> pos(view.m, -1);
  res.kept.push_back(r);
  res.par.push_back(-1);
  res.par_w.push_back(0);
  pos[r] = 0;
  std::deque<int> queue{r};
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int c : kids[s]) {
      if (below[c] == 0) continue;
      Weight w = par_w[c];
      int x = c;
      while (!req[x] && kept_child_count(x) < 2) {
        int nx = only_kept_child(x);
        w += par_w[nx];
        x = nx;
      }
      pos[x] = (int)res.kept.size();
      res.kept.push_back(x);
      res.par.push_back(pos[s]);
      res.par_w.push_back(w);
      queue.push_back(x);
    }
  }

  long long kept_req = 0;
  for (int v : res.kept) kept_req += req[v] ? 1 : 0;
  if (kept_req != total_req) throw InternalError("pruning dropped a required vertex");
  long long steiner = (long long)res.kept.size() - kept_req;
  if (steiner > std::max(0LL, total_req - 1)) throw InternalError("pruning kept too many optional vertices");
  return res;
}

std::vector<int> decompose_core(const RootedView& view, long long l,
                                const std::vector<long long>& tie_label) {
  if (l < 1) throw InputError("component budget must be at least 1");
  const auto& kids = *view.kids;
  const auto& req = *view.req;
  auto order = preorder_of(view);
  auto below = required_below(view, order);
  long long total = below[view.root];
  if (total <= l) return {};

  std::vector<int> cuts;
  if (2 * l >= total) {
    // One vertex suffices: the centroid of the required weights. Ties go to
    // the smaller label so repeated runs split identically.
    int best = -1;
    long long best_max = 0;
    for (int v : order) {
      long long mx = total - below[v];
      for (int c : kids[v]) mx = std::max(mx, below[c]);
      if (best < 0 || mx < best_max ||
          (mx == best_max && tie_label[v] < tie_label[best])) {
        best = v;
        best_max = mx;
      }
    }
    if (best_max > l) throw InternalError("required centroid exceeds component budget");
    cuts.push_back(best);
  } else {
    std::vector<long long> cnt(view.m, 0);
    for (size_t i = order.size(); i-- > 0;) {
      int v = order[i];
      cnt[v] += req[v] ? 1 : 0;
      if (cnt[v] > l) {
        cuts.push_back(v);
        cnt[v] = 0;
      }
      if ((*view.par)[v] >= 0) cnt[(*view.par)[v]] += cnt[v];
    }
  }
  if ((long long)cuts.size() > (long long)view.m / (l + 1))
    throw InternalError("decomposition produced too many cut vertices");
  std::sort(cuts.begin(), cuts.end(),
            [&](int a, int b) { return tie_label[a] < tie_label[b]; });
  return cuts;
}

namespace {

RootedView view_of(const WeightedTree& t) {
  RootedView v;
  v.m = t.n;
  v.root = t.root;
  v.par = &t.par;
  v.par_w = &t.par_w;
  v.kids = &t.kids;
  v.req = &t.required;
  return v;
}

}  // namespace

WeightedTree prune_tree(const WeightedTree& t) {
  auto pr = prune_core(view_of(t));
  std::vector<long long> labels;
  labels.reserve(pr.kept.size());
  for (int v : pr.kept) labels.push_back(t.label[v]);
  std::vector<std::tuple<long long, long long, Weight>> edge_list;
  for (size_t i = 1; i < pr.kept.size(); i++)
    edge_list.emplace_back(labels[i], labels[pr.par[i]], pr.par_w[i]);
  std::vector<long long> required_labels;
  for (int v : pr.kept)
    if (t.required[v]) required_labels.push_back(t.label[v]);
  if ((long long)required_labels.size() == (long long)labels.size()) required_labels.clear();
  return make_tree(labels, labels[0], edge_list, required_labels);
}

std::vector<int> decompose(const WeightedTree& t, long long l) {
  return decompose_core(view_of(t), l, t.label);
}

}  // namespace hopnav
