// hopnav: generate instances, build k-hop tree spanners, query paths, and
// drive the routing / SPT / MST / sparsification / verification apps. Links
// the shared C API only; exit codes are 0 ok, 2 input error, 3 property
// violation, 4 internal error.
#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hopnav.h"

namespace {

[[noreturn]] void fail(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

void ok(hn_status st) {
  if (st != HN_OK) fail((int)st, hn_last_error());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(2, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(2, "cannot write '" + path + "'");
  out << text;
}

std::string fmt_w(double w) {
  double r = std::round(w);
  if (r == w && std::fabs(w) < 9e15) return std::to_string((long long)r);
  char b[40];
  auto res = std::to_chars(b, b + sizeof b, w);
  return std::string(b, res.ptr);
}

// Two-phase fetch for the size-query text functions.
template <typename F>
std::string fetch_text(F&& fill) {
  size_t need = 0;
  ok(fill(nullptr, 0, &need));
  std::vector<char> buf(need);
  ok(fill(buf.data(), buf.size(), &need));
  return std::string(buf.data());
}

struct Out {
  std::ofstream file;
  std::ostream* os = &std::cout;
  explicit Out(const std::string& path) {
    if (path.empty()) return;
    file.open(path, std::ios::binary);
    if (!file) fail(2, "cannot write '" + path + "'");
    os = &file;
  }
  std::ostream& operator*() { return *os; }
};

std::vector<long long> number_file(const std::string& path, const char* what) {
  std::string text = slurp(path);
  std::vector<long long> out;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(2, std::string(what) + ": bad token '" + tok + "' in " + path);
    }
  }
  return out;
}

hn_tree* tree_from_file(const std::string& path) {
  hn_tree* t = nullptr;
  ok(hn_tree_parse(slurp(path).c_str(), &t));
  return t;
}

// Shared input resolution for the metric apps: a tree implies its tree
// metric and single-tree cover, a metric alone implies its star cover, and
// an explicit cover file is validated against whichever metric resulted.
struct MetricInput {
  std::string tree_file, metric_file, cover_file;
  hn_metric* metric = nullptr;
  hn_cover* cover = nullptr;

  void open() {
    hn_tree* t = nullptr;
    if (!tree_file.empty() && !metric_file.empty())
      fail(2, "--tree and --metric are mutually exclusive");
    if (!tree_file.empty()) {
      t = tree_from_file(tree_file);
      ok(hn_metric_from_tree(t, &metric));
    } else if (!metric_file.empty()) {
      ok(hn_metric_parse(slurp(metric_file).c_str(), &metric));
    } else {
      fail(2, "one of --tree or --metric is required");
    }
    if (!cover_file.empty()) {
      ok(hn_cover_load(slurp(cover_file).c_str(), metric, &cover));
    } else if (t) {
      ok(hn_cover_single_tree(t, &cover));
    } else {
      ok(hn_cover_star(metric, &cover));
    }
    if (t) hn_tree_free(t);
  }

  void close() {
    hn_cover_free(cover);
    hn_metric_free(metric);
  }

  void add_options(CLI::App* cmd) {
    cmd->add_option("--tree", tree_file, "tree file (implies tree metric)");
    cmd->add_option("--metric", metric_file, "metric file");
    cmd->add_option("--cover", cover_file, "cover file (default: single tree or star)");
  }
};

bool close_enough(double a, double b, bool relaxed) {
  if (!relaxed) return a == b;
  return std::fabs(a - b) <= 1e-12 * std::max({std::fabs(a), std::fabs(b), 1.0});
}

void max_weight_op(void*, const void* a, const void* b, void* out) {
  double x, y;
  std::memcpy(&x, a, sizeof x);
  std::memcpy(&y, b, sizeof y);
  double r = x > y ? x : y;
  std::memcpy(out, &r, sizeof r);
}

struct BenchRow {
  long long n = 0;
  int k = 0;
  int64_t edges = 0;
  uint64_t alpha_prime = 0;
  double lower_bound = -1;  // negative when undefined for this k
  double ratio = 0;
  double wall_s = 0;
};

BenchRow bench_cell(long long n, int k, uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  std::string text = fetch_text([&](char* b, size_t c, size_t* nd) {
    return hn_gen_instance("uniform-line", n, seed, 1, 2, 0, b, c, nd);
  });
  hn_tree* t = nullptr;
  ok(hn_tree_parse(text.c_str(), &t));
  hn_spanner* s = nullptr;
  ok(hn_spanner_build(t, k, &s));

  BenchRow r;
  r.n = n;
  r.k = k;
  ok(hn_spanner_edge_count(s, &r.edges));
  ok(hn_alpha_prime(k, (uint64_t)n, &r.alpha_prime));
  if (k == 2 || k == 3) ok(hn_eval_lower_bound(n, k, &r.lower_bound));
  r.ratio = (double)r.edges / ((double)n * std::max<double>(1, (double)r.alpha_prime));
  r.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  hn_spanner_free(s);
  hn_tree_free(t);
  return r;
}

const char* kBenchHeader = "n,k,edges,alpha_prime,eval_lower_bound,ratio,wall_s\n";

void emit_bench_row(std::ostream& os, const BenchRow& r) {
  os << r.n << "," << r.k << "," << r.edges << "," << r.alpha_prime << ",";
  if (r.lower_bound >= 0) os << fmt_w(r.lower_bound);
  os << "," << r.ratio << "," << r.wall_s << "\n";
}

int cmd_alpha(int k, long long n, const std::string& out, const std::string& format) {
  uint64_t a = 0, ap = 0;
  ok(hn_alpha(k, (uint64_t)n, &a));
  ok(hn_alpha_prime(k, (uint64_t)n, &ap));
  Out o(out);
  if (format == "csv") {
    *o << "k,n,alpha,alpha_prime\n" << k << "," << n << "," << a << "," << ap << "\n";
  } else {
    *o << "alpha_" << k << "(" << n << ") = " << a << "\n";
    *o << "alpha_prime_" << k << "(" << n << ") = " << ap << "\n";
  }
  return 0;
}

int cmd_gen(const std::string& kind, long long n, uint64_t seed, long long max_w, int dim,
            bool float_weights, const std::string& out) {
  std::string text = fetch_text([&](char* b, size_t c, size_t* nd) {
    return hn_gen_instance(kind.c_str(), n, seed, max_w, dim, float_weights ? 1 : 0, b, c, nd);
  });
  Out o(out);
  *o << text;
  return 0;
}

int cmd_build(const std::string& tree_file, int k, const std::string& out,
              const std::string& stats, const std::string& out_dir, uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  hn_tree* t = tree_from_file(tree_file);
  hn_spanner* s = nullptr;
  ok(hn_spanner_build(t, k, &s));
  std::string text = fetch_text(
      [&](char* b, size_t c, size_t* nd) { return hn_spanner_format(s, b, c, nd); });

  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) fail(2, "cannot create '" + out_dir + "': " + ec.message());
    spill(out_dir + "/meta.txt", "k " + std::to_string(k) + "\n");
    spill(out_dir + "/tree.txt",
          fetch_text([&](char* b, size_t c, size_t* nd) { return hn_tree_format(t, b, c, nd); }));
    spill(out_dir + "/spanner.txt", text);
  } else {
    Out o(out);
    *o << text;
  }

  if (!stats.empty()) {
    int64_t n = 0;
    ok(hn_tree_size(t, &n));
    BenchRow r;
    r.n = n;
    r.k = k;
    ok(hn_spanner_edge_count(s, &r.edges));
    ok(hn_alpha_prime(k, (uint64_t)n, &r.alpha_prime));
    if (k == 2 || k == 3) ok(hn_eval_lower_bound(n, k, &r.lower_bound));
    r.ratio = (double)r.edges / ((double)n * std::max<double>(1, (double)r.alpha_prime));
    r.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream ss;
    ss << kBenchHeader;
    emit_bench_row(ss, r);
    spill(stats, ss.str());
  }
  (void)seed;
  hn_spanner_free(s);
  hn_tree_free(t);
  return 0;
}

int cmd_query(const std::string& dir, long long u, long long v, bool count_ops,
              const std::string& out, const std::string& format) {
  std::string meta = slurp(dir + "/meta.txt");
  std::istringstream ms(meta);
  std::string key;
  int k = 0;
  if (!(ms >> key >> k) || key != "k") fail(2, "malformed meta.txt in '" + dir + "'");
  hn_tree* t = nullptr;
  ok(hn_tree_parse(slurp(dir + "/tree.txt").c_str(), &t));
  hn_spanner* s = nullptr;
  ok(hn_spanner_build(t, k, &s));

  size_t need = 0;
  double w = 0;
  int hops = 0, depth = 0;
  ok(hn_spanner_path(s, u, v, nullptr, 0, &need, &w, &hops, &depth));
  std::vector<int64_t> verts(need);
  ok(hn_spanner_path(s, u, v, verts.data(), verts.size(), &need, &w, &hops, &depth));

  std::string path;
  for (size_t i = 0; i < verts.size(); i++) path += (i ? " " : "") + std::to_string(verts[i]);

  Out o(out);
  if (format == "csv") {
    *o << "u,v,hops,weight,nav_depth,path\n";
    *o << u << "," << v << "," << hops << "," << fmt_w(w) << "," << depth << "," << path << "\n";
  } else {
    *o << "path: " << path << "\n";
    *o << "hops: " << hops << "\n";
    *o << "weight: " << fmt_w(w) << "\n";
    if (count_ops) *o << "nav_depth: " << depth << "\n";
  }
  hn_spanner_free(s);
  hn_tree_free(t);
  return 0;
}

// Routes every pair and audits delivery, exactness, and table sizes; any
// violated promise turns into exit code 3 after the report is emitted.
int cmd_route(const std::string& tree_file, const std::string& metric_file,
              const std::string& cover_file, const std::string& pairs_file, uint64_t seed,
              bool relaxed, const std::string& out, const std::string& format) {
  auto nums = number_file(pairs_file, "pairs");
  if (nums.size() % 2) fail(2, "pairs file must hold an even token count");
  Out o(out);
  bool csv = format == "csv";
  std::vector<std::string> violations;

  auto emit_pair = [&](long long a, long long b, const hn_route_info& info,
                       const std::vector<int64_t>& trace, const char* reason) {
    std::string tr;
    for (size_t i = 0; i < trace.size(); i++) tr += (i ? " " : "") + std::to_string(trace[i]);
    if (csv) {
      *o << a << "," << b << "," << info.delivered << "," << info.hops << ","
         << fmt_w(info.weight) << "," << tr << "\n";
    } else if (info.delivered) {
      *o << "pair " << a << " " << b << ": hops " << info.hops << " weight "
         << fmt_w(info.weight) << " via " << tr << "\n";
    } else {
      *o << "pair " << a << " " << b << ": dropped (" << reason << ")\n";
    }
  };

  if (!tree_file.empty()) {
    if (!metric_file.empty() || !cover_file.empty())
      fail(2, "--tree routing takes no --metric/--cover");
    hn_tree* t = tree_from_file(tree_file);
    hn_routing* r = nullptr;
    ok(hn_routing_build(t, seed, &r));
    if (csv) *o << "a,b,delivered,hops,weight,trace\n";
    for (size_t i = 0; i + 1 < nums.size(); i += 2) {
      long long a = nums[i], b = nums[i + 1];
      hn_route_info info;
      size_t need = 0;
      char reason[128] = {0};
      ok(hn_route(r, a, b, &info, nullptr, 0, &need, reason, sizeof reason));
      std::vector<int64_t> trace(need);
      ok(hn_route(r, a, b, &info, trace.data(), trace.size(), &need, nullptr, 0));
      emit_pair(a, b, info, trace, reason);
      double want = 0;
      ok(hn_tree_distance(t, a, b, &want));
      if (!info.delivered)
        violations.push_back("pair " + std::to_string(a) + " " + std::to_string(b) + " dropped");
      else if (info.hops > 2 || !close_enough(info.weight, want, relaxed))
        violations.push_back("pair " + std::to_string(a) + " " + std::to_string(b) +
                             " routed inexactly");
    }
    int64_t n = 0, entries = 0, bits = 0;
    ok(hn_tree_size(t, &n));
    ok(hn_routing_audit(r, &entries, &bits));
    long long cap = (long long)std::ceil(std::log2((double)std::max<int64_t>(n, 2))) + 2;
    *o << "n,pairs,max_entries,entry_cap,max_bits\n";
    *o << n << "," << nums.size() / 2 << "," << entries << "," << cap << "," << bits << "\n";
    if (entries > cap) violations.push_back("table entries exceed the cap");
    hn_routing_free(r);
    hn_tree_free(t);
  } else {
    if (metric_file.empty()) fail(2, "route needs --tree or --metric");
    hn_metric* m = nullptr;
    ok(hn_metric_parse(slurp(metric_file).c_str(), &m));
    hn_cover* c = nullptr;
    if (cover_file.empty())
      ok(hn_cover_star(m, &c));
    else
      ok(hn_cover_load(slurp(cover_file).c_str(), m, &c));
    hn_cover_routing* cr = nullptr;
    ok(hn_cover_routing_build(m, c, seed, &cr));
    double gamma = 0;
    int zeta = 0;
    ok(hn_cover_shape(c, &gamma, &zeta));
    if (csv) *o << "a,b,delivered,hops,weight,trace\n";
    double worst = 1;
    for (size_t i = 0; i + 1 < nums.size(); i += 2) {
      long long a = nums[i], b = nums[i + 1];
      hn_route_info info;
      size_t need = 0;
      char reason[128] = {0};
      ok(hn_cover_route(cr, a, b, &info, nullptr, 0, &need, reason, sizeof reason));
      std::vector<int64_t> trace(need);
      ok(hn_cover_route(cr, a, b, &info, trace.data(), trace.size(), &need, nullptr, 0));
      emit_pair(a, b, info, trace, reason);
      double d = 0;
      ok(hn_metric_distance(m, a, b, &d));
      if (!info.delivered) {
        violations.push_back("pair " + std::to_string(a) + " " + std::to_string(b) + " dropped");
        continue;
      }
      double stretch = d > 0 ? info.weight / d : 1;
      worst = std::max(worst, stretch);
      if (info.hops > 2 || info.weight < d * (1 - 1e-12) || stretch > gamma * (1 + 1e-12))
        violations.push_back("pair " + std::to_string(a) + " " + std::to_string(b) +
                             " outside the declared stretch");
    }
    int64_t n = 0;
    ok(hn_metric_size(m, &n));
    *o << "n,pairs,trees,gamma,max_stretch\n";
    *o << n << "," << nums.size() / 2 << "," << zeta << "," << fmt_w(gamma) << "," << worst
       << "\n";
    hn_cover_routing_free(cr);
    hn_cover_free(c);
    hn_metric_free(m);
  }

  for (const auto& v : violations) std::cerr << "route: " << v << "\n";
  return violations.empty() ? 0 : 3;
}

int cmd_spt(MetricInput& in, int k, long long root, const std::string& out,
            const std::string& format) {
  in.open();
  hn_navigator* nav = nullptr;
  ok(hn_navigator_build(in.metric, in.cover, k, &nav));

  size_t need = 0;
  ok(hn_spt(nav, root, nullptr, nullptr, nullptr, 0, &need));
  std::vector<int64_t> ids(need), parents(need);
  std::vector<double> dists(need);
  ok(hn_spt(nav, root, ids.data(), parents.data(), dists.data(), need, &need));

  int64_t n = 0;
  ok(hn_metric_size(in.metric, &n));
  std::vector<int64_t> pids(n);
  for (int64_t i = 0; i < n; i++) ok(hn_metric_point(in.metric, i, &pids[i]));

  // dist[v] - dist[parent] is exactly the parent edge weight, so the tree
  // weight is the sum of those differences over the non-roots.
  double weight = 0, max_stretch = 1;
  long long points = 0;
  std::vector<std::pair<int64_t, double>> by_id(need);
  for (size_t i = 0; i < need; i++) by_id[i] = {ids[i], dists[i]};
  std::sort(by_id.begin(), by_id.end());
  auto dist_at = [&](int64_t id) {
    auto it = std::lower_bound(by_id.begin(), by_id.end(), std::make_pair(id, -1.0));
    return it->second;
  };
  for (size_t i = 0; i < need; i++)
    if (ids[i] != parents[i]) weight += dists[i] - dist_at(parents[i]);
  for (long long pid : pids) {
    if (pid == root) continue;
    double d = 0;
    ok(hn_metric_distance(in.metric, root, pid, &d));
    if (d > 0) {
      points++;
      max_stretch = std::max(max_stretch, dist_at(pid) / d);
    }
  }

  Out o(out);
  bool csv = format == "csv";
  if (csv) *o << "vertex,parent,dist\n";
  for (size_t i = 0; i < need; i++) {
    if (csv)
      *o << ids[i] << "," << parents[i] << "," << fmt_w(dists[i]) << "\n";
    else
      *o << ids[i] << " " << parents[i] << " " << fmt_w(dists[i]) << "\n";
  }
  *o << "root,reached,points,weight,max_stretch\n";
  *o << root << "," << need << "," << points + 1 << "," << fmt_w(weight) << "," << max_stretch
     << "\n";

  hn_navigator_free(nav);
  in.close();
  return 0;
}

int cmd_mst(MetricInput& in, int k, const std::string& out, const std::string& format) {
  in.open();
  hn_navigator* nav = nullptr;
  ok(hn_navigator_build(in.metric, in.cover, k, &nav));

  size_t need = 0;
  double weight = 0, base = 0;
  int64_t union_edges = 0;
  ok(hn_mst(nav, nullptr, nullptr, nullptr, 0, &need, &weight, &base, &union_edges));
  std::vector<int64_t> ea(need), eb(need);
  std::vector<double> ew(need);
  ok(hn_mst(nav, ea.data(), eb.data(), ew.data(), need, &need, nullptr, nullptr, nullptr));

  int64_t n = 0;
  ok(hn_metric_size(in.metric, &n));
  Out o(out);
  bool csv = format == "csv";
  if (csv) *o << "a,b,weight\n";
  for (size_t i = 0; i < need; i++)
    *o << ea[i] << (csv ? "," : " ") << eb[i] << (csv ? "," : " ") << fmt_w(ew[i]) << "\n";
  *o << "n,edges,weight,base_weight,union_edges,ratio\n";
  *o << n << "," << need << "," << fmt_w(weight) << "," << fmt_w(base) << "," << union_edges
     << "," << (base > 0 ? weight / base : 1) << "\n";

  hn_navigator_free(nav);
  in.close();
  return 0;
}

int cmd_sparsify(MetricInput& in, int k, const std::string& graph_file, double beta,
                 const std::string& out, const std::string& format) {
  in.open();
  hn_navigator* nav = nullptr;
  ok(hn_navigator_build(in.metric, in.cover, k, &nav));

  std::vector<int64_t> ga, gb;
  if (!graph_file.empty()) {
    auto nums = number_file(graph_file, "graph");
    if (nums.size() % 2) fail(2, "graph file must hold an even token count");
    for (size_t i = 0; i + 1 < nums.size(); i += 2) {
      ga.push_back(nums[i]);
      gb.push_back(nums[i + 1]);
    }
  } else {
    size_t gneed = 0;
    ok(hn_greedy_spanner(in.metric, beta, nullptr, nullptr, 0, &gneed));
    ga.resize(gneed);
    gb.resize(gneed);
    ok(hn_greedy_spanner(in.metric, beta, ga.data(), gb.data(), gneed, &gneed));
  }

  size_t need = 0;
  double weight = 0, input_weight = 0;
  ok(hn_sparsify(nav, ga.data(), gb.data(), ga.size(), nullptr, nullptr, nullptr, 0, &need,
                 &weight, &input_weight));
  std::vector<int64_t> ea(need), eb(need);
  std::vector<double> ew(need);
  ok(hn_sparsify(nav, ga.data(), gb.data(), ga.size(), ea.data(), eb.data(), ew.data(), need,
                 &need, nullptr, nullptr));

  Out o(out);
  bool csv = format == "csv";
  if (csv) *o << "a,b,weight\n";
  for (size_t i = 0; i < need; i++)
    *o << ea[i] << (csv ? "," : " ") << eb[i] << (csv ? "," : " ") << fmt_w(ew[i]) << "\n";
  *o << "input_edges,input_weight,edges,weight\n";
  *o << ga.size() << "," << fmt_w(input_weight) << "," << need << "," << fmt_w(weight) << "\n";

  hn_navigator_free(nav);
  in.close();
  return 0;
}

int cmd_verify_mst(const std::string& tree_file, int k, const std::string& queries_file,
                   bool optimized, const std::string& out, const std::string& format) {
  hn_tree* t = tree_from_file(tree_file);
  hn_verifier* v = nullptr;
  ok(hn_verifier_build(t, k, &v));

  std::string text = slurp(queries_file);
  std::istringstream ss(text);
  Out o(out);
  bool csv = format == "csv";
  if (csv) *o << "u,v,weight,heavier,comparisons\n";
  long long queries = 0, worst = 0;
  long long cap = (optimized && k % 2 == 0) ? k - 1 : k;
  long long a, b;
  double w;
  while (ss >> a >> b >> w) {
    int heavier = 0;
    int64_t cmp = 0;
    ok(hn_verify_edge(v, a, b, w, optimized ? 1 : 0, &heavier, &cmp));
    queries++;
    worst = std::max(worst, (long long)cmp);
    if (csv)
      *o << a << "," << b << "," << fmt_w(w) << "," << heavier << "," << cmp << "\n";
    else
      *o << a << " " << b << " " << fmt_w(w) << (heavier ? " heavier" : " not-heavier") << " "
         << cmp << "\n";
  }
  if (!ss.eof()) fail(2, "queries file must hold 'u v w' triples");
  *o << "queries,max_comparisons,cap\n";
  *o << queries << "," << worst << "," << cap << "\n";

  hn_verifier_free(v);
  hn_tree_free(t);
  if (worst > cap) {
    std::cerr << "verify-mst: " << worst << " comparisons exceed the cap " << cap << "\n";
    return 3;
  }
  return 0;
}

int cmd_product(const std::string& tree_file, int k, long long u, long long v,
                const std::string& vals_file, const std::string& out,
                const std::string& format) {
  std::string tree_text = slurp(tree_file);
  hn_tree* t = nullptr;
  ok(hn_tree_parse(tree_text.c_str(), &t));
  int64_t n = 0;
  ok(hn_tree_size(t, &n));

  // Per-edge values in tree-file edge order; the default is the edge weight
  // in both directions, read off the file's own edge lines.
  std::vector<double> fwd, bwd;
  if (!vals_file.empty()) {
    std::istringstream ss(slurp(vals_file));
    double x, y;
    while (ss >> x >> y) {
      fwd.push_back(x);
      bwd.push_back(y);
    }
    if (!ss.eof()) fail(2, "values file must hold 'fwd bwd' pairs");
  } else {
    std::istringstream ss(tree_text);
    std::string header;
    std::getline(ss, header);
    long long a, b;
    double w;
    while ((long long)fwd.size() < n - 1 && ss >> a >> b >> w) {
      fwd.push_back(w);
      bwd.push_back(w);
    }
  }
  if ((long long)fwd.size() != n - 1) fail(2, "expected one value pair per tree edge");

  hn_spanner* s = nullptr;
  ok(hn_spanner_build(t, k, &s));
  hn_annotation* ann = nullptr;
  ok(hn_annotation_build(s, fwd.data(), bwd.data(), sizeof(double), max_weight_op, nullptr,
                         &ann));
  double got = 0;
  int has = 0;
  int64_t ops = 0;
  ok(hn_annotation_query(ann, u, v, &got, &has, &ops));

  Out o(out);
  if (format == "csv") {
    *o << "u,v,has_value,value,ops\n";
    *o << u << "," << v << "," << has << "," << (has ? fmt_w(got) : std::string()) << "," << ops
       << "\n";
  } else {
    *o << "value: " << (has ? fmt_w(got) : "none") << "\n";
    *o << "ops: " << ops << "\n";
  }

  hn_annotation_free(ann);
  hn_spanner_free(s);
  hn_tree_free(t);
  return 0;
}

int cmd_bench(const std::vector<long long>& ns, const std::vector<int>& ks, uint64_t seed,
              const std::string& out) {
  Out o(out);
  *o << kBenchHeader;
  std::vector<std::string> violations;
  for (long long n : ns) {
    for (int k : ks) {
      BenchRow r = bench_cell(n, k, seed);
      emit_bench_row(*o, r);
      if (n >= 2 && r.edges < n - 1)
        violations.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             ": fewer edges than a spanning tree");
      if (r.lower_bound >= 0 && (double)r.edges < std::ceil(r.lower_bound))
        violations.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             ": edges below the lower bound");
      if (r.ratio > 4.0)
        violations.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             ": edges exceed 4 n alpha'_k(n)");
    }
  }
  for (const auto& v : violations) std::cerr << "bench: " << v << "\n";
  return violations.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-hop tree spanners with O(k)-hop path queries"};
  app.require_subcommand(1);
  app.fallthrough();

  uint64_t seed = 1;
  std::string out, format = "text";
  app.add_option("--seed", seed, "RNG seed for seeded subcommands");
  app.add_option("--out", out, "output file (default stdout)");
  app.add_option("--format", format, "text or csv")
      ->check(CLI::IsMember({"text", "csv"}));

  int rc = 0;

  auto* alpha = app.add_subcommand("alpha", "evaluate the inverse-Ackermann hierarchy");
  int a_k = 2;
  long long a_n = 0;
  alpha->add_option("--k", a_k, "hop budget")->required();
  alpha->add_option("--n", a_n, "argument")->required();
  alpha->callback([&] { rc = cmd_alpha(a_k, a_n, out, format); });

  auto* gen = app.add_subcommand("gen", "generate instance files");
  std::string g_kind;
  long long g_n = 0, g_maxw = 9;
  int g_dim = 2;
  bool g_float = false;
  gen->add_option("--kind", g_kind, "uniform-line, random-tree, random-points, random-matrix")
      ->required();
  gen->add_option("--n", g_n, "size")->required();
  gen->add_option("--max-w", g_maxw, "largest random edge weight");
  gen->add_option("--dim", g_dim, "point dimension");
  gen->add_flag("--float", g_float, "fractional weights/coordinates");
  gen->callback([&] { rc = cmd_gen(g_kind, g_n, seed, g_maxw, g_dim, g_float, out); });

  auto* build = app.add_subcommand("build", "build a k-hop spanner from a tree file");
  std::string b_tree, b_stats, b_dir;
  int b_k = 2;
  build->add_option("--tree", b_tree, "tree file")->required();
  build->add_option("--k", b_k, "hop budget")->required();
  build->add_option("--stats", b_stats, "write a one-row stats CSV here");
  build->add_option("--out-dir", b_dir, "write meta.txt/tree.txt/spanner.txt for query");
  build->callback([&] { rc = cmd_build(b_tree, b_k, out, b_stats, b_dir, seed); });

  auto* query = app.add_subcommand("query", "query a path in a built spanner directory");
  std::string q_dir;
  long long q_u = 0, q_v = 0;
  bool q_ops = false;
  query->add_option("--spanner-dir", q_dir, "directory from build --out-dir")->required();
  query->add_option("--u", q_u, "source vertex")->required();
  query->add_option("--v", q_v, "target vertex")->required();
  query->add_flag("--count-ops", q_ops, "report navigation counters");
  query->callback([&] { rc = cmd_query(q_dir, q_u, q_v, q_ops, out, format); });

  auto* route = app.add_subcommand("route", "route labeled packets over 2-hop tables");
  std::string r_tree, r_metric, r_cover, r_pairs;
  bool r_float = false;
  route->add_option("--tree", r_tree, "tree file (tree routing)");
  route->add_option("--metric", r_metric, "metric file (cover routing)");
  route->add_option("--cover", r_cover, "cover file (cover routing)");
  route->add_option("--pairs", r_pairs, "file of 'a b' pairs")->required();
  route->add_flag("--float", r_float, "compare weights at 1e-12 relative tolerance");
  route->callback(
      [&] { rc = cmd_route(r_tree, r_metric, r_cover, r_pairs, seed, r_float, out, format); });

  auto* spt = app.add_subcommand("spt", "approximate shortest-path tree over a cover");
  MetricInput spt_in;
  int spt_k = 2;
  long long spt_root = 0;
  spt_in.add_options(spt);
  spt->add_option("--k", spt_k, "hop budget");
  spt->add_option("--root", spt_root, "root point")->required();
  spt->callback([&] { rc = cmd_spt(spt_in, spt_k, spt_root, out, format); });

  auto* mst = app.add_subcommand("mst", "approximate minimum spanning tree over a cover");
  MetricInput mst_in;
  int mst_k = 2;
  mst_in.add_options(mst);
  mst->add_option("--k", mst_k, "hop budget");
  mst->callback([&] { rc = cmd_mst(mst_in, mst_k, out, format); });

  auto* sp = app.add_subcommand("sparsify", "sparsify a graph through oracle paths");
  MetricInput sp_in;
  int sp_k = 2;
  std::string sp_graph;
  double sp_beta = 3.0;
  sp_in.add_options(sp);
  sp->add_option("--k", sp_k, "hop budget");
  sp->add_option("--graph", sp_graph, "file of 'a b' edges");
  sp->add_option("--beta", sp_beta, "greedy spanner stretch when no --graph is given");
  sp->callback([&] { rc = cmd_sparsify(sp_in, sp_k, sp_graph, sp_beta, out, format); });

  auto* vm = app.add_subcommand("verify-mst", "verify query edges against tree path maxima");
  std::string v_tree, v_queries;
  int v_k = 2;
  bool v_opt = false;
  vm->add_option("--tree", v_tree, "tree file")->required();
  vm->add_option("--k", v_k, "hop budget")->required();
  vm->add_option("--queries", v_queries, "file of 'u v w' triples")->required();
  vm->add_flag("--optimized", v_opt, "drop one comparison per shared order group");
  vm->callback([&] { rc = cmd_verify_mst(v_tree, v_k, v_queries, v_opt, out, format); });

  auto* prod = app.add_subcommand("product", "semigroup product along a tree path");
  std::string p_tree, p_vals;
  int p_k = 2;
  long long p_u = 0, p_v = 0;
  prod->add_option("--tree", p_tree, "tree file")->required();
  prod->add_option("--k", p_k, "hop budget")->required();
  prod->add_option("--u", p_u, "source vertex")->required();
  prod->add_option("--v", p_v, "target vertex")->required();
  prod->add_option("--vals", p_vals, "per-edge 'fwd bwd' values (default: edge weights)");
  prod->callback([&] { rc = cmd_product(p_tree, p_k, p_u, p_v, p_vals, out, format); });

  auto* bench = app.add_subcommand("bench", "size benchmark on uniform-line instances");
  std::vector<long long> be_n;
  std::vector<int> be_k;
  bench->add_option("--n", be_n, "sizes")->delimiter(',');
  bench->add_option("--k", be_k, "hop budgets")->delimiter(',');
  bench->callback([&] { rc = cmd_bench(be_n, be_k, seed, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
