#include "gen.hpp"

#include <set>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "metric.hpp"
#include "rng.hpp"
#include "textio.hpp"

namespace hopnav {

using textio::fmt_weight;

WeightedTree uniform_line(long long n) {
  if (n <= 0) throw InputError("instance size must be positive");
  std::vector<long long> labels(n);
  for (long long i = 0; i < n; i++) labels[i] = i + 1;
  std::vector<std::tuple<long long, long long, Weight>> edges;
  for (long long i = 2; i <= n; i++) edges.push_back({i - 1, i, 1});
  return make_tree(labels, 1, edges);
}

WeightedTree gen_random_tree(long long n, uint64_t seed, long long max_w, bool float_weights) {
  if (n <= 0) throw InputError("instance size must be positive");
  if (max_w < 1) throw InputError("weight bound must be at least 1");
  Rng64 rng(seed);
  std::vector<long long> labels(n);
  for (long long i = 0; i < n; i++) labels[i] = i + 1;
  std::vector<std::tuple<long long, long long, Weight>> edges;
  for (long long v = 2; v <= n; v++) {
    long long p = 1 + (long long)rng.below((uint64_t)(v - 1));
    Weight w = float_weights ? 1 + rng.unit() * (double)(max_w - 1)
                             : (Weight)(1 + (long long)rng.below((uint64_t)max_w));
    edges.push_back({p, v, w});
  }
  long long root = 1 + (long long)rng.below((uint64_t)n);
  return make_tree(labels, root, edges);
}

namespace {

// Coordinates are drawn on a coarse grid (or the unit cube with float
// weights) and redrawn on collision, since coincident points are not a
// metric.
std::vector<std::vector<double>> draw_points(long long n, int dim, uint64_t seed,
                                             bool float_coords) {
  if (n <= 0) throw InputError("instance size must be positive");
  if (dim <= 0) throw InputError("dimension must be positive");
  Rng64 rng(seed);
  std::set<std::vector<double>> seen;
  std::vector<std::vector<double>> pts;
  while ((long long)pts.size() < n) {
    std::vector<double> p(dim);
    for (double& c : p)
      c = float_coords ? rng.unit() : (double)(long long)rng.below(1ull << 30);
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return pts;
}

std::string points_text(const std::vector<std::vector<double>>& pts) {
  std::string out =
      std::to_string(pts.size()) + " " + std::to_string(pts.empty() ? 0 : pts[0].size());
  out = "points " + out + "\n";
  for (const auto& p : pts) {
    for (size_t i = 0; i < p.size(); i++) {
      if (i) out += " ";
      out += fmt_weight(p[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

std::string gen_instance(const std::string& kind, long long n, uint64_t seed, long long max_w,
                         int dim, bool float_weights) {
  if (kind == "uniform-line") return format_tree(uniform_line(n));
  if (kind == "random-tree") return format_tree(gen_random_tree(n, seed, max_w, float_weights));
  if (kind == "random-points") return points_text(draw_points(n, dim, seed, float_weights));
  if (kind == "random-matrix")
    return format_metric(metric_from_points(draw_points(n, dim, seed, float_weights)));
  throw InputError("unknown instance kind: " + kind);
}

}  // namespace hopnav
