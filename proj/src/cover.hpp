#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "metric.hpp"
#include "spanner.hpp"
#include "tree.hpp"

namespace hopnav {

// Dominating trees over a point set. Every tree contains each point id as a
// vertex label; extra vertices are Steiner. A non-empty ramsey map promises
// that the mapped tree of a point covers all of that point's pairs.
struct TreeCover {
  std::vector<WeightedTree> trees;
  double gamma = 1.0;
  std::unordered_map<long long, int> ramsey;  // point id -> tree index

  int zeta() const { return (int)trees.size(); }
};

TreeCover star_cover(const FiniteMetric& m);
TreeCover single_tree_cover(const WeightedTree& t);

struct CoverCheck {
  bool pairs = true;      // exhaustive domination + coverage validation
  int pair_limit = 1024;  // skipped above this many points
};

// Text format: header "gamma zeta [ramsey]", then zeta inline tree blocks,
// then one "point tree-index" line per point when the ramsey flag is set.
TreeCover parse_cover(const std::string& text);
std::string format_cover(const TreeCover& c);

void validate_cover(const TreeCover& c, const FiniteMetric& m, CoverCheck check = {});
TreeCover load_cover(const std::string& text, const FiniteMetric& m, CoverCheck check = {});

// Per-tree hop spanners with the point set as the required set.
struct MetricNavigator {
  FiniteMetric metric;
  TreeCover cover;
  int k = 0;
  std::vector<HopSpanner> spanners;

  long long total_edges() const;
};

MetricNavigator build_navigator(const FiniteMetric& m, const TreeCover& c, int k);

struct MetricPath {
  std::vector<long long> points;  // labels along the chosen tree's spanner path
  Weight weight = 0;
  int hops = 0;
  int tree = -1;
};

// Ramsey covers answer through the source's mapped tree; other covers scan
// every tree and keep the lightest candidate. include_steiner=false drops
// Steiner interior labels from the report (hops still count spanner edges).
MetricPath metric_find_path(const MetricNavigator& nav, long long u, long long v,
                            bool include_steiner = true);

}  // namespace hopnav
