#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "tree.hpp"

namespace hopnav {

// Finite metric over externally named points, stored as a full symmetric
// matrix. Matrices are checked on construction; point clouds and tree
// metrics satisfy the axioms by the way they are computed.
struct FiniteMetric {
  int n = 0;
  std::vector<long long> pid;              // point ids in storage order
  std::unordered_map<long long, int> pix;  // id -> storage index
  std::vector<Weight> d;                   // row-major n*n

  Weight at(int i, int j) const { return d[(size_t)i * n + j]; }
  int ix(long long id) const;  // throws InputError on unknown ids
};

// The triangle inequality is checked on all triples up to this many points;
// larger matrices get a fixed-seed sample of triples instead.
inline constexpr int kExhaustiveMetricCheck = 512;

FiniteMetric metric_from_matrix(std::vector<long long> ids, std::vector<Weight> entries);
FiniteMetric metric_from_points(const std::vector<std::vector<double>>& pts);

// Distances between the tree's required vertices; ids are their labels.
FiniteMetric tree_metric(const WeightedTree& t);

// Text format: "matrix n" plus n rows of n entries, or "points n dim" plus
// n coordinate rows under the Euclidean rule. Ids are 0..n-1 either way.
FiniteMetric parse_metric(const std::string& text);
std::string format_metric(const FiniteMetric& m);

}  // namespace hopnav
