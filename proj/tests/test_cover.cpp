#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "ackermann.hpp"
#include "cover.hpp"
#include "metric.hpp"
#include "pathquery.hpp"
#include "tree.hpp"

using namespace hopnav;

namespace {

struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 1) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return (int)(next() % (uint64_t)n); }
};

FiniteMetric random_point_metric(Rng& rng, int n, int dim) {
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < n; i++) {
    std::vector<double> p;
    for (int c = 0; c < dim; c++) p.push_back(1 + rng.below(1000000));
    pts.push_back(std::move(p));
  }
  return metric_from_points(pts);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("matrix metrics are validated on load") {
  CHECK_NOTHROW(metric_from_matrix({0, 1, 2}, {0, 1, 2, 1, 0, 1, 2, 1, 0}));
  // Asymmetry.
  CHECK_THROWS_AS(metric_from_matrix({0, 1}, {0, 1, 2, 0}), InputError);
  // Nonzero diagonal.
  CHECK_THROWS_AS(metric_from_matrix({0, 1}, {1, 1, 1, 0}), InputError);
  // Zero off-diagonal.
  CHECK_THROWS_AS(metric_from_matrix({0, 1}, {0, 0, 0, 0}), InputError);
  // Negative.
  CHECK_THROWS_AS(metric_from_matrix({0, 1}, {0, -1, -1, 0}), InputError);
  // Triangle inequality, with the witness in the message.
  try {
    metric_from_matrix({0, 1, 2}, {0, 1, 10, 1, 0, 1, 10, 1, 0});
    FAIL("expected a triangle violation");
  } catch (const InputError& e) {
    CHECK(contains(e.what(), "triangle"));
  }
  CHECK_THROWS_AS(metric_from_matrix({0, 0}, {0, 1, 1, 0}), InputError);
  CHECK_THROWS_AS(metric_from_matrix({0, 1}, {0, 1, 1}), InputError);
}

TEST_CASE("point metrics follow the euclidean rule") {
  auto m = metric_from_points({{0, 0}, {3, 4}, {6, 8}});
  CHECK(m.at(0, 1) == 5);
  CHECK(m.at(1, 2) == 5);
  CHECK(m.at(0, 2) == 10);
  CHECK(m.ix(2) == 2);
  CHECK_THROWS_AS(m.ix(7), InputError);
  CHECK_THROWS_AS(metric_from_points({{1, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(metric_from_points({{1, 1}, {1}}), InputError);
}

TEST_CASE("metric files round-trip") {
  auto m = metric_from_matrix({0, 1, 2}, {0, 2, 3, 2, 0, 1, 3, 1, 0});
  auto text = format_metric(m);
  auto m2 = parse_metric(text);
  REQUIRE(m2.n == 3);
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) CHECK(m2.at(i, j) == m.at(i, j));
  CHECK(format_metric(m2) == text);

  auto mp = parse_metric("points 2 2\n0 0\n3 4\n");
  CHECK(mp.at(0, 1) == 5);

  CHECK_THROWS_AS(parse_metric(""), InputError);
  CHECK_THROWS_AS(parse_metric("matrix 2\n0 1\n1 0\nleft over\n"), InputError);
  CHECK_THROWS_AS(parse_metric("matrix 2\n0 1 9\n1 0\n"), InputError);
  CHECK_THROWS_AS(parse_metric("grid 2\n"), InputError);
  CHECK_THROWS_AS(parse_metric("points 1 0\n\n"), InputError);
}

TEST_CASE("tree metric matches pairwise tree distances") {
  auto t = make_tree({1, 2, 3, 4, 5}, 1, {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {4, 5, 3}});
  auto m = tree_metric(t);
  REQUIRE(m.n == 5);
  for (int i = 0; i < m.n; i++)
    for (int j = 0; j < m.n; j++)
      CHECK(m.at(i, j) == tree_distance(t, t.idx(m.pid[i]), t.idx(m.pid[j])).weight);

  // Steiner vertices do not become points.
  auto ts = make_tree({0, 1, 2, 9}, 0, {{0, 9, 1}, {9, 1, 1}, {1, 2, 1}}, {0, 1, 2});
  auto ms = tree_metric(ts);
  CHECK(ms.n == 3);
  CHECK(ms.at(ms.ix(0), ms.ix(1)) == 2);
  CHECK(ms.at(ms.ix(0), ms.ix(2)) == 3);
}

TEST_CASE("star cover is a stretch-one ramsey cover") {
  auto m = metric_from_matrix({0, 1, 2}, {0, 2, 3, 2, 0, 4, 3, 4, 0});
  auto c = star_cover(m);
  REQUIRE(c.zeta() == m.n);
  CHECK(c.gamma == 1.0);
  for (int i = 0; i < m.n; i++) {
    CHECK(c.ramsey.at(m.pid[i]) == i);
    const auto& t = c.trees[i];
    for (int j = 0; j < m.n; j++) {
      if (j == i) continue;
      CHECK(tree_distance(t, t.idx(m.pid[i]), t.idx(m.pid[j])).weight == m.at(i, j));
    }
    // Leaf-to-leaf detours dominate by the triangle inequality.
    for (int a = 0; a < m.n; a++)
      for (int b = 0; b < m.n; b++) {
        if (a == b || a == i || b == i) continue;
        Weight w = tree_distance(t, t.idx(m.pid[a]), t.idx(m.pid[b])).weight;
        CHECK(w == m.at(a, i) + m.at(i, b));
        CHECK(w >= m.at(a, b));
      }
  }
  CHECK_NOTHROW(validate_cover(c, m));
}

TEST_CASE("single tree cover reproduces tree navigation end to end") {
  auto t = make_tree({1, 2, 3, 4, 5}, 1, {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {4, 5, 3}});
  auto m = tree_metric(t);
  auto c = single_tree_cover(t);
  REQUIRE(c.zeta() == 1);
  CHECK_NOTHROW(validate_cover(c, m));

  auto nav = build_navigator(m, c, 2);
  auto s = build_spanner(t, 2);
  for (long long a = 1; a <= 5; a++)
    for (long long b = 1; b <= 5; b++) {
      auto got = metric_find_path(nav, a, b);
      CHECK(got.tree == 0);
      CHECK(got.hops <= 2);
      CHECK(got.weight == tree_distance(t, t.idx(a), t.idx(b)).weight);
      if (a != b) {
        std::vector<long long> want;
        for (int x : find_path(s, t.idx(a), t.idx(b))) want.push_back(t.label[x]);
        CHECK(got.points == want);
      } else {
        CHECK(got.points == std::vector<long long>{a});
        CHECK(got.hops == 0);
      }
    }
}

TEST_CASE("star cover answers every pair at the metric distance") {
  Rng rng(321);
  for (int iter = 0; iter < 4; iter++) {
    auto m = random_point_metric(rng, 2 + rng.below(30), 2);
    auto c = star_cover(m);
    for (int k : {2, 3}) {
      auto nav = build_navigator(m, c, k);
      for (int i = 0; i < m.n; i++)
        for (int j = 0; j < m.n; j++) {
          auto p = metric_find_path(nav, m.pid[i], m.pid[j]);
          CHECK(p.hops <= k);
          CHECK(p.weight == m.at(i, j));
          if (i != j) CHECK(p.tree == i);
        }
      CHECK(nav.total_edges() <=
            4LL * m.n * (long long)alpha_prime(k, (unsigned long long)m.n) * c.zeta());
    }
  }
}

TEST_CASE("scans without a ramsey map keep the lightest candidate") {
  Rng rng(77);
  auto m = random_point_metric(rng, 24, 3);
  auto c = star_cover(m);
  c.ramsey.clear();
  auto nav = build_navigator(m, c, 2);
  for (int i = 0; i < m.n; i++)
    for (int j = 0; j < m.n; j++) {
      auto p = metric_find_path(nav, m.pid[i], m.pid[j]);
      // Domination floors every candidate at the metric distance and some
      // star contains the direct edge, so the scan minimum is exact.
      CHECK(p.weight == m.at(i, j));
      CHECK(p.hops <= 2);
    }
}

TEST_CASE("steiner interiors are reported unless suppressed") {
  auto t = make_tree({0, 1, 2, 3, 9}, 9,
                     {{9, 0, 1}, {9, 1, 1}, {9, 2, 1}, {9, 3, 1}}, {0, 1, 2, 3});
  auto m = tree_metric(t);
  auto c = single_tree_cover(t);
  auto nav = build_navigator(m, c, 2);

  auto p = metric_find_path(nav, 0, 1);
  CHECK(p.points == std::vector<long long>{0, 9, 1});
  CHECK(p.weight == 2);
  CHECK(p.hops == 2);

  auto q = metric_find_path(nav, 0, 1, false);
  CHECK(q.points == std::vector<long long>{0, 1});
  CHECK(q.hops == 2);
  CHECK(q.weight == 2);
}

TEST_CASE("cover files round-trip through the navigator") {
  Rng rng(9);
  auto m = random_point_metric(rng, 12, 2);
  auto c = star_cover(m);
  auto text = format_cover(c);
  auto c2 = load_cover(text, m);
  REQUIRE(c2.zeta() == c.zeta());
  CHECK(c2.gamma == c.gamma);
  CHECK(format_cover(c2) == text);

  auto nav = build_navigator(m, c2, 2);
  for (int i = 0; i < m.n; i++)
    for (int j = 0; j < m.n; j++)
      CHECK(metric_find_path(nav, m.pid[i], m.pid[j]).weight == m.at(i, j));
}

TEST_CASE("covers that break domination are rejected with a witness") {
  auto m = metric_from_matrix({0, 1, 2}, {0, 2, 3, 2, 0, 4, 3, 4, 0});
  auto c = star_cover(m);
  // Shrink one star edge below the metric distance.
  c.trees[1].edges[0].w = 0.5;
  try {
    validate_cover(c, m);
    FAIL("expected a domination rejection");
  } catch (const PropertyError& e) {
    CHECK(contains(e.what(), "dominate"));
    CHECK(contains(e.what(), "tree 1"));
    CHECK(contains(e.what(), "(0, 1)"));
  }
  CHECK_THROWS_AS(load_cover(format_cover(c), m), PropertyError);
}

TEST_CASE("declared stretch is enforced pairwise") {
  // Equilateral metric, both trees the same path: the end pair costs 4 > 2.
  auto m = metric_from_matrix({0, 1, 2}, {0, 2, 2, 2, 0, 2, 2, 2, 0});
  std::string path_block = "3 1\n0 1 2\n1 2 2\n";
  std::string bad = "1 2\n" + path_block + path_block;
  try {
    load_cover(bad, m);
    FAIL("expected a coverage rejection");
  } catch (const PropertyError& e) {
    CHECK(contains(e.what(), "stretch"));
    CHECK(contains(e.what(), "(0, 2)"));
  }
  std::string ok = "2 2\n" + path_block + path_block;
  auto c = load_cover(ok, m);
  CHECK(c.gamma == 2.0);

  auto nav = build_navigator(m, c, 2);
  for (int i = 0; i < m.n; i++)
    for (int j = 0; j < m.n; j++) {
      auto p = metric_find_path(nav, m.pid[i], m.pid[j]);
      CHECK(p.weight >= m.at(i, j));
      CHECK(p.weight <= c.gamma * m.at(i, j));
      CHECK(p.hops <= 2);
    }
}

TEST_CASE("cover parsing rejects malformed input") {
  auto m = metric_from_matrix({0, 1}, {0, 1, 1, 0});
  CHECK_THROWS_AS(parse_cover(""), InputError);
  CHECK_THROWS_AS(parse_cover("1 0\n"), InputError);
  CHECK_THROWS_AS(parse_cover("0.5 1\n2 0\n0 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_cover("1 1 sparse\n2 0\n0 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_cover("1 1 ramsey\n2 0\n0 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_cover("1 1\n2 0\n0 1 1\nstray\n"), InputError);
  CHECK_THROWS_AS(parse_cover("1 2\n2 0\n0 1 1\n"), InputError);
  // Map entries must name existing trees and stay unique.
  CHECK_THROWS_AS(parse_cover("1 1 ramsey\n2 0\n0 1 1\n0 3\n"), InputError);
  CHECK_THROWS_AS(parse_cover("1 1 ramsey\n2 0\n0 1 1\n0 0\n0 0\n"), InputError);
  // Maps must cover every point.
  auto c = parse_cover("1 1 ramsey\n2 0\n0 1 1\n0 0\n");
  CHECK_THROWS_AS(validate_cover(c, m), InputError);
  // Trees must span the point set.
  auto c2 = parse_cover("1 1\n1 0\n");
  CHECK_THROWS_AS(validate_cover(c2, m), InputError);
  CHECK_THROWS_AS(build_navigator(m, c2, 2), InputError);
}

TEST_CASE("navigator demands a workable hop budget and known points") {
  auto m = metric_from_matrix({0, 1}, {0, 1, 1, 0});
  auto c = star_cover(m);
  CHECK_THROWS_AS(build_navigator(m, c, 1), InputError);
  auto nav = build_navigator(m, c, 2);
  CHECK_THROWS_AS(metric_find_path(nav, 0, 5), InputError);
  CHECK_THROWS_AS(metric_find_path(nav, 5, 0), InputError);
}

TEST_CASE("covers with steiner trees validate and round-trip") {
  // One tree over three points with a Steiner hub labeled 9.
  auto m = metric_from_matrix({0, 1, 2}, {0, 2, 2, 2, 0, 2, 2, 2, 0});
  std::string text = "1 1\n4 9\n9 0 1\n9 1 1\n9 2 1\nR: 0 1 2\n";
  auto c = load_cover(text, m);
  CHECK(format_cover(c) == text);
  auto nav = build_navigator(m, c, 2);
  auto p = metric_find_path(nav, 0, 2);
  CHECK(p.weight == 2);
  CHECK(p.hops == 2);
  CHECK(p.points == std::vector<long long>{0, 9, 2});
}
