#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "pathquery.hpp"
#include "spanner.hpp"
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

WeightedTree random_tree(Rng& rng, int n, int max_w, bool subset) {
  std::vector<long long> labels;
  std::vector<std::tuple<long long, long long, Weight>> edges;
  for (int i = 1; i <= n; i++) labels.push_back(i);
  for (int i = 2; i <= n; i++)
    edges.emplace_back(i, 1 + rng.below(i - 1), (Weight)(1 + rng.below(max_w)));
  std::vector<long long> req;
  if (subset && n >= 2) {
    for (int i = 1; i <= n; i++)
      if (rng.below(3) != 0) req.push_back(i);
    if (req.empty()) req.push_back(1);
  }
  return make_tree(labels, 1 + rng.below(n), edges, req);
}

WeightedTree path5() {
  return make_tree({1, 2, 3, 4, 5}, 1,
                   {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {4, 5, 3}});
}

std::vector<long long> to_labels(const WeightedTree& t, const std::vector<int>& p) {
  std::vector<long long> out;
  for (int v : p) out.push_back(t.label[v]);
  return out;
}

Weight path_weight(const HopSpanner& s, const std::vector<int>& p) {
  Weight w = 0;
  for (size_t i = 0; i + 1 < p.size(); i++) {
    int e = s.edge_between(p[i], p[i + 1]);
    REQUIRE(e >= 0);
    w += s.edges[e].w;
  }
  return w;
}

// True when p visits tree-path vertices of (u,v) in order.
bool monotone_on_tree_path(const WeightedTree& t, int u, int v, const std::vector<int>& p) {
  auto tp = tree_distance(t, u, v).verts;
  size_t pos = 0;
  for (int x : p) {
    while (pos < tp.size() && tp[pos] != x) pos++;
    if (pos == tp.size()) return false;
    pos++;
  }
  return true;
}

using Concat = std::string (*)(const std::string&, const std::string&);
const Concat concat = [](const std::string& a, const std::string& b) { return a + b; };

// Per-tree-edge word tokens, distinct per direction so folds expose both
// orientation and order mistakes.
std::vector<EdgeFold<std::string>> word_tokens(const WeightedTree& t) {
  std::vector<EdgeFold<std::string>> vals(t.edges.size());
  for (size_t e = 0; e < t.edges.size(); e++) {
    vals[e].fwd = "f" + std::to_string(e) + ";";
    vals[e].bwd = "r" + std::to_string(e) + ";";
  }
  return vals;
}

std::string word_along_tree_path(const WeightedTree& t,
                                 const std::vector<EdgeFold<std::string>>& vals, int u, int v) {
  auto tp = tree_distance(t, u, v).verts;
  std::string out;
  for (size_t i = 0; i + 1 < tp.size(); i++) {
    int x = tp[i], y = tp[i + 1];
    int e = t.par[x] == y ? t.par_edge[x] : t.par_edge[y];
    bool fwd = t.edges[e].u == x;
    out += fwd ? vals[e].fwd : vals[e].bwd;
  }
  return out;
}

}  // namespace

TEST_CASE("path of five answers two-hop queries") {
  auto t = path5();
  auto s = build_spanner(t, 2);

  PathStats st;
  auto p = find_path(s, t.idx(1), t.idx(5), &st);
  CHECK(to_labels(t, p) == std::vector<long long>{1, 3, 5});
  CHECK(path_weight(s, p) == 7);
  CHECK(st.hops == 2);

  p = find_path(s, t.idx(2), t.idx(4), &st);
  CHECK(to_labels(t, p) == std::vector<long long>{2, 3, 4});
  CHECK(path_weight(s, p) == 3);

  for (long long lab = 1; lab <= 5; lab++) {
    p = find_path(s, t.idx(lab), t.idx(lab), &st);
    CHECK(p == std::vector<int>{t.idx(lab)});
    CHECK(st.hops == 0);
  }

  for (long long a = 1; a <= 5; a++)
    for (long long b = 1; b <= 5; b++) {
      int u = t.idx(a), v = t.idx(b);
      p = find_path(s, u, v, &st);
      CHECK(st.hops <= 2);
      CHECK(path_weight(s, p) == tree_distance(t, u, v).weight);
      CHECK(monotone_on_tree_path(t, u, v, p));
    }
}

TEST_CASE("queries reject unknown vertices") {
  auto t = path5();
  auto s = build_spanner(t, 2);
  CHECK_THROWS_AS(find_path(s, -1, 0), InputError);
  CHECK_THROWS_AS(find_path(s, 0, t.n), InputError);
}

TEST_CASE("all pairs stay exact and short on random trees") {
  Rng rng(2024);
  long long pairs = 0;
  for (int iter = 0; iter < 40; iter++) {
    int n = 1 + rng.below(70);
    auto t = random_tree(rng, n, 9, iter % 3 == 0);
    std::vector<int> reqv;
    for (int i = 0; i < t.n; i++)
      if (t.required[i]) reqv.push_back(i);
    for (int k = 2; k <= 8; k++) {
      auto s = build_spanner(t, k);
      for (int u : reqv)
        for (int v : reqv) {
          PathStats st;
          auto p = find_path(s, u, v, &st);
          pairs++;
          REQUIRE(st.hops <= k);
          REQUIRE(st.nav_depth <= k / 2);
          REQUIRE(path_weight(s, p) == tree_distance(t, u, v).weight);
          REQUIRE(monotone_on_tree_path(t, u, v, p));
        }
    }
  }
  CHECK(pairs > 100000);
}

TEST_CASE("string annotations preserve direction") {
  auto t = make_tree({1, 2, 3}, 2, {{1, 2, 1}, {2, 3, 1}});
  auto s = build_spanner(t, 2);

  std::vector<EdgeFold<std::string>> vals(t.edges.size());
  for (size_t e = 0; e < t.edges.size(); e++) {
    // Letter per undirected edge: "a" on (1,2), "b" on (2,3).
    std::string letter = t.label[t.edges[e].u] + t.label[t.edges[e].v] == 3 ? "a" : "b";
    vals[e].fwd = vals[e].bwd = letter;
  }
  auto ann = annotate(s, vals, concat);

  int e = s.edge_between(t.idx(1), t.idx(3));
  REQUIRE(e >= 0);
  bool stored_from_1 = s.edges[e].u == t.idx(1);
  CHECK(ann[e].fwd == (stored_from_1 ? "ab" : "ba"));
  CHECK(ann[e].bwd == (stored_from_1 ? "ba" : "ab"));

  int e12 = s.edge_between(t.idx(1), t.idx(2));
  REQUIRE(e12 >= 0);
  CHECK(ann[e12].fwd == "a");
  CHECK(ann[e12].bwd == "a");
}

TEST_CASE("identity annotations stay identity") {
  auto t = path5();
  auto s = build_spanner(t, 2);
  std::vector<EdgeFold<std::string>> vals(t.edges.size());
  auto ann = annotate(s, vals, concat);
  for (const auto& a : ann) {
    CHECK(a.fwd.empty());
    CHECK(a.bwd.empty());
  }
}

TEST_CASE("maximum annotations take the path maximum") {
  auto t = make_tree({1, 2, 3}, 2, {{1, 2, 2}, {2, 3, 5}});
  auto s = build_spanner(t, 2);
  std::vector<EdgeFold<Weight>> vals(t.edges.size());
  for (size_t e = 0; e < t.edges.size(); e++) vals[e].fwd = vals[e].bwd = t.edges[e].w;
  auto ann = annotate(s, vals, [](Weight a, Weight b) { return a > b ? a : b; });
  int e = s.edge_between(t.idx(1), t.idx(3));
  REQUIRE(e >= 0);
  CHECK(ann[e].fwd == 5);
  CHECK(ann[e].bwd == 5);
}

TEST_CASE("annotate wants one value per tree edge") {
  auto t = path5();
  auto s = build_spanner(t, 2);
  std::vector<EdgeFold<std::string>> vals(t.edges.size() - 1);
  CHECK_THROWS_AS(annotate(s, vals, concat), InputError);
}

TEST_CASE("folds spend one operation per extra hop") {
  SUBCASE("single collapsed edge costs nothing") {
    auto t = make_tree({1, 2, 3}, 2, {{1, 2, 1}, {2, 3, 1}});
    auto s = build_spanner(t, 2);
    std::vector<EdgeFold<std::string>> vals(t.edges.size());
    for (size_t e = 0; e < t.edges.size(); e++) {
      std::string letter = t.label[t.edges[e].u] + t.label[t.edges[e].v] == 3 ? "a" : "b";
      vals[e].fwd = vals[e].bwd = letter;
    }
    auto ann = annotate(s, vals, concat);
    auto p = find_path(s, t.idx(1), t.idx(3));
    REQUIRE(p.size() == 2);
    long long ops = 0;
    auto got = fold_along(s, ann, p, concat, &ops);
    REQUIRE(got.has_value());
    CHECK(*got == "ab");
    CHECK(ops == 0);
  }
  SUBCASE("two hops cost one operation") {
    auto t = path5();
    auto s = build_spanner(t, 2);
    auto vals = word_tokens(t);
    auto ann = annotate(s, vals, concat);
    auto p = find_path(s, t.idx(1), t.idx(5));
    REQUIRE(p.size() == 3);
    long long ops = 0;
    auto got = fold_along(s, ann, p, concat, &ops);
    REQUIRE(got.has_value());
    CHECK(*got == word_along_tree_path(t, vals, t.idx(1), t.idx(5)));
    CHECK(ops == 1);
  }
  SUBCASE("trivial path folds to nothing") {
    auto t = path5();
    auto s = build_spanner(t, 2);
    auto ann = annotate(s, word_tokens(t), concat);
    long long ops = 0;
    auto got = fold_along(s, ann, find_path(s, t.idx(2), t.idx(2)), concat, &ops);
    CHECK_FALSE(got.has_value());
    CHECK(ops == 0);
  }
}

TEST_CASE("annotation folds match the tree path oracle") {
  Rng rng(99);
  for (int iter = 0; iter < 20; iter++) {
    int n = 2 + rng.below(48);
    auto t = random_tree(rng, n, 9, iter % 4 == 0);
    auto vals = word_tokens(t);
    std::vector<int> reqv;
    for (int i = 0; i < t.n; i++)
      if (t.required[i]) reqv.push_back(i);
    for (int k = 2; k <= 5; k++) {
      auto s = build_spanner(t, k);
      auto ann = annotate(s, vals, concat);
      for (int u : reqv)
        for (int v : reqv) {
          if (u == v) continue;
          long long ops = 0;
          auto got = fold_along(s, ann, find_path(s, u, v), concat, &ops);
          REQUIRE(got.has_value());
          REQUIRE(*got == word_along_tree_path(t, vals, u, v));
          REQUIRE(ops <= k - 1);
        }
    }
  }
}
