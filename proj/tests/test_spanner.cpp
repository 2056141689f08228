#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "ackermann.hpp"
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

WeightedTree random_tree(Rng& rng, int n, int max_w) {
  std::vector<long long> labels;
  std::vector<std::tuple<long long, long long, Weight>> edges;
  for (int i = 1; i <= n; i++) labels.push_back(i);
  for (int i = 2; i <= n; i++)
    edges.emplace_back(i, 1 + rng.below(i - 1), (Weight)(1 + rng.below(max_w)));
  return make_tree(labels, 1 + rng.below(n), edges);
}

WeightedTree path5() {
  return make_tree({1, 2, 3, 4, 5}, 1,
                   {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {4, 5, 3}});
}

WeightedTree unit_line(int n, long long root) {
  std::vector<long long> labels;
  std::vector<std::tuple<long long, long long, Weight>> edges;
  for (int i = 1; i <= n; i++) labels.push_back(i);
  for (int i = 1; i < n; i++) edges.emplace_back(i, i + 1, 1);
  return make_tree(labels, root, edges);
}

// Looks an edge up by external labels and returns its id, or -1.
int edge_by_label(const HopSpanner& s, long long a, long long b) {
  return s.edge_between(s.tree.idx(a), s.tree.idx(b));
}

}  // namespace

TEST_CASE("path of five builds the hub spanner at two hops") {
  auto t = path5();
  auto s = build_spanner(t, 2);

  REQUIRE(s.edges.size() == 6);

  struct Want {
    long long a, b;
    Weight w;
    EdgeOrigin origin;
  };
  const Want want[] = {
      {3, 1, 3, EdgeOrigin::Hub},     {3, 2, 2, EdgeOrigin::Hub},
      {3, 4, 1, EdgeOrigin::Hub},     {3, 5, 4, EdgeOrigin::Hub},
      {1, 2, 1, EdgeOrigin::BaseTree}, {4, 5, 3, EdgeOrigin::BaseTree},
  };
  for (const auto& w : want) {
    int e = edge_by_label(s, w.a, w.b);
    REQUIRE(e >= 0);
    CHECK(s.edges[e].w == w.w);
    CHECK(s.edges[e].origin == w.origin);
  }
  // Hub edges keep the hub at the stored head.
  for (const auto& e : s.edges)
    if (e.origin == EdgeOrigin::Hub) CHECK(t.label[e.u] == 3);

  CHECK(s.origin_count(EdgeOrigin::Hub) == 4);
  CHECK(s.origin_count(EdgeOrigin::BaseTree) == 2);
}

TEST_CASE("base instances add the shortcut only under a two-child root") {
  SUBCASE("rooted at the middle") {
    auto t = make_tree({1, 2, 3}, 2, {{1, 2, 1}, {2, 3, 1}});
    auto s = build_spanner(t, 2);
    REQUIRE(s.edges.size() == 3);
    int e = edge_by_label(s, 1, 3);
    REQUIRE(e >= 0);
    CHECK(s.edges[e].w == 2);
    CHECK(s.edges[e].origin == EdgeOrigin::BaseExtra);
  }
  SUBCASE("rooted at an end") {
    auto t = make_tree({1, 2, 3}, 1, {{1, 2, 1}, {2, 3, 1}});
    auto s = build_spanner(t, 2);
    CHECK(s.edges.size() == 2);
    CHECK(s.origin_count(EdgeOrigin::BaseExtra) == 0);
  }
  SUBCASE("single vertex") {
    auto t = make_tree({7}, 7, {});
    auto s = build_spanner(t, 2);
    CHECK(s.edges.empty());
    REQUIRE(s.navs.size() == 1);
    REQUIRE(s.navs[0].eta.count(t.idx(7)) == 1);
    CHECK(s.phi[s.navs[0].eta.at(t.idx(7))].kind == PhiNode::Kind::Base);
  }
}

TEST_CASE("three-hop step contracts the path of five around its cut") {
  auto t = path5();
  auto s = build_spanner(t, 3);

  // Same six shortcut endpoints as at k=2, but cut edges come from the
  // border walk and there is no hub fan.
  CHECK(s.edges.size() == 6);
  CHECK(s.origin_count(EdgeOrigin::InBorder) == 4);
  CHECK(s.origin_count(EdgeOrigin::BaseTree) == 2);
  CHECK(s.origin_count(EdgeOrigin::CutBlock) == 0);

  REQUIRE(s.ctrees.size() == 1);
  const ContractedTree& C = s.ctrees[0];
  REQUIRE(C.verts.size() == 3);

  // Shape t1 - 3 - t2, rooted at the component holding the original root.
  int cut = -1;
  for (int i = 0; i < 3; i++)
    if (C.is_cut[i]) {
      CHECK(cut == -1);
      cut = i;
    }
  REQUIRE(cut >= 0);
  CHECK(t.label[C.verts[cut]] == 3);
  CHECK_FALSE(C.is_cut[C.root]);
  CHECK(C.verts[C.root] == t.idx(1));
  CHECK(C.par[cut] == C.root);
  for (int i = 0; i < 3; i++)
    if (i != cut && i != C.root) {
      CHECK(C.par[i] == cut);
      CHECK(C.verts[i] == t.idx(4));
    }
  // Every vertex of the step instance resolves to a contracted vertex.
  for (long long lab = 1; lab <= 5; lab++) CHECK(C.loc.count(t.idx(lab)) == 1);
}

TEST_CASE("recursion tree lookups") {
  auto t = path5();
  auto s = build_spanner(t, 2);
  const auto& eta = s.navs[0].eta;
  int root = s.navs[0].phi_root;

  REQUIRE(s.phi[root].kind == PhiNode::Kind::Regular);
  CHECK(t.label[s.phi[root].center] == 3);

  int a = eta.at(t.idx(1));
  int b = eta.at(t.idx(5));
  CHECK(phi_lca(s, a, a) == a);
  CHECK(phi_lca(s, root, b) == root);
  int l = phi_lca(s, a, b);
  CHECK(l == root);
  CHECK(s.phi[l].kind == PhiNode::Kind::Regular);
  CHECK(t.label[s.phi[l].center] == 3);

  CHECK(phi_level_ancestor(s, a, 0) == root);
  CHECK(phi_level_ancestor(s, a, s.phi[a].level) == a);
  CHECK_THROWS_AS(phi_level_ancestor(s, a, s.phi[a].level + 1), InputError);
  CHECK_THROWS_AS(phi_level_ancestor(s, a, -1), InputError);
}

TEST_CASE("lookups refuse nodes of different navigators") {
  auto t = unit_line(30, 1);
  auto s = build_spanner(t, 4);
  REQUIRE(s.navs.size() >= 2);
  int a = s.navs[0].phi_root;
  int b = s.navs[1].phi_root;
  CHECK_THROWS_AS(phi_lca(s, a, b), InputError);
  CHECK_THROWS_AS(phi_lca(s, a, (int)s.phi.size()), InputError);
  CHECK_THROWS_AS(phi_lca(s, -1, a), InputError);
}

TEST_CASE("every required vertex resolves through eta") {
  Rng rng(77);
  for (int iter = 0; iter < 12; iter++) {
    int n = 1 + rng.below(60);
    auto t = random_tree(rng, n, 6);
    for (int k = 2; k <= 5; k++) {
      auto s = build_spanner(t, k);
      for (int v = 0; v < t.n; v++) {
        if (!t.required[v]) continue;
        REQUIRE(s.navs[0].eta.count(v) == 1);
        int node = s.navs[0].eta.at(v);
        REQUIRE(node >= 0);
        CHECK(s.phi[node].nav == 0);
      }
    }
  }
}

TEST_CASE("edge weights equal tree distances on random trees") {
  Rng rng(2024);
  for (int iter = 0; iter < 25; iter++) {
    int n = 1 + rng.below(60);
    auto t = random_tree(rng, n, 9);
    for (int k = 2; k <= 6; k++) {
      auto s = build_spanner(t, k);
      for (const auto& e : s.edges) {
        CHECK(e.w == tree_distance(t, e.u, e.v).weight);
        CHECK(e.u != e.v);
      }
    }
  }
}

TEST_CASE("builds are deterministic") {
  Rng rng(5150);
  auto t = random_tree(rng, 48, 7);
  auto s1 = build_spanner(t, 4);
  auto s2 = build_spanner(t, 4);
  REQUIRE(s1.edges.size() == s2.edges.size());
  for (size_t i = 0; i < s1.edges.size(); i++) {
    CHECK(s1.edges[i].u == s2.edges[i].u);
    CHECK(s1.edges[i].v == s2.edges[i].v);
    CHECK(s1.edges[i].w == s2.edges[i].w);
    CHECK(s1.edges[i].origin == s2.edges[i].origin);
    CHECK(s1.edges[i].inst == s2.edges[i].inst);
  }
  CHECK(s1.phi.size() == s2.phi.size());
  CHECK(s1.insts.size() == s2.insts.size());
}

TEST_CASE("uniform line stays inside the two-hop size window") {
  const int n = 1024;
  auto t = unit_line(n, 1);
  auto s = build_spanner(t, 2);
  CHECK(s.edges.size() >= 1280);           // (1/8) n log2 n
  CHECK(s.edges.size() <= (size_t)n * 11);  // n (ceil(log2 n) + 1)

  // Each vertex hangs off at most one hub per level, so the fan-in at the
  // non-hub end is bounded by the recursion depth.
  std::vector<int> fan(t.n, 0);
  for (const auto& e : s.edges)
    if (e.origin == EdgeOrigin::Hub) fan[e.v]++;
  CHECK(*std::max_element(fan.begin(), fan.end()) <= 11);
}

TEST_CASE("size stays within a small multiple of n alpha_prime") {
  for (int n : {64, 256}) {
    auto t = unit_line(n, 1);
    for (int k : {2, 3, 4, 6}) {
      auto s = build_spanner(t, k);
      auto a = alpha_prime(k, (unsigned long long)n);
      double ratio = (double)s.edges.size() / ((double)n * (double)a);
      CHECK(ratio <= 4.0);
    }
  }
}

TEST_CASE("rejects hop budgets below two") {
  auto t = path5();
  CHECK_THROWS_AS(build_spanner(t, 1), InputError);
  CHECK_THROWS_AS(build_spanner(t, 0), InputError);
}

TEST_CASE("subset-required builds only shortcut required pairs") {
  // Line of 7 with only the endpoints and middle required: every edge still
  // spans its exact distance and the spanner's base instances cover R.
  auto t = make_tree({1, 2, 3, 4, 5, 6, 7}, 1,
                     {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 7, 1}},
                     {1, 4, 7});
  for (int k = 2; k <= 4; k++) {
    auto s = build_spanner(t, k);
    for (const auto& e : s.edges)
      CHECK(e.w == tree_distance(t, e.u, e.v).weight);
    for (long long lab : {1, 4, 7}) CHECK(s.navs[0].eta.count(t.idx(lab)) == 1);
  }
}
