#include "hopnav.h"

#include <cstring>
#include <string>
#include <vector>

#include "ackermann.hpp"
#include "apps.hpp"
#include "cover.hpp"
#include "errors.hpp"
#include "gen.hpp"
#include "metric.hpp"
#include "pathquery.hpp"
#include "routing.hpp"
#include "spanner.hpp"
#include "tree.hpp"

using namespace hopnav;

struct hn_tree {
  WeightedTree t;
};
struct hn_metric {
  FiniteMetric m;
};
struct hn_cover {
  TreeCover c;
};
struct hn_spanner {
  HopSpanner s;
};
struct hn_navigator {
  MetricNavigator nav;
};
struct hn_routing {
  RoutingScheme rs;
};
struct hn_cover_routing {
  CoverRouting cr;
};
struct hn_verifier {
  Verifier v;
};

namespace {

thread_local std::string g_error;

void set_error(const char* what) { g_error = what ? what : ""; }

template <typename F>
hn_status guarded(F&& f) {
  g_error.clear();
  try {
    return f();
  } catch (const InputError& e) {
    set_error(e.what());
    return HN_INPUT_ERROR;
  } catch (const PropertyError& e) {
    set_error(e.what());
    return HN_PROPERTY_VIOLATION;
  } catch (const InternalError& e) {
    set_error(e.what());
    return HN_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    set_error(e.what());
    return HN_INTERNAL_ERROR;
  }
}

hn_status put_text(const std::string& s, char* buf, size_t cap, size_t* need) {
  if (need) *need = s.size() + 1;
  if (!buf) return HN_OK;
  if (cap < s.size() + 1) throw InputError("text buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return HN_OK;
}

template <typename T>
hn_status put_array(const std::vector<T>& v, T* buf, size_t cap, size_t* need) {
  if (need) *need = v.size();
  if (!buf) return HN_OK;
  if (cap < v.size()) throw InputError("array buffer too small");
  std::memcpy(buf, v.data(), v.size() * sizeof(T));
  return HN_OK;
}

template <typename P>
void require_handle(const P* p, const char* what) {
  if (!p) throw InputError(std::string("null ") + what + " handle");
}

// Values carried through the generic semigroup as fixed-size byte strings.
struct Blob {
  std::vector<unsigned char> b;
};

}  // namespace

struct hn_annotation {
  const hn_spanner* sp;
  std::vector<EdgeFold<Blob>> ann;
  hn_semigroup_op op;
  void* ctx;
  size_t val_size;
};

extern "C" {

const char* hn_last_error(void) { return g_error.c_str(); }

hn_status hn_alpha(int k, uint64_t n, uint64_t* out) {
  return guarded([&] {
    require_handle(out, "output");
    *out = alpha_k(k, n);
    return HN_OK;
  });
}

hn_status hn_alpha_prime(int k, uint64_t n, uint64_t* out) {
  return guarded([&] {
    require_handle(out, "output");
    *out = alpha_prime(k, n);
    return HN_OK;
  });
}

hn_status hn_eval_lower_bound(int64_t n, int k, double* out) {
  return guarded([&] {
    require_handle(out, "output");
    *out = eval_lower_bound(n, k);
    return HN_OK;
  });
}

hn_status hn_gen_instance(const char* kind, int64_t n, uint64_t seed, int64_t max_w, int dim,
                          int float_weights, char* buf, size_t cap, size_t* need) {
  return guarded([&] {
    require_handle(kind, "kind");
    return put_text(gen_instance(kind, n, seed, max_w, dim, float_weights != 0), buf, cap, need);
  });
}

hn_status hn_tree_parse(const char* text, hn_tree** out) {
  return guarded([&] {
    require_handle(text, "text");
    require_handle(out, "output");
    *out = new hn_tree{parse_tree(text)};
    return HN_OK;
  });
}

hn_status hn_tree_format(const hn_tree* t, char* buf, size_t cap, size_t* need) {
  return guarded([&] {
    require_handle(t, "tree");
    return put_text(format_tree(t->t), buf, cap, need);
  });
}

hn_status hn_tree_size(const hn_tree* t, int64_t* n) {
  return guarded([&] {
    require_handle(t, "tree");
    require_handle(n, "output");
    *n = t->t.n;
    return HN_OK;
  });
}

hn_status hn_tree_distance(const hn_tree* t, int64_t u, int64_t v, double* out) {
  return guarded([&] {
    require_handle(t, "tree");
    require_handle(out, "output");
    *out = tree_distance(t->t, t->t.idx(u), t->t.idx(v)).weight;
    return HN_OK;
  });
}

void hn_tree_free(hn_tree* t) { delete t; }

hn_status hn_spanner_build(const hn_tree* t, int k, hn_spanner** out) {
  return guarded([&] {
    require_handle(t, "tree");
    require_handle(out, "output");
    *out = new hn_spanner{build_spanner(t->t, k)};
    return HN_OK;
  });
}

hn_status hn_spanner_edge_count(const hn_spanner* s, int64_t* out) {
  return guarded([&] {
    require_handle(s, "spanner");
    require_handle(out, "output");
    *out = (int64_t)s->s.edges.size();
    return HN_OK;
  });
}

hn_status hn_spanner_format(const hn_spanner* s, char* buf, size_t cap, size_t* need) {
  return guarded([&] {
    require_handle(s, "spanner");
    return put_text(format_spanner(s->s), buf, cap, need);
  });
}

hn_status hn_spanner_path(const hn_spanner* s, int64_t u, int64_t v, int64_t* verts, size_t cap,
                          size_t* need, double* weight, int* hops, int* nav_depth) {
  return guarded([&] {
    require_handle(s, "spanner");
    PathStats st;
    auto path = find_path(s->s, s->s.tree.idx(u), s->s.tree.idx(v), &st);
    std::vector<int64_t> labels;
    double w = 0;
    for (size_t i = 0; i < path.size(); i++) {
      labels.push_back(s->s.tree.label[path[i]]);
      if (i + 1 < path.size()) w += s->s.edges[s->s.edge_between(path[i], path[i + 1])].w;
    }
    if (weight) *weight = w;
    if (hops) *hops = st.hops;
    if (nav_depth) *nav_depth = st.nav_depth;
    return put_array(labels, verts, cap, need);
  });
}

void hn_spanner_free(hn_spanner* s) { delete s; }

hn_status hn_annotation_build(const hn_spanner* s, const void* fwd_vals, const void* bwd_vals,
                              size_t val_size, hn_semigroup_op op, void* ctx,
                              hn_annotation** out) {
  return guarded([&] {
    require_handle(s, "spanner");
    require_handle(fwd_vals, "forward values");
    require_handle(bwd_vals, "backward values");
    require_handle((const void*)op, "semigroup op");
    require_handle(out, "output");
    if (val_size == 0) throw InputError("value size must be positive");
    size_t m = s->s.tree.edges.size();
    std::vector<EdgeFold<Blob>> vals(m);
    auto grab = [&](const void* base, size_t i) {
      const unsigned char* p = (const unsigned char*)base + i * val_size;
      return Blob{std::vector<unsigned char>(p, p + val_size)};
    };
    for (size_t i = 0; i < m; i++) {
      vals[i].fwd = grab(fwd_vals, i);
      vals[i].bwd = grab(bwd_vals, i);
    }
    auto combine = [op, ctx, val_size](const Blob& a, const Blob& b) {
      Blob r;
      r.b.resize(val_size);
      op(ctx, a.b.data(), b.b.data(), r.b.data());
      return r;
    };
    auto* h = new hn_annotation{s, annotate(s->s, vals, combine), op, ctx, val_size};
    *out = h;
    return HN_OK;
  });
}

hn_status hn_annotation_query(const hn_annotation* a, int64_t u, int64_t v, void* out,
                              int* has_value, int64_t* ops) {
  return guarded([&] {
    require_handle(a, "annotation");
    require_handle(out, "output");
    const HopSpanner& s = a->sp->s;
    auto combine = [&](const Blob& x, const Blob& y) {
      Blob r;
      r.b.resize(a->val_size);
      a->op(a->ctx, x.b.data(), y.b.data(), r.b.data());
      return r;
    };
    long long count = 0;
    auto got = fold_along(s, a->ann, find_path(s, s.tree.idx(u), s.tree.idx(v)), combine, &count);
    if (has_value) *has_value = got.has_value() ? 1 : 0;
    if (ops) *ops = count;
    if (got) std::memcpy(out, got->b.data(), a->val_size);
    return HN_OK;
  });
}

void hn_annotation_free(hn_annotation* a) { delete a; }

hn_status hn_metric_parse(const char* text, hn_metric** out) {
  return guarded([&] {
    require_handle(text, "text");
    require_handle(out, "output");
    *out = new hn_metric{parse_metric(text)};
    return HN_OK;
  });
}

hn_status hn_metric_from_tree(const hn_tree* t, hn_metric** out) {
  return guarded([&] {
    require_handle(t, "tree");
    require_handle(out, "output");
    *out = new hn_metric{tree_metric(t->t)};
    return HN_OK;
  });
}

hn_status hn_metric_format(const hn_metric* m, char* buf, size_t cap, size_t* need) {
  return guarded([&] {
    require_handle(m, "metric");
    return put_text(format_metric(m->m), buf, cap, need);
  });
}

hn_status hn_metric_size(const hn_metric* m, int64_t* n) {
  return guarded([&] {
    require_handle(m, "metric");
    require_handle(n, "output");
    *n = m->m.n;
    return HN_OK;
  });
}

hn_status hn_metric_point(const hn_metric* m, int64_t index, int64_t* id) {
  return guarded([&] {
    require_handle(m, "metric");
    require_handle(id, "output");
    if (index < 0 || index >= m->m.n) throw InputError("point index out of range");
    *id = m->m.pid[index];
    return HN_OK;
  });
}

hn_status hn_metric_distance(const hn_metric* m, int64_t a, int64_t b, double* out) {
  return guarded([&] {
    require_handle(m, "metric");
    require_handle(out, "output");
    *out = m->m.at(m->m.ix(a), m->m.ix(b));
    return HN_OK;
  });
}

void hn_metric_free(hn_metric* m) { delete m; }

hn_status hn_cover_star(const hn_metric* m, hn_cover** out) {
  return guarded([&] {
    require_handle(m, "metric");
    require_handle(out, "output");
    *out = new hn_cover{star_cover(m->m)};
    return HN_OK;
  });
}

hn_status hn_cover_single_tree(const hn_tree* t, hn_cover** out) {
  return guarded([&] {
    require_handle(t, "tree");
    require_handle(out, "output");
    *out = new hn_cover{single_tree_cover(t->t)};
    return HN_OK;
  });
}

hn_status hn_cover_load(const char* text, const hn_metric* m, hn_cover** out) {
  return guarded([&] {
    require_handle(text, "text");
    require_handle(m, "metric");
    require_handle(out, "output");
    *out = new hn_cover{load_cover(text, m->m)};
    return HN_OK;
  });
}

hn_status hn_cover_format(const hn_cover* c, char* buf, size_t cap, size_t* need) {
  return guarded([&] {
    require_handle(c, "cover");
    return put_text(format_cover(c->c), buf, cap, need);
  });
}

hn_status hn_cover_shape(const hn_cover* c, double* gamma, int* zeta) {
  return guarded([&] {
    require_handle(c, "cover");
    if (gamma) *gamma = c->c.gamma;
    if (zeta) *zeta = c->c.zeta();
    return HN_OK;
  });
}

void hn_cover_free(hn_cover* c) { delete c; }

hn_status hn_navigator_build(const hn_metric* m, const hn_cover* c, int k, hn_navigator** out) {
  return guarded([&] {
    require_handle(m, "metric");
    require_handle(c, "cover");
    require_handle(out, "output");
    *out = new hn_navigator{build_navigator(m->m, c->c, k)};
    return HN_OK;
  });
}

hn_status hn_navigator_edge_count(const hn_navigator* nav, int64_t* out) {
  return guarded([&] {
    require_handle(nav, "navigator");
    require_handle(out, "output");
    *out = nav->nav.total_edges();
    return HN_OK;
  });
}

hn_status hn_navigator_path(const hn_navigator* nav, int64_t u, int64_t v, int include_steiner,
                            int64_t* verts, size_t cap, size_t* need, double* weight, int* hops,
                            int* tree) {
  return guarded([&] {
    require_handle(nav, "navigator");
    auto p = metric_find_path(nav->nav, u, v, include_steiner != 0);
    std::vector<int64_t> labels(p.points.begin(), p.points.end());
    if (weight) *weight = p.weight;
    if (hops) *hops = p.hops;
    if (tree) *tree = p.tree;
    return put_array(labels, verts, cap, need);
  });
}

void hn_navigator_free(hn_navigator* nav) { delete nav; }

hn_status hn_spt(const hn_navigator* nav, int64_t root, int64_t* ids, int64_t* parents,
                 double* dists, size_t cap, size_t* need) {
  return guarded([&] {
    require_handle(nav, "navigator");
    auto r = approximate_spt(nav->nav, root);
    size_t n = r.verts.size();
    if (need) *need = n;
    if (!ids && !parents && !dists) return HN_OK;
    if (cap < n) throw InputError("array buffer too small");
    for (size_t i = 0; i < n; i++) {
      long long v = r.verts[i];
      if (ids) ids[i] = v;
      if (parents) parents[i] = r.parent.count(v) ? r.parent.at(v) : v;
      if (dists) dists[i] = r.dist.at(v);
    }
    return HN_OK;
  });
}

hn_status hn_mst(const hn_navigator* nav, int64_t* ea, int64_t* eb, double* ew, size_t cap,
                 size_t* need, double* weight, double* base_weight, int64_t* union_edges) {
  return guarded([&] {
    require_handle(nav, "navigator");
    auto r = approximate_mst(nav->nav);
    size_t n = r.tree_edges.size();
    if (need) *need = n;
    if (weight) *weight = r.weight;
    if (base_weight) *base_weight = r.base_weight;
    if (union_edges) *union_edges = (int64_t)r.union_edges.size();
    if (!ea && !eb && !ew) return HN_OK;
    if (cap < n) throw InputError("array buffer too small");
    for (size_t i = 0; i < n; i++) {
      auto [a, b, w] = r.tree_edges[i];
      if (ea) ea[i] = a;
      if (eb) eb[i] = b;
      if (ew) ew[i] = w;
    }
    return HN_OK;
  });
}

hn_status hn_sparsify(const hn_navigator* nav, const int64_t* ga, const int64_t* gb, size_t glen,
                      int64_t* ea, int64_t* eb, double* ew, size_t cap, size_t* need,
                      double* weight, double* input_weight) {
  return guarded([&] {
    require_handle(nav, "navigator");
    if (glen > 0) {
      require_handle(ga, "graph endpoints");
      require_handle(gb, "graph endpoints");
    }
    std::vector<std::pair<long long, long long>> graph(glen);
    for (size_t i = 0; i < glen; i++) graph[i] = {ga[i], gb[i]};
    auto r = sparsify(nav->nav, graph);
    size_t n = r.edges.size();
    if (need) *need = n;
    if (weight) *weight = r.weight;
    if (input_weight) *input_weight = r.input_weight;
    if (!ea && !eb && !ew) return HN_OK;
    if (cap < n) throw InputError("array buffer too small");
    for (size_t i = 0; i < n; i++) {
      auto [a, b, w] = r.edges[i];
      if (ea) ea[i] = a;
      if (eb) eb[i] = b;
      if (ew) ew[i] = w;
    }
    return HN_OK;
  });
}

hn_status hn_greedy_spanner(const hn_metric* m, double beta, int64_t* ea, int64_t* eb, size_t cap,
                            size_t* need) {
  return guarded([&] {
    require_handle(m, "metric");
    auto edges = greedy_spanner_edges(m->m, beta);
    size_t n = edges.size();
    if (need) *need = n;
    if (!ea && !eb) return HN_OK;
    if (cap < n) throw InputError("array buffer too small");
    for (size_t i = 0; i < n; i++) {
      if (ea) ea[i] = edges[i].first;
      if (eb) eb[i] = edges[i].second;
    }
    return HN_OK;
  });
}

hn_status hn_verifier_build(const hn_tree* t, int k, hn_verifier** out) {
  return guarded([&] {
    require_handle(t, "tree");
    require_handle(out, "output");
    *out = new hn_verifier{make_verifier(t->t, k)};
    return HN_OK;
  });
}

hn_status hn_verify_edge(const hn_verifier* v, int64_t u, int64_t v2, double w, int optimized,
                         int* heavier, int64_t* comparisons) {
  return guarded([&] {
    require_handle(v, "verifier");
    auto r = verify_mst_edge(v->v, u, v2, w, optimized != 0);
    if (heavier) *heavier = r.heavier ? 1 : 0;
    if (comparisons) *comparisons = r.comparisons;
    return HN_OK;
  });
}

void hn_verifier_free(hn_verifier* v) { delete v; }

namespace {

hn_status put_route(const RouteResult& r, hn_route_info* info, int64_t* trace, size_t trace_cap,
                    size_t* trace_need, char* reason, size_t reason_cap) {
  if (info) {
    info->delivered = r.delivered ? 1 : 0;
    info->hops = r.hops;
    info->weight = r.weight;
    info->tree = r.tree;
    info->max_comparisons = r.max_comparisons;
  }
  if (reason && reason_cap > 0) {
    size_t n = std::min(reason_cap - 1, r.drop_reason.size());
    std::memcpy(reason, r.drop_reason.data(), n);
    reason[n] = 0;
  }
  std::vector<int64_t> t(r.trace.begin(), r.trace.end());
  return put_array(t, trace, trace_cap, trace_need);
}

}  // namespace

hn_status hn_routing_build(const hn_tree* t, uint64_t seed, hn_routing** out) {
  return guarded([&] {
    require_handle(t, "tree");
    require_handle(out, "output");
    *out = new hn_routing{build_routing(t->t, seed)};
    return HN_OK;
  });
}

hn_status hn_route(const hn_routing* r, int64_t from, int64_t to, hn_route_info* info,
                   int64_t* trace, size_t trace_cap, size_t* trace_need, char* reason,
                   size_t reason_cap) {
  return guarded([&] {
    require_handle(r, "routing");
    return put_route(route(r->rs, from, to), info, trace, trace_cap, trace_need, reason,
                     reason_cap);
  });
}

hn_status hn_routing_audit(const hn_routing* r, int64_t* max_entries, int64_t* max_bits) {
  return guarded([&] {
    require_handle(r, "routing");
    int64_t entries = 0, bits = 0;
    for (int v = 0; v < r->rs.tree.n; v++) {
      int64_t e = (int64_t)std::max(r->rs.addr[v].down.size(), r->rs.table[v].up.size());
      entries = std::max(entries, e);
      bits = std::max(bits, (int64_t)table_bits(r->rs, v));
    }
    if (max_entries) *max_entries = entries;
    if (max_bits) *max_bits = bits;
    return HN_OK;
  });
}

void hn_routing_free(hn_routing* r) { delete r; }

hn_status hn_cover_routing_build(const hn_metric* m, const hn_cover* c, uint64_t seed,
                                 hn_cover_routing** out) {
  return guarded([&] {
    require_handle(m, "metric");
    require_handle(c, "cover");
    require_handle(out, "output");
    *out = new hn_cover_routing{build_cover_routing(m->m, c->c, seed)};
    return HN_OK;
  });
}

hn_status hn_cover_route(const hn_cover_routing* cr, int64_t from, int64_t to,
                         hn_route_info* info, int64_t* trace, size_t trace_cap,
                         size_t* trace_need, char* reason, size_t reason_cap) {
  return guarded([&] {
    require_handle(cr, "cover routing");
    return put_route(cover_route(cr->cr, from, to), info, trace, trace_cap, trace_need, reason,
                     reason_cap);
  });
}

void hn_cover_routing_free(hn_cover_routing* cr) { delete cr; }

}  // extern "C"
