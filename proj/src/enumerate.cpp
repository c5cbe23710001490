#include "f1rep/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace f1rep {

std::vector<DimVector> compositions(int total, int parts) {
  std::vector<DimVector> out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  DimVector cur(parts, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == parts - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

namespace {

bool gamma_is_acyclic(const ColoredQuiver& g) {
  int n = g.num_vertices();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const auto& a : g.arrows) {
    succ[a.src].push_back(a.tgt);
    ++indeg[a.tgt];
  }
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  int removed = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++removed;
    for (int v : succ[u]) {
      if (--indeg[v] == 0) stack.push_back(v);
    }
  }
  return removed == n;
}

}  // namespace

std::vector<IsoClassEntry> enumerate_classes(const Quiver& q, const DimVector& d,
                                             bool nilpotent_only) {
  if (static_cast<int>(d.size()) != q.num_vertices) {
    throw std::invalid_argument("enumerate_classes: dim vector length mismatch");
  }
  int na = q.num_arrows();
  std::vector<std::vector<F1Map>> spaces(na);
  for (int a = 0; a < na; ++a) {
    spaces[a] = enumerate_maps(d[q.source(a)], d[q.target(a)]);
    if (nilpotent_only && q.source(a) == q.target(a)) {
      // any loop map of a nilpotent representation is itself nilpotent
      std::erase_if(spaces[a], [](const F1Map& f) { return !is_nilpotent(f); });
    }
  }
  std::vector<IsoClassEntry> out;
  std::unordered_set<CanonicalKey> seen;
  std::vector<size_t> idx(na, 0);
  std::vector<F1Map> maps(na, F1Map(0, 0));
  while (true) {
    for (int a = 0; a < na; ++a) maps[a] = spaces[a][idx[a]];
    Representation rep(q, d, maps);
    ColoredQuiver g = gamma_of(rep);
    bool nil = gamma_is_acyclic(g);
    if (!nilpotent_only || nil) {
      CanonicalKey key = canonical_key(g);
      if (seen.insert(key).second) {
        out.push_back({std::move(key), std::move(rep), is_connected(g), nil});
      }
    }
    int a = na - 1;
    while (a >= 0 && ++idx[a] == spaces[a].size()) idx[a--] = 0;
    if (a < 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](const IsoClassEntry& x, const IsoClassEntry& y) {
              return x.key < y.key;
            });
  return out;
}

std::vector<Representation> enumerate_reps(const Quiver& q, const DimVector& d,
                                           bool nilpotent_only) {
  std::vector<Representation> out;
  for (auto& e : enumerate_classes(q, d, nilpotent_only)) {
    out.push_back(std::move(e.rep));
  }
  return out;
}

IsoClassTable build_iso_table(const Quiver& q, int max_total_dim,
                              bool nilpotent_only) {
  IsoClassTable table;
  table.quiver = q;
  for (int t = 0; t <= max_total_dim; ++t) {
    std::vector<IsoClassEntry> merged;
    for (const auto& d : compositions(t, q.num_vertices)) {
      auto part = enumerate_classes(q, d, nilpotent_only);
      merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    std::sort(merged.begin(), merged.end(),
              [](const IsoClassEntry& x, const IsoClassEntry& y) {
                return x.key < y.key;
              });
    table.by_dim[t] = std::move(merged);
  }
  return table;
}

long long ni(const Quiver& q, int n) {
  long long count = 0;
  for (const auto& d : compositions(n, q.num_vertices)) {
    for (const auto& e : enumerate_classes(q, d, true)) {
      if (e.indecomposable) ++count;
    }
  }
  return count;
}

long long i_growth(const Quiver& q, int n) {
  long long count = 0;
  for (const auto& d : compositions(n, q.num_vertices)) {
    for (const auto& e : enumerate_classes(q, d, false)) {
      if (e.indecomposable) ++count;
    }
  }
  return count;
}

namespace {

// Non-increasing chain-length partitions of d.
std::vector<std::vector<int>> partitions_of(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

struct LnSweep {
  int loops;
  int d;
  bool connected_only;
  std::vector<int> skeleton_succ;            // color-0 successor or -1
  std::vector<std::vector<int>> extra_succ;  // per extra color
  std::unordered_set<CanonicalKey> keys;

  // scratch buffers, reused across the sweep
  std::vector<int> indeg, stack, uf;

  int uf_find(int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  }

  bool acyclic_and_connected_ok() {
    indeg.assign(d, 0);
    auto count_edges = [&](const std::vector<int>& succ) {
      for (int v = 0; v < d; ++v) {
        if (succ[v] >= 0) ++indeg[succ[v]];
      }
    };
    count_edges(skeleton_succ);
    for (const auto& s : extra_succ) count_edges(s);
    stack.clear();
    for (int v = 0; v < d; ++v) {
      if (indeg[v] == 0) stack.push_back(v);
    }
    int removed = 0;
    auto relax = [&](const std::vector<int>& succ, int u) {
      int v = succ[u];
      if (v >= 0 && --indeg[v] == 0) stack.push_back(v);
    };
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++removed;
      relax(skeleton_succ, u);
      for (const auto& s : extra_succ) relax(s, u);
    }
    if (removed != d) return false;
    if (!connected_only) return true;
    if (d == 0) return false;
    uf.resize(d);
    for (int v = 0; v < d; ++v) uf[v] = v;
    int comps = d;
    auto unite = [&](const std::vector<int>& succ) {
      for (int v = 0; v < d; ++v) {
        if (succ[v] < 0) continue;
        int a = uf_find(v), b = uf_find(succ[v]);
        if (a != b) {
          uf[a] = b;
          --comps;
        }
      }
    };
    unite(skeleton_succ);
    for (const auto& s : extra_succ) unite(s);
    return comps == 1;
  }

  void emit() {
    if (!acyclic_and_connected_ok()) return;
    ColoredQuiver g;
    g.base = loop_quiver(loops);
    g.vertex_color.assign(d, 0);
    for (int v = 0; v < d; ++v) {
      if (skeleton_succ[v] >= 0) g.arrows.push_back({v, skeleton_succ[v], 0});
    }
    for (size_t c = 0; c < extra_succ.size(); ++c) {
      for (int v = 0; v < d; ++v) {
        if (extra_succ[c][v] >= 0) {
          g.arrows.push_back({v, extra_succ[c][v], static_cast<int>(c) + 1});
        }
      }
    }
    keys.insert(canonical_key(g));
  }

  // Assign extra color `color` slot by slot; `used` marks taken targets.
  void assign(int color, int v, std::vector<std::vector<char>>& used) {
    if (v == d) {
      if (color == loops - 2) {
        emit();
      } else {
        assign(color + 1, 0, used);
      }
      return;
    }
    auto& succ = extra_succ[color];
    succ[v] = -1;
    assign(color, v + 1, used);
    for (int t = 0; t < d; ++t) {
      if (t == v || used[color][t]) continue;  // a self-loop is never acyclic
      succ[v] = t;
      used[color][t] = 1;
      assign(color, v + 1, used);
      used[color][t] = 0;
    }
    succ[v] = -1;
  }
};

}  // namespace

std::vector<CanonicalKey> ln_class_keys(int loops, int d, bool connected_only) {
  if (loops < 1) {
    throw std::invalid_argument("ln_class_keys: at least one loop required");
  }
  LnSweep sweep;
  sweep.loops = loops;
  sweep.d = d;
  sweep.connected_only = connected_only;
  sweep.extra_succ.assign(loops - 1, std::vector<int>(d, -1));
  for (const auto& part : partitions_of(d)) {
    sweep.skeleton_succ.assign(d, -1);
    int at = 0;
    for (int len : part) {
      for (int k = 0; k + 1 < len; ++k) sweep.skeleton_succ[at + k] = at + k + 1;
      at += len;
    }
    if (loops == 1) {
      sweep.emit();
    } else {
      std::vector<std::vector<char>> used(loops - 1, std::vector<char>(d, 0));
      sweep.assign(0, 0, used);
    }
  }
  std::vector<CanonicalKey> out(sweep.keys.begin(), sweep.keys.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_cycle_ordering(const Quiver& c) {
  int ell = c.num_vertices;
  if (ell < 1 || c.num_arrows() != ell) {
    throw std::invalid_argument("expected a cycle quiver with cyclically ordered vertices");
  }
  for (int a = 0; a < ell; ++a) {
    int u = a, v = (a + 1) % ell;
    bool ok = (c.source(a) == u && c.target(a) == v) ||
              (c.source(a) == v && c.target(a) == u);
    if (!ok) {
      throw std::invalid_argument("expected arrow j to connect vertices j and j+1");
    }
  }
}

bool cycle_is_equioriented(const Quiver& c) {
  int ell = c.num_vertices;
  if (ell == 1) return true;  // a loop is a directed cycle
  bool all_fwd = true, all_bwd = true;
  for (int a = 0; a < ell; ++a) {
    if (c.source(a) == a) {
      all_bwd = false;
    } else {
      all_fwd = false;
    }
  }
  return all_fwd || all_bwd;
}

}  // namespace

Representation build_I(const Quiver& cycle, int n, int i) {
  require_cycle_ordering(cycle);
  int ell = cycle.num_vertices;
  if (n < 1) throw std::invalid_argument("build_I: n must be positive");
  if (i < 1 || i > ell) throw std::invalid_argument("build_I: start vertex out of range");
  // element k (1..n) sits at vertex (k - i) mod ell; local ids count upward in k
  std::vector<std::vector<int>> members(ell);
  std::vector<int> local(n + 1, 0), vertex_of(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    int j = ((k - i) % ell + ell) % ell;
    vertex_of[k] = j;
    members[j].push_back(k);
    local[k] = static_cast<int>(members[j].size());
  }
  DimVector dims(ell);
  for (int j = 0; j < ell; ++j) dims[j] = static_cast<int>(members[j].size());
  std::vector<F1Map> maps;
  maps.reserve(ell);
  for (int a = 0; a < ell; ++a) {
    maps.emplace_back(dims[cycle.source(a)], dims[cycle.target(a)]);
  }
  for (int k = 1; k < n; ++k) {
    // the arrow between vertex_of[k] and vertex_of[k+1] is arrow vertex_of[k]
    int a = vertex_of[k];
    if (cycle.source(a) == vertex_of[k]) {
      maps[a].image[local[k] - 1] = local[k + 1];
    } else {
      maps[a].image[local[k + 1] - 1] = local[k];
    }
  }
  for (auto& f : maps) f = F1Map(f.src_dim, f.tgt_dim, f.image);
  return Representation(cycle, std::move(dims), std::move(maps));
}

Representation build_I_tilde(const Quiver& cycle, int w, int i) {
  require_cycle_ordering(cycle);
  if (cycle_is_equioriented(cycle)) {
    throw std::invalid_argument("build_I_tilde: construction requires an acyclic cycle");
  }
  if (w < 1) throw std::invalid_argument("build_I_tilde: w must be positive");
  int ell = cycle.num_vertices;
  int n = w * ell;
  Representation rep = build_I(cycle, n, i);
  // Close the chain: the arrow between the vertices of elements n and 1.
  int v1 = ((1 - i) % ell + ell) % ell;   // vertex of element 1
  int vn = ((n - i) % ell + ell) % ell;   // vertex of element n, v1 = vn + 1
  int a = vn;
  auto local_of = [&](int k, int vertex) {
    int cnt = 0;
    for (int kk = 1; kk <= k; ++kk) {
      if (((kk - i) % ell + ell) % ell == vertex) ++cnt;
    }
    return cnt;
  };
  if (cycle.source(a) == v1) {
    rep.maps[a].image[local_of(1, v1) - 1] = local_of(n, vn);
  } else {
    rep.maps[a].image[local_of(n, vn) - 1] = local_of(1, v1);
  }
  // re-validate the touched map
  rep.maps[a] = F1Map(rep.maps[a].src_dim, rep.maps[a].tgt_dim, rep.maps[a].image);
  return rep;
}

Representation build_M(const Quiver& cycle, int n) {
  require_cycle_ordering(cycle);
  if (n < 0) throw std::invalid_argument("build_M: negative dimension");
  if (cycle.source(0) != 0) {
    throw std::invalid_argument("build_M: arrow 0 must start at vertex 0");
  }
  int ell = cycle.num_vertices;
  DimVector dims(ell, n);
  std::vector<F1Map> maps;
  maps.reserve(ell);
  for (int a = 0; a < ell; ++a) {
    if (a == 0) {
      std::vector<int> img(n);
      for (int k = 1; k <= n; ++k) img[k - 1] = k - 1;
      maps.emplace_back(n, n, std::move(img));
    } else {
      maps.push_back(F1Map::identity(n));
    }
  }
  return Representation(cycle, std::move(dims), std::move(maps));
}

Representation delete_loop(const Representation& m, int i) {
  if (m.quiver.num_vertices != 1) {
    throw std::invalid_argument("delete_loop: representation must live on a loop quiver");
  }
  int n = m.quiver.num_arrows();
  if (i < 0 || i >= n) throw std::invalid_argument("delete_loop: no such loop");
  std::vector<F1Map> maps;
  for (int a = 0; a < n; ++a) {
    if (a != i) maps.push_back(m.maps[a]);
  }
  return Representation(loop_quiver(n - 1), m.dims, std::move(maps));
}

namespace {

// Maximal c-colored paths of the colored quiver of an L_n representation,
// as (source, target) element pairs (0-based), including trivial paths.
std::vector<std::pair<int, int>> maximal_paths(const F1Map& f) {
  int d = f.src_dim;
  std::vector<char> has_pred(d + 1, 0);
  for (int k = 1; k <= d; ++k) {
    if (f(k) != 0) has_pred[f(k)] = 1;
  }
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= d; ++k) {
    if (has_pred[k]) continue;
    int end = k;
    while (f(end) != 0) end = f(end);
    out.push_back({k - 1, end - 1});
  }
  return out;
}

}  // namespace

Representation f_reduce(const Representation& m) {
  if (m.quiver.num_vertices != 1 || m.quiver.num_arrows() < 2) {
    throw std::invalid_argument("f_reduce: representation must live on L_n, n >= 2");
  }
  if (!is_nilpotent_rep(m)) {
    throw std::invalid_argument("f_reduce: representation must be nilpotent");
  }
  int n = m.quiver.num_arrows();
  int d = m.dims[0];
  ColoredQuiver g;
  g.base = loop_quiver(n - 1);
  g.vertex_color.assign(2 * d, 0);
  // top copy: arrow n-2 deleted, arrow n-1 relabeled n-2 (0-based)
  ColoredQuiver gm = gamma_of(m);
  for (const auto& a : gm.arrows) {
    if (a.color != n - 2) {
      g.arrows.push_back({a.src, a.tgt, a.color == n - 1 ? n - 2 : a.color});
    }
  }
  // bottom copy: arrow n-1 deleted
  for (const auto& a : gm.arrows) {
    if (a.color != n - 1) {
      g.arrows.push_back({a.src + d, a.tgt + d, a.color});
    }
  }
  // joins: one c-colored arrow per maximal c-colored path of Gamma_M, from
  // the path target in the top copy to the path source in the bottom copy
  int join_colors = std::max(1, n - 2);
  for (int c = 0; c < join_colors; ++c) {
    for (auto [src, tgt] : maximal_paths(m.maps[c])) {
      g.arrows.push_back({tgt, src + d, c});
    }
  }
  if (!check_admissible(g)) {
    throw std::domain_error(
        "f_reduce: gluing does not yield a valid colored quiver for this input");
  }
  return rep_of(g);
}

Representation embed_loops(const Representation& m) {
  if (!is_nilpotent_rep(m)) {
    throw std::invalid_argument("embed_loops: representation must be nilpotent");
  }
  int nv = m.quiver.num_vertices;
  int na = m.quiver.num_arrows();
  int d = m.total_dim();
  ColoredQuiver gm = gamma_of(m);
  ColoredQuiver g;
  g.base = loop_quiver(nv + na);
  g.vertex_color.assign(2 * d, 0);
  for (const auto& a : gm.arrows) {
    g.arrows.push_back({a.src, a.tgt, nv + a.color});
  }
  // one leaf per vertex, its arrow colored by the vertex color
  for (int x = 0; x < d; ++x) {
    g.arrows.push_back({d + x, x, gm.vertex_color[x]});
  }
  return rep_of(g);
}

Representation embed_rank2(const Representation& m, const Quiver& q) {
  if (m.quiver != loop_quiver(2)) {
    throw std::invalid_argument("embed_rank2: source representation must live on L_2");
  }
  if (!is_nilpotent_rep(m)) {
    throw std::invalid_argument("embed_rank2: representation must be nilpotent");
  }
  auto pair = fundamental_cycle_pair(q);
  if (!pair) {
    throw std::invalid_argument("embed_rank2: target quiver must have cycle rank >= 2");
  }
  std::vector<char> in_s_vertex(q.num_vertices, 0), in_s_arrow(q.num_arrows(), 0);
  for (const Subquiver* s : {&pair->cycle_a, &pair->cycle_b, &pair->path}) {
    for (int v : s->vertices) in_s_vertex[v] = 1;
    for (int a : s->arrows) in_s_arrow[a] = 1;
  }
  int dim = m.dims[0];
  DimVector dims(q.num_vertices, 0);
  for (int v = 0; v < q.num_vertices; ++v) {
    if (in_s_vertex[v]) dims[v] = dim;
  }
  std::vector<F1Map> maps;
  maps.reserve(q.num_arrows());
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (a == pair->alpha) {
      maps.push_back(m.maps[0]);
    } else if (a == pair->beta) {
      maps.push_back(m.maps[1]);
    } else if (in_s_arrow[a]) {
      maps.push_back(F1Map::identity(dim));
    } else {
      maps.push_back(F1Map(dims[q.source(a)], dims[q.target(a)]));
    }
  }
  return Representation(q, std::move(dims), std::move(maps));
}

bool nil_leq_check(const Quiver& q, const Quiver& q2, int C, const Rational& D,
                   int n_max) {
  if (C < 1 || n_max < 1 || D.num <= 0) {
    throw std::invalid_argument("nil_leq_check: C, D, n_max must be positive");
  }
  for (int n = 1; n <= n_max; ++n) {
    long long lhs = ni(q, n);
    long long rhs = ni(q2, C * n);
    // lhs <= D * rhs
    if (lhs * D.den > D.num * rhs) return false;
  }
  return true;
}

std::vector<Representation> pseudotree_family(int ell, int n) {
  if (ell < 1 || n < 1) {
    throw std::invalid_argument("pseudotree_family: ell and n must be positive");
  }
  Quiver q = pendant_cycle_quiver(ell);
  int N = 3 * n * ell;
  std::vector<Representation> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    int chain_len = N - i;
    ColoredQuiver g;
    g.base = q;
    for (int k = 1; k <= chain_len; ++k) g.vertex_color.push_back((k - 1) % ell);
    for (int k = 1; k < chain_len; ++k) {
      g.arrows.push_back({k - 1, k, (k - 1) % ell});
    }
    for (int t = 0; t < i; ++t) {
      int leaf = chain_len + t;
      g.vertex_color.push_back(ell);
      g.arrows.push_back({leaf, ell * t, ell});  // into chain element 1 + ell*t
    }
    out.push_back(rep_of(g));
  }
  return out;
}

}  // namespace f1rep
