#include "f1rep/rep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace f1rep {

Representation::Representation(Quiver q, DimVector d, std::vector<F1Map> m)
    : quiver(std::move(q)), dims(std::move(d)), maps(std::move(m)) {
  if (static_cast<int>(dims.size()) != quiver.num_vertices) {
    throw std::invalid_argument("Representation: dim vector length mismatch");
  }
  for (int x : dims) {
    if (x < 0) throw std::invalid_argument("Representation: negative dimension");
  }
  if (static_cast<int>(maps.size()) != quiver.num_arrows()) {
    throw std::invalid_argument("Representation: one map per arrow required");
  }
  for (int a = 0; a < quiver.num_arrows(); ++a) {
    if (maps[a].src_dim != dims[quiver.source(a)] ||
        maps[a].tgt_dim != dims[quiver.target(a)]) {
      throw std::invalid_argument("Representation: map endpoint dimension mismatch");
    }
  }
}

int Representation::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

Representation zero_rep(const Quiver& q) {
  DimVector d(q.num_vertices, 0);
  std::vector<F1Map> m(q.num_arrows(), F1Map(0, 0));
  return Representation(q, std::move(d), std::move(m));
}

Representation simple_rep(const Quiver& q, int vertex) {
  DimVector d(q.num_vertices, 0);
  d.at(vertex) = 1;
  std::vector<F1Map> m;
  m.reserve(q.num_arrows());
  for (int a = 0; a < q.num_arrows(); ++a) {
    m.emplace_back(d[q.source(a)], d[q.target(a)]);
  }
  return Representation(q, std::move(d), std::move(m));
}

Representation jordan_chain(int len) {
  std::vector<int> img(len);
  for (int k = 1; k <= len; ++k) img[k - 1] = k - 1;
  return Representation(loop_quiver(1), {len}, {F1Map(len, len, std::move(img))});
}

namespace {

// Global ids for nonzero elements: vertex blocks in order, element k at
// vertex u becomes off[u] + k - 1.
std::vector<int> offsets(const Representation& r) {
  std::vector<int> off(r.dims.size() + 1, 0);
  for (size_t u = 0; u < r.dims.size(); ++u) off[u + 1] = off[u] + r.dims[u];
  return off;
}

// Successor lists of the element digraph (one edge per arrow action).
std::vector<std::vector<int>> element_succ(const Representation& r) {
  auto off = offsets(r);
  std::vector<std::vector<int>> succ(r.total_dim());
  for (int a = 0; a < r.quiver.num_arrows(); ++a) {
    int s = r.quiver.source(a), t = r.quiver.target(a);
    for (int k = 1; k <= r.dims[s]; ++k) {
      int v = r.maps[a](k);
      if (v != 0) succ[off[s] + k - 1].push_back(off[t] + v - 1);
    }
  }
  return succ;
}

bool digraph_acyclic(const std::vector<std::vector<int>>& succ) {
  int n = static_cast<int>(succ.size());
  std::vector<int> indeg(n, 0);
  for (const auto& out : succ) {
    for (int v : out) ++indeg[v];
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

// Reverse topological order (sinks first); requires acyclic input.
std::vector<int> reverse_topo(const std::vector<std::vector<int>>& succ) {
  int n = static_cast<int>(succ.size());
  std::vector<int> indeg(n, 0);
  for (const auto& out : succ) {
    for (int v : out) ++indeg[v];
  }
  std::vector<int> order, stack;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) stack.push_back(v);
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (int v : succ[u]) {
      if (--indeg[v] == 0) stack.push_back(v);
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

// The representation on a subset of elements that is closed under all arrow
// maps, renumbered per vertex in ascending order.
Representation restrict_to(const Representation& r,
                           const std::vector<char>& keep) {
  auto off = offsets(r);
  int nv = r.quiver.num_vertices;
  DimVector d(nv, 0);
  std::vector<std::vector<int>> local(nv);  // old element -> new id per vertex
  for (int u = 0; u < nv; ++u) {
    local[u].assign(r.dims[u] + 1, 0);
    for (int k = 1; k <= r.dims[u]; ++k) {
      if (keep[off[u] + k - 1]) local[u][k] = ++d[u];
    }
  }
  std::vector<F1Map> maps;
  maps.reserve(r.quiver.num_arrows());
  for (int a = 0; a < r.quiver.num_arrows(); ++a) {
    int s = r.quiver.source(a), t = r.quiver.target(a);
    std::vector<int> img(d[s], 0);
    for (int k = 1; k <= r.dims[s]; ++k) {
      if (local[s][k] == 0) continue;
      int v = r.maps[a](k);
      img[local[s][k] - 1] = v == 0 ? 0 : local[t][v];
    }
    maps.emplace_back(d[s], d[t], std::move(img));
  }
  return Representation(r.quiver, std::move(d), std::move(maps));
}

}  // namespace

bool is_morphism(const Representation& v, const Representation& w,
                 const Morphism& phi) {
  if (v.quiver != w.quiver) return false;
  if (phi.components.size() != static_cast<size_t>(v.quiver.num_vertices)) {
    return false;
  }
  for (int u = 0; u < v.quiver.num_vertices; ++u) {
    if (phi.components[u].src_dim != v.dims[u] ||
        phi.components[u].tgt_dim != w.dims[u]) {
      return false;
    }
  }
  for (int a = 0; a < v.quiver.num_arrows(); ++a) {
    int s = v.quiver.source(a), t = v.quiver.target(a);
    for (int k = 1; k <= v.dims[s]; ++k) {
      if (phi.components[t](v.maps[a](k)) != w.maps[a](phi.components[s](k))) {
        return false;
      }
    }
  }
  return true;
}

bool is_nilpotent_rep(const Representation& v) {
  return digraph_acyclic(element_succ(v));
}

Representation direct_sum_rep(const Representation& v, const Representation& w) {
  if (v.quiver != w.quiver) {
    throw std::invalid_argument("direct_sum_rep: quiver mismatch");
  }
  DimVector d(v.dims.size());
  for (size_t u = 0; u < d.size(); ++u) d[u] = v.dims[u] + w.dims[u];
  std::vector<F1Map> maps;
  maps.reserve(v.maps.size());
  for (size_t a = 0; a < v.maps.size(); ++a) {
    maps.push_back(direct_sum(v.maps[a], w.maps[a]));
  }
  return Representation(v.quiver, std::move(d), std::move(maps));
}

std::vector<Morphism> hom_set(const Representation& v, const Representation& w) {
  if (v.quiver != w.quiver) {
    throw std::invalid_argument("hom_set: quiver mismatch");
  }
  int nv = v.quiver.num_vertices;
  std::vector<std::vector<F1Map>> cand(nv);
  for (int u = 0; u < nv; ++u) cand[u] = enumerate_maps(v.dims[u], w.dims[u]);
  std::vector<Morphism> out;
  std::vector<size_t> idx(nv, 0);
  Morphism phi;
  phi.components.resize(nv, F1Map(0, 0));
  while (true) {
    for (int u = 0; u < nv; ++u) phi.components[u] = cand[u][idx[u]];
    if (is_morphism(v, w, phi)) out.push_back(phi);
    int u = nv - 1;
    while (u >= 0 && ++idx[u] == cand[u].size()) idx[u--] = 0;
    if (u < 0) break;
  }
  return out;
}

bool is_valid_subrep(const Representation& r, const SubRep& s) {
  if (s.subsets.size() != static_cast<size_t>(r.quiver.num_vertices)) return false;
  std::vector<std::vector<char>> in(r.quiver.num_vertices);
  for (int u = 0; u < r.quiver.num_vertices; ++u) {
    in[u].assign(r.dims[u] + 1, 0);
    for (int k : s.subsets[u]) {
      if (k < 1 || k > r.dims[u]) return false;
      in[u][k] = 1;
    }
  }
  for (int a = 0; a < r.quiver.num_arrows(); ++a) {
    int su = r.quiver.source(a), tu = r.quiver.target(a);
    for (int k : s.subsets[su]) {
      int v = r.maps[a](k);
      if (v != 0 && !in[tu][v]) return false;
    }
  }
  return true;
}

std::vector<SubRep> subrepresentations(const Representation& r) {
  int n = r.total_dim();
  auto succ = element_succ(r);
  std::vector<std::vector<char>> masks;
  std::vector<char> chosen(n, 0);
  if (digraph_acyclic(succ)) {
    // Closed subsets of a DAG: walk sinks-first; an element may be chosen
    // only once all its successors are chosen.
    auto order = reverse_topo(succ);
    std::vector<char> cur(n, 0);
    auto rec = [&](auto&& self, size_t i) -> void {
      if (i == order.size()) {
        masks.push_back(cur);
        return;
      }
      int x = order[i];
      self(self, i + 1);
      bool ok = std::all_of(succ[x].begin(), succ[x].end(),
                            [&](int y) { return cur[y]; });
      if (ok) {
        cur[x] = 1;
        self(self, i + 1);
        cur[x] = 0;
      }
    };
    rec(rec, 0);
  } else {
    if (n > 24) {
      throw std::invalid_argument("subrepresentations: non-nilpotent input too large");
    }
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        if (!((mask >> x) & 1)) continue;
        for (int y : succ[x]) {
          if (!((mask >> y) & 1)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        std::vector<char> cur(n, 0);
        for (int x = 0; x < n; ++x) cur[x] = (mask >> x) & 1;
        masks.push_back(std::move(cur));
      }
    }
  }
  std::sort(masks.begin(), masks.end());
  auto off = offsets(r);
  std::vector<SubRep> out;
  out.reserve(masks.size());
  for (const auto& m : masks) {
    SubRep s;
    s.subsets.resize(r.quiver.num_vertices);
    for (int u = 0; u < r.quiver.num_vertices; ++u) {
      for (int k = 1; k <= r.dims[u]; ++k) {
        if (m[off[u] + k - 1]) s.subsets[u].push_back(k);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

Representation sub_to_rep(const Representation& r, const SubRep& s) {
  if (!is_valid_subrep(r, s)) {
    throw std::invalid_argument("sub_to_rep: not a valid subrepresentation");
  }
  auto off = offsets(r);
  std::vector<char> keep(r.total_dim(), 0);
  for (int u = 0; u < r.quiver.num_vertices; ++u) {
    for (int k : s.subsets[u]) keep[off[u] + k - 1] = 1;
  }
  return restrict_to(r, keep);
}

Representation quotient(const Representation& r, const SubRep& s) {
  if (!is_valid_subrep(r, s)) {
    throw std::invalid_argument("quotient: not a valid subrepresentation");
  }
  auto off = offsets(r);
  std::vector<char> keep(r.total_dim(), 1);
  for (int u = 0; u < r.quiver.num_vertices; ++u) {
    for (int k : s.subsets[u]) keep[off[u] + k - 1] = 0;
  }
  return restrict_to(r, keep);
}

long long aut_count(const Representation& r) {
  int nv = r.quiver.num_vertices;
  std::vector<std::vector<F1Map>> cand(nv);
  for (int u = 0; u < nv; ++u) {
    for (auto& f : enumerate_maps(r.dims[u], r.dims[u])) {
      if (f.rank() == r.dims[u]) cand[u].push_back(std::move(f));
    }
  }
  long long count = 0;
  std::vector<size_t> idx(nv, 0);
  Morphism phi;
  phi.components.resize(nv, F1Map(0, 0));
  while (true) {
    for (int u = 0; u < nv; ++u) phi.components[u] = cand[u][idx[u]];
    if (is_morphism(r, r, phi)) ++count;
    int u = nv - 1;
    while (u >= 0 && ++idx[u] == cand[u].size()) idx[u--] = 0;
    if (u < 0) break;
  }
  return count;
}

std::vector<Representation> decompose(const Representation& r) {
  int n = r.total_dim();
  auto succ = element_succ(r);
  std::vector<std::vector<int>> adj(n);
  for (int x = 0; x < n; ++x) {
    for (int y : succ[x]) {
      adj[x].push_back(y);
      adj[y].push_back(x);
    }
  }
  std::vector<int> comp(n, -1);
  int num_comp = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = num_comp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (comp[v] < 0) {
          comp[v] = num_comp;
          stack.push_back(v);
        }
      }
    }
    ++num_comp;
  }
  std::vector<Representation> out;
  out.reserve(num_comp);
  for (int c = 0; c < num_comp; ++c) {
    std::vector<char> keep(n, 0);
    for (int x = 0; x < n; ++x) keep[x] = comp[x] == c;
    out.push_back(restrict_to(r, keep));
  }
  return out;
}

}  // namespace f1rep
