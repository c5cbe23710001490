#include "f1rep/colored.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace f1rep {

namespace {

std::vector<int> offsets(const Representation& r) {
  std::vector<int> off(r.dims.size() + 1, 0);
  for (size_t u = 0; u < r.dims.size(); ++u) off[u + 1] = off[u] + r.dims[u];
  return off;
}

}  // namespace

ColoredQuiver gamma_of(const Representation& v) {
  ColoredQuiver g;
  g.base = v.quiver;
  auto off = offsets(v);
  g.vertex_color.resize(v.total_dim());
  for (int u = 0; u < v.quiver.num_vertices; ++u) {
    for (int k = 1; k <= v.dims[u]; ++k) g.vertex_color[off[u] + k - 1] = u;
  }
  for (int a = 0; a < v.quiver.num_arrows(); ++a) {
    int s = v.quiver.source(a), t = v.quiver.target(a);
    for (int k = 1; k <= v.dims[s]; ++k) {
      int img = v.maps[a](k);
      if (img != 0) g.arrows.push_back({off[s] + k - 1, off[t] + img - 1, a});
    }
  }
  return g;
}

namespace {

bool projection_ok(const ColoredQuiver& g) {
  for (int c : g.vertex_color) {
    if (c < 0 || c >= g.base.num_vertices) return false;
  }
  for (const auto& a : g.arrows) {
    if (a.color < 0 || a.color >= g.base.num_arrows()) return false;
    if (a.src < 0 || a.src >= g.num_vertices() || a.tgt < 0 ||
        a.tgt >= g.num_vertices()) {
      return false;
    }
    if (g.vertex_color[a.src] != g.base.source(a.color) ||
        g.vertex_color[a.tgt] != g.base.target(a.color)) {
      return false;
    }
  }
  return true;
}

bool gamma_acyclic(const ColoredQuiver& g) {
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

bool monochromatic_degrees_ok(const ColoredQuiver& g) {
  // per color, out-degree <= 1 and in-degree <= 1 at every vertex
  std::vector<std::vector<char>> out_used(g.base.num_arrows()),
      in_used(g.base.num_arrows());
  for (int c = 0; c < g.base.num_arrows(); ++c) {
    out_used[c].assign(g.num_vertices(), 0);
    in_used[c].assign(g.num_vertices(), 0);
  }
  for (const auto& a : g.arrows) {
    if (a.color < 0 || a.color >= g.base.num_arrows()) return false;
    if (out_used[a.color][a.src] || in_used[a.color][a.tgt]) return false;
    out_used[a.color][a.src] = 1;
    in_used[a.color][a.tgt] = 1;
  }
  return true;
}

}  // namespace

bool check_admissible(const ColoredQuiver& g) {
  return projection_ok(g) && gamma_acyclic(g) && monochromatic_degrees_ok(g);
}

Representation rep_of(const ColoredQuiver& g) {
  if (!projection_ok(g)) {
    throw std::invalid_argument("rep_of: color projection is not a quiver map");
  }
  if (!monochromatic_degrees_ok(g)) {
    throw std::invalid_argument(
        "rep_of: a monochromatic subquiver branches or merges");
  }
  if (!gamma_acyclic(g)) {
    throw std::invalid_argument("rep_of: colored quiver has an oriented cycle");
  }
  int nv = g.base.num_vertices;
  DimVector dims(nv, 0);
  std::vector<int> local(g.num_vertices(), 0);
  for (int x = 0; x < g.num_vertices(); ++x) local[x] = ++dims[g.vertex_color[x]];
  std::vector<F1Map> maps;
  maps.reserve(g.base.num_arrows());
  for (int a = 0; a < g.base.num_arrows(); ++a) {
    maps.emplace_back(dims[g.base.source(a)], dims[g.base.target(a)]);
  }
  for (const auto& arc : g.arrows) {
    maps[arc.color].image[local[arc.src] - 1] = local[arc.tgt];
  }
  return Representation(g.base, std::move(dims), std::move(maps));
}

namespace {

void push_byte(std::string& s, int v) {
  s.push_back(static_cast<char>(static_cast<unsigned char>(v)));
}

// One connected component viewed as a standalone colored graph with local
// vertex ids.
struct Component {
  std::vector<int> qcolor;                        // per local vertex
  std::vector<ColoredQuiver::Arrow> arcs;         // local endpoints
};

// Refine the coloring to a fixed point of the (own color, colored in/out
// neighborhood) signature map. Colors stay dense in 0..classes-1.
void refine(const Component& c, std::vector<int>& colors) {
  int n = static_cast<int>(colors.size());
  int classes = 1 + (n ? *std::max_element(colors.begin(), colors.end()) : 0);
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) sig[v].push_back(colors[v]);
    std::vector<std::vector<std::pair<int, int>>> nbr(n);
    for (const auto& a : c.arcs) {
      nbr[a.src].push_back({2 * a.color, colors[a.tgt]});
      nbr[a.tgt].push_back({2 * a.color + 1, colors[a.src]});
    }
    for (int v = 0; v < n; ++v) {
      std::sort(nbr[v].begin(), nbr[v].end());
      for (auto [t, cc] : nbr[v]) {
        sig[v].push_back(t);
        sig[v].push_back(cc);
      }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return sig[x] < sig[y]; });
    std::vector<int> next(n, 0);
    int nc = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++nc;
      next[order[i]] = nc;
    }
    ++nc;
    colors.swap(next);
    if (nc == classes) break;
    classes = nc;
  }
}

std::string encode_with_labeling(const Component& c, const std::vector<int>& pos) {
  int n = static_cast<int>(c.qcolor.size());
  std::string s;
  push_byte(s, n);
  std::vector<int> at(n);
  for (int v = 0; v < n; ++v) at[pos[v]] = v;
  for (int p = 0; p < n; ++p) push_byte(s, c.qcolor[at[p]]);
  std::vector<std::array<int, 3>> triples;
  triples.reserve(c.arcs.size());
  for (const auto& a : c.arcs) triples.push_back({pos[a.src], pos[a.tgt], a.color});
  std::sort(triples.begin(), triples.end());
  push_byte(s, static_cast<int>(triples.size()));
  for (const auto& t : triples) {
    push_byte(s, t[0]);
    push_byte(s, t[1]);
    push_byte(s, t[2]);
  }
  return s;
}

std::string canon_component(const Component& c, std::vector<int> colors) {
  refine(c, colors);
  int n = static_cast<int>(colors.size());
  int classes = n ? 1 + *std::max_element(colors.begin(), colors.end()) : 0;
  if (classes == n) return encode_with_labeling(c, colors);

  // smallest ambiguous class, ties by color id
  std::vector<int> count(classes, 0);
  for (int cc : colors) ++count[cc];
  int cell = -1;
  for (int cc = 0; cc < classes; ++cc) {
    if (count[cc] >= 2 && (cell < 0 || count[cc] < count[cell])) cell = cc;
  }
  std::string best;
  for (int v = 0; v < n; ++v) {
    if (colors[v] != cell) continue;
    // individualize v: it becomes the first member of a split-off class
    std::vector<int> child(n);
    for (int u = 0; u < n; ++u) {
      child[u] = 2 * colors[u] + (u == v ? 0 : 1);
    }
    std::string s = canon_component(c, std::move(child));
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::string quiver_prefix(const Quiver& q) {
  std::string s;
  push_byte(s, q.num_vertices);
  push_byte(s, q.num_arrows());
  for (auto [a, b] : q.arrows) {
    push_byte(s, a);
    push_byte(s, b);
  }
  return s;
}

}  // namespace

CanonicalKey canonical_key(const ColoredQuiver& g) {
  int n = g.num_vertices();
  if (n > 250 || g.base.num_vertices > 250 || g.base.num_arrows() > 250) {
    throw std::invalid_argument("canonical_key: instance too large");
  }
  // connected components of the underlying undirected graph
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : g.arrows) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }
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
  std::vector<Component> comps(num_comp);
  std::vector<int> local(n);
  for (int v = 0; v < n; ++v) {
    local[v] = static_cast<int>(comps[comp[v]].qcolor.size());
    comps[comp[v]].qcolor.push_back(g.vertex_color[v]);
  }
  for (const auto& a : g.arrows) {
    comps[comp[a.src]].arcs.push_back({local[a.src], local[a.tgt], a.color});
  }
  std::vector<std::string> encodings;
  encodings.reserve(num_comp);
  for (const auto& c : comps) {
    encodings.push_back(canon_component(c, std::vector<int>(c.qcolor.size(), 0)));
  }
  std::sort(encodings.begin(), encodings.end());
  std::string key = quiver_prefix(g.base);
  push_byte(key, num_comp);
  for (const auto& e : encodings) key += e;
  return key;
}

CanonicalKey rep_key(const Representation& r) { return canonical_key(gamma_of(r)); }

std::string key_hex(const CanonicalKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * key.size());
  for (unsigned char c : key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

bool is_connected(const ColoredQuiver& g) {
  int n = g.num_vertices();
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& a : g.arrows) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

namespace {

// All subsets closed under succ (x in S implies succ(x) in S) of a DAG,
// as bitmasks. Walks sinks-first so each closed set is produced once.
std::vector<uint32_t> closed_subsets(const std::vector<std::vector<int>>& succ) {
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
  std::reverse(order.begin(), order.end());  // sinks first
  std::vector<uint32_t> out;
  uint32_t cur = 0;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == order.size()) {
      out.push_back(cur);
      return;
    }
    int x = order[i];
    self(self, i + 1);
    bool ok = std::all_of(succ[x].begin(), succ[x].end(),
                          [&](int y) { return (cur >> y) & 1; });
    if (ok) {
      cur |= 1u << x;
      self(self, i + 1);
      cur &= ~(1u << x);
    }
  };
  rec(rec, 0);
  return out;
}

struct ArrowTable {
  int n = 0;
  int colors = 0;
  std::vector<char> present;  // (s * n + t) * colors + c

  explicit ArrowTable(const ColoredQuiver& g)
      : n(g.num_vertices()), colors(g.base.num_arrows()) {
    present.assign(static_cast<size_t>(n) * n * std::max(colors, 1), 0);
    for (const auto& a : g.arrows) {
      present[(static_cast<size_t>(a.src) * n + a.tgt) * colors + a.color] = 1;
    }
  }
  bool has(int s, int t, int c) const {
    return present[(static_cast<size_t>(s) * n + t) * colors + c] != 0;
  }
};

long long count_chromatic_isos(const ColoredQuiver& gv, uint32_t umask,
                               const ColoredQuiver& gw, uint32_t dmask,
                               const ArrowTable& av, const ArrowTable& aw) {
  std::vector<int> us, ds;
  for (int v = 0; v < gv.num_vertices(); ++v) {
    if ((umask >> v) & 1) us.push_back(v);
  }
  for (int v = 0; v < gw.num_vertices(); ++v) {
    if ((dmask >> v) & 1) ds.push_back(v);
  }
  if (us.size() != ds.size()) return 0;
  int colors = gv.base.num_arrows();
  std::vector<int> img(us.size(), -1);
  std::vector<char> used(ds.size(), 0);
  long long count = 0;
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == us.size()) {
      ++count;
      return;
    }
    int x = us[i];
    for (size_t j = 0; j < ds.size(); ++j) {
      if (used[j]) continue;
      int y = ds[j];
      if (gv.vertex_color[x] != gw.vertex_color[y]) continue;
      bool ok = true;
      for (size_t p = 0; p < i && ok; ++p) {
        int x2 = us[p], y2 = img[p];
        for (int c = 0; c < colors && ok; ++c) {
          if (av.has(x, x2, c) != aw.has(y, y2, c)) ok = false;
          if (av.has(x2, x, c) != aw.has(y2, y, c)) ok = false;
        }
      }
      for (int c = 0; c < colors && ok; ++c) {
        if (av.has(x, x, c) != aw.has(y, y, c)) ok = false;
      }
      if (!ok) continue;
      img[i] = static_cast<int>(y);
      used[j] = 1;
      self(self, i + 1);
      used[j] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

long long chromatic_homs(const Representation& v, const Representation& w) {
  if (v.quiver != w.quiver) {
    throw std::invalid_argument("chromatic_homs: quiver mismatch");
  }
  if (!is_nilpotent_rep(v) || !is_nilpotent_rep(w)) {
    throw std::invalid_argument(
        "chromatic_homs: defined for nilpotent representations only");
  }
  ColoredQuiver gv = gamma_of(v), gw = gamma_of(w);
  if (gv.num_vertices() > 30 || gw.num_vertices() > 30) {
    throw std::invalid_argument("chromatic_homs: instance too large");
  }
  std::vector<std::vector<int>> pred_v(gv.num_vertices()),
      succ_w(gw.num_vertices());
  for (const auto& a : gv.arrows) pred_v[a.tgt].push_back(a.src);
  for (const auto& a : gw.arrows) succ_w[a.src].push_back(a.tgt);
  // upward-closed in Gamma_v: closed under predecessors
  auto ups = closed_subsets(pred_v);
  auto downs = closed_subsets(succ_w);
  ArrowTable av(gv), aw(gw);
  long long total = 0;
  for (uint32_t u : ups) {
    for (uint32_t d : downs) {
      total += count_chromatic_isos(gv, u, gw, d, av, aw);
    }
  }
  return total;
}

std::string to_dot(const ColoredQuiver& g) {
  static const char* kColors[] = {"black",  "blue",   "red",
                                  "darkgreen", "orange", "purple"};
  static const char* kStyles[] = {"solid", "dotted", "dashed"};
  std::ostringstream os;
  os << "digraph colored_quiver {\n";
  std::vector<int> label(g.num_vertices(), 0);
  std::vector<int> next(g.base.num_vertices, 0);
  for (int v = 0; v < g.num_vertices(); ++v) label[v] = ++next[g.vertex_color[v]];
  for (int v = 0; v < g.num_vertices(); ++v) {
    os << "  n" << v << " [label=\"" << label[v] << "\", qcolor="
       << g.vertex_color[v] << "];\n";
  }
  for (const auto& a : g.arrows) {
    // color 0 solid black, 1 dotted blue, 2 dashed red, then cycle
    os << "  n" << a.src << " -> n" << a.tgt << " [acolor=" << a.color
       << ", color=" << kColors[a.color % 6] << ", style="
       << kStyles[a.color % 3] << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace f1rep
