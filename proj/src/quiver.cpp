#include "f1rep/quiver.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace f1rep {

Quiver::Quiver(int n, std::vector<std::pair<int, int>> arcs)
    : num_vertices(n), arrows(std::move(arcs)) {
  if (n < 0) throw std::invalid_argument("Quiver: negative vertex count");
  for (auto [s, t] : arrows) {
    if (s < 0 || s >= n || t < 0 || t >= n) {
      throw std::invalid_argument("Quiver: arrow endpoint out of range");
    }
  }
}

const char* shape_tag_name(ShapeTag t) {
  switch (t) {
    case ShapeTag::Tree: return "Tree";
    case ShapeTag::Cycle: return "Cycle";
    case ShapeTag::ProperPseudotree: return "ProperPseudotree";
    case ShapeTag::Other: return "Other";
  }
  return "?";
}

Quiver loop_quiver(int n) {
  std::vector<std::pair<int, int>> arcs(n, {0, 0});
  return Quiver(1, std::move(arcs));
}

Quiver cycle_quiver(const std::vector<bool>& orientation) {
  int ell = static_cast<int>(orientation.size());
  if (ell < 1) {
    throw std::invalid_argument("cycle_quiver: empty orientation word");
  }
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(ell);
  for (int j = 0; j < ell; ++j) {
    int u = j, v = (j + 1) % ell;
    if (orientation[j]) {
      arcs.emplace_back(u, v);
    } else {
      arcs.emplace_back(v, u);
    }
  }
  return Quiver(ell, std::move(arcs));
}

Quiver path_quiver(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int j = 0; j + 1 < n; ++j) arcs.emplace_back(j, j + 1);
  return Quiver(n, std::move(arcs));
}

Quiver kronecker_quiver() { return Quiver(2, {{0, 1}, {0, 1}}); }

Quiver pendant_cycle_quiver(int ell) {
  if (ell < 1) throw std::invalid_argument("pendant_cycle_quiver: ell < 1");
  std::vector<std::pair<int, int>> arcs;
  for (int j = 0; j < ell; ++j) arcs.emplace_back(j, (j + 1) % ell);
  arcs.emplace_back(ell, 0);
  return Quiver(ell + 1, std::move(arcs));
}

namespace {

// Undirected incidence lists: per vertex, (arrow index, other endpoint).
std::vector<std::vector<std::pair<int, int>>> incidence(const Quiver& q) {
  std::vector<std::vector<std::pair<int, int>>> inc(q.num_vertices);
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.source(a), t = q.target(a);
    inc[s].emplace_back(a, t);
    if (t != s) inc[t].emplace_back(a, s);
  }
  return inc;
}

int component_count(const Quiver& q) {
  if (q.num_vertices == 0) return 0;
  auto inc = incidence(q);
  std::vector<char> seen(q.num_vertices, 0);
  int comps = 0;
  for (int start = 0; start < q.num_vertices; ++start) {
    if (seen[start]) continue;
    ++comps;
    std::queue<int> bfs;
    bfs.push(start);
    seen[start] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (auto [a, v] : inc[u]) {
        (void)a;
        if (!seen[v]) {
          seen[v] = 1;
          bfs.push(v);
        }
      }
    }
  }
  return comps;
}

}  // namespace

bool is_connected(const Quiver& q) { return component_count(q) <= 1; }

int cycle_rank(const Quiver& q) {
  return q.num_arrows() - q.num_vertices + component_count(q);
}

QuiverShape classify(const Quiver& q) {
  if (!is_connected(q)) {
    throw std::invalid_argument("classification requires connected quiver");
  }
  int rank = cycle_rank(q);
  if (rank == 0) return {ShapeTag::Tree, 0};
  if (rank >= 2) return {ShapeTag::Other, rank};
  // rank == 1: a simple cycle iff every vertex has undirected degree 2
  // (a loop contributes 2 to its vertex).
  std::vector<int> deg(q.num_vertices, 0);
  for (int a = 0; a < q.num_arrows(); ++a) {
    deg[q.source(a)] += 1;
    deg[q.target(a)] += 1;
  }
  bool cycle = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
  return {cycle ? ShapeTag::Cycle : ShapeTag::ProperPseudotree, 1};
}

namespace {

struct SpanningTree {
  std::vector<int> parent;        // -1 at root / unreached
  std::vector<int> parent_arrow;  // arrow to parent
  std::vector<int> depth;
  std::vector<char> in_tree;      // per arrow
};

SpanningTree bfs_tree(const Quiver& q) {
  SpanningTree st;
  st.parent.assign(q.num_vertices, -1);
  st.parent_arrow.assign(q.num_vertices, -1);
  st.depth.assign(q.num_vertices, 0);
  st.in_tree.assign(q.num_arrows(), 0);
  auto inc = incidence(q);
  std::vector<char> seen(q.num_vertices, 0);
  std::queue<int> bfs;
  if (q.num_vertices > 0) {
    bfs.push(0);
    seen[0] = 1;
  }
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (auto [a, v] : inc[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        st.parent[v] = u;
        st.parent_arrow[v] = a;
        st.depth[v] = st.depth[u] + 1;
        st.in_tree[a] = 1;
        bfs.push(v);
      }
    }
  }
  return st;
}

// Tree path between u and v as (vertices, arrows).
Subquiver tree_path(const SpanningTree& st, int u, int v) {
  Subquiver out;
  std::vector<int> left{u}, right{v};
  std::vector<int> larr, rarr;
  int x = u, y = v;
  while (x != y) {
    if (st.depth[x] >= st.depth[y]) {
      larr.push_back(st.parent_arrow[x]);
      x = st.parent[x];
      left.push_back(x);
    } else {
      rarr.push_back(st.parent_arrow[y]);
      y = st.parent[y];
      right.push_back(y);
    }
  }
  out.vertices = left;
  for (auto it = right.rbegin(); it != right.rend(); ++it) {
    if (*it != x) out.vertices.push_back(*it);
  }
  out.arrows = larr;
  out.arrows.insert(out.arrows.end(), rarr.rbegin(), rarr.rend());
  return out;
}

Subquiver fundamental_cycle(const Quiver& q, const SpanningTree& st, int a) {
  Subquiver c = tree_path(st, q.source(a), q.target(a));
  c.arrows.push_back(a);
  std::sort(c.vertices.begin(), c.vertices.end());
  std::sort(c.arrows.begin(), c.arrows.end());
  return c;
}

}  // namespace

std::optional<FundamentalCyclePair> fundamental_cycle_pair(const Quiver& q) {
  if (!is_connected(q)) {
    throw std::invalid_argument("fundamental_cycle_pair: quiver not connected");
  }
  if (cycle_rank(q) < 2) return std::nullopt;
  SpanningTree st = bfs_tree(q);
  std::vector<int> non_tree;
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (!st.in_tree[a]) non_tree.push_back(a);
  }
  FundamentalCyclePair out;
  out.alpha = non_tree[0];
  out.beta = non_tree[1];
  out.cycle_a = fundamental_cycle(q, st, out.alpha);
  out.cycle_b = fundamental_cycle(q, st, out.beta);

  // Shortest connecting path avoiding alpha and beta; multi-source BFS from
  // cycle_a's vertex set. Internal vertices avoid both cycles' vertex sets.
  auto inc = incidence(q);
  std::vector<char> in_a(q.num_vertices, 0), in_b(q.num_vertices, 0);
  for (int v : out.cycle_a.vertices) in_a[v] = 1;
  for (int v : out.cycle_b.vertices) in_b[v] = 1;
  std::vector<int> prev(q.num_vertices, -1), prev_arrow(q.num_vertices, -1);
  std::vector<char> seen(q.num_vertices, 0);
  std::queue<int> bfs;
  for (int v = 0; v < q.num_vertices; ++v) {
    if (in_a[v]) {
      seen[v] = 1;
      bfs.push(v);
    }
  }
  int meet = -1;
  for (int v = 0; v < q.num_vertices && meet < 0; ++v) {
    if (in_a[v] && in_b[v]) meet = v;
  }
  while (meet < 0 && !bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (auto [a, v] : inc[u]) {
      if (a == out.alpha || a == out.beta || seen[v]) continue;
      seen[v] = 1;
      prev[v] = u;
      prev_arrow[v] = a;
      if (in_b[v]) {
        meet = v;
        break;
      }
      bfs.push(v);
    }
  }
  if (meet < 0) {
    throw std::logic_error("fundamental_cycle_pair: connected quiver has no link path");
  }
  Subquiver w;
  for (int v = meet; v != -1; v = prev[v]) {
    w.vertices.push_back(v);
    if (prev[v] != -1) w.arrows.push_back(prev_arrow[v]);
  }
  std::reverse(w.vertices.begin(), w.vertices.end());
  std::reverse(w.arrows.begin(), w.arrows.end());
  out.path = std::move(w);
  return out;
}

std::string to_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int v = 0; v < q.num_vertices; ++v) {
    os << "  v" << v << " [label=\"" << v << "\"];\n";
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    os << "  v" << q.source(a) << " -> v" << q.target(a) << " [label=\"" << a
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace f1rep
