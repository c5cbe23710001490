#include "f1rep/corr.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "f1rep/colored.hpp"
#include "f1rep/f1lin.hpp"

namespace f1rep {

MonoidElement MonoidElement::zero() { return {}; }

MonoidElement MonoidElement::idempotent(int v) {
  MonoidElement e;
  e.kind = Kind::Idempotent;
  e.vertex = v;
  return e;
}

MonoidElement MonoidElement::path(std::vector<int> arrows, const Quiver& q) {
  if (arrows.empty()) {
    throw std::invalid_argument("MonoidElement::path: empty arrow sequence");
  }
  for (size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k] < 0 || arrows[k] >= q.num_arrows()) {
      throw std::invalid_argument("MonoidElement::path: no such arrow");
    }
    if (k + 1 < arrows.size() &&
        q.target(arrows[k]) != q.source(arrows[k + 1])) {
      throw std::invalid_argument("MonoidElement::path: arrows do not compose");
    }
  }
  MonoidElement e;
  e.kind = Kind::Path;
  e.arrows = std::move(arrows);
  return e;
}

namespace {

int path_source(const MonoidElement& p, const Quiver& q) {
  return q.source(p.arrows.front());
}
int path_target(const MonoidElement& p, const Quiver& q) {
  return q.target(p.arrows.back());
}

}  // namespace

MonoidElement mq_multiply(const MonoidElement& a, const MonoidElement& b,
                          const Quiver& q) {
  using Kind = MonoidElement::Kind;
  if (a.kind == Kind::Zero || b.kind == Kind::Zero) return MonoidElement::zero();
  if (a.kind == Kind::Idempotent && b.kind == Kind::Idempotent) {
    return a.vertex == b.vertex ? a : MonoidElement::zero();
  }
  if (a.kind == Kind::Idempotent) {  // e_i * path
    return a.vertex == path_target(b, q) ? b : MonoidElement::zero();
  }
  if (b.kind == Kind::Idempotent) {  // path * e_i
    return b.vertex == path_source(a, q) ? a : MonoidElement::zero();
  }
  // path * path: b is traversed first
  if (path_target(b, q) != path_source(a, q)) return MonoidElement::zero();
  std::vector<int> arrows = b.arrows;
  arrows.insert(arrows.end(), a.arrows.begin(), a.arrows.end());
  return MonoidElement::path(std::move(arrows), q);
}

PointedMap::PointedMap(int d, std::vector<int> img) : dim(d), image(std::move(img)) {
  if (static_cast<int>(image.size()) != d) {
    throw std::invalid_argument("PointedMap: image length mismatch");
  }
  for (int v : image) {
    if (v < 0 || v > d) throw std::invalid_argument("PointedMap: entry out of range");
  }
}

namespace {

PointedMap compose_pointed(const PointedMap& g, const PointedMap& f) {
  std::vector<int> img(f.dim);
  for (int k = 1; k <= f.dim; ++k) img[k - 1] = g(f(k));
  return PointedMap(f.dim, std::move(img));
}

bool injective_away_from_kernel(const PointedMap& f) {
  std::vector<char> used(f.dim + 1, 0);
  for (int k = 1; k <= f.dim; ++k) {
    int v = f(k);
    if (v != 0) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

}  // namespace

PointedMap MQModule::act(const MonoidElement& m) const {
  using Kind = MonoidElement::Kind;
  switch (m.kind) {
    case Kind::Zero:
      return PointedMap::zero(carrier_dim);
    case Kind::Idempotent:
      return idem_action.at(m.vertex);
    case Kind::Path: {
      PointedMap cur = arrow_action.at(m.arrows.front());
      for (size_t k = 1; k < m.arrows.size(); ++k) {
        cur = compose_pointed(arrow_action.at(m.arrows[k]), cur);
      }
      return cur;
    }
  }
  return PointedMap::zero(carrier_dim);
}

MQModule rep_to_module(const Representation& v) {
  MQModule m;
  m.quiver = v.quiver;
  std::vector<int> off(v.quiver.num_vertices + 1, 0);
  for (int u = 0; u < v.quiver.num_vertices; ++u) off[u + 1] = off[u] + v.dims[u];
  m.carrier_dim = off.back();
  for (int u = 0; u < v.quiver.num_vertices; ++u) {
    std::vector<int> img(m.carrier_dim, 0);
    for (int k = 1; k <= v.dims[u]; ++k) img[off[u] + k - 1] = off[u] + k;
    m.idem_action.emplace_back(m.carrier_dim, std::move(img));
  }
  for (int a = 0; a < v.quiver.num_arrows(); ++a) {
    int s = v.quiver.source(a), t = v.quiver.target(a);
    std::vector<int> img(m.carrier_dim, 0);
    for (int k = 1; k <= v.dims[s]; ++k) {
      int y = v.maps[a](k);
      img[off[s] + k - 1] = y == 0 ? 0 : off[t] + y;
    }
    m.arrow_action.emplace_back(m.carrier_dim, std::move(img));
  }
  return m;
}

namespace {

bool type_alpha_search(const MQModule& m, const PointedMap& cur, int depth) {
  if (!injective_away_from_kernel(cur)) return false;
  if (depth == 0) return true;
  bool zero = true;
  for (int k = 1; k <= cur.dim && zero; ++k) {
    if (cur(k) != 0) zero = false;
  }
  if (zero) return true;  // all extensions stay zero
  for (const auto& g : m.idem_action) {
    if (!type_alpha_search(m, compose_pointed(g, cur), depth - 1)) return false;
  }
  for (const auto& g : m.arrow_action) {
    if (!type_alpha_search(m, compose_pointed(g, cur), depth - 1)) return false;
  }
  return true;
}

}  // namespace

bool is_type_alpha(const MQModule& m) {
  int depth = std::max(1, m.carrier_dim);
  std::vector<int> id(m.carrier_dim);
  std::iota(id.begin(), id.end(), 1);
  PointedMap identity(m.carrier_dim, std::move(id));
  return type_alpha_search(m, identity, depth);
}

long long module_hom_count(const MQModule& a, const MQModule& b) {
  if (a.quiver != b.quiver) {
    throw std::invalid_argument("module_hom_count: quiver mismatch");
  }
  long long count = 0;
  for (const auto& phi : enumerate_maps(a.carrier_dim, b.carrier_dim)) {
    bool ok = true;
    auto commutes = [&](const PointedMap& ga, const PointedMap& gb) {
      for (int k = 1; k <= a.carrier_dim; ++k) {
        if (phi(ga(k)) != gb(phi(k))) return false;
      }
      return true;
    };
    for (size_t u = 0; u < a.idem_action.size() && ok; ++u) {
      ok = commutes(a.idem_action[u], b.idem_action[u]);
    }
    for (size_t x = 0; x < a.arrow_action.size() && ok; ++x) {
      ok = commutes(a.arrow_action[x], b.arrow_action[x]);
    }
    if (ok) ++count;
  }
  return count;
}

SkewShape normalize_shape(SkewShape s) {
  if (s.cells.empty()) {
    throw std::invalid_argument("SkewShape: at least one cell required");
  }
  for (const auto& c : s.cells) {
    if (static_cast<int>(c.size()) != s.n) {
      throw std::invalid_argument("SkewShape: cell arity mismatch");
    }
  }
  std::vector<int> mins = s.cells.front();
  for (const auto& c : s.cells) {
    for (int i = 0; i < s.n; ++i) mins[i] = std::min(mins[i], c[i]);
  }
  for (auto& c : s.cells) {
    for (int i = 0; i < s.n; ++i) c[i] -= mins[i];
  }
  std::sort(s.cells.begin(), s.cells.end());
  s.cells.erase(std::unique(s.cells.begin(), s.cells.end()), s.cells.end());
  return s;
}

bool is_valid_shape(const SkewShape& s) {
  std::set<std::vector<int>> cells(s.cells.begin(), s.cells.end());
  for (const auto& x : s.cells) {
    for (const auto& z : s.cells) {
      bool leq = true;
      for (int i = 0; i < s.n && leq; ++i) leq = x[i] <= z[i];
      if (!leq) continue;
      // every lattice point between x and z must belong to the shape
      std::vector<int> y = x;
      while (true) {
        if (!cells.count(y)) return false;
        int i = 0;
        while (i < s.n && y[i] == z[i]) ++i;
        if (i == s.n) break;
        ++y[i];
        for (int j = 0; j < i; ++j) y[j] = x[j];
      }
    }
  }
  return true;
}

bool is_connected_shape(const SkewShape& s) {
  if (s.cells.empty()) return false;
  std::set<std::vector<int>> cells(s.cells.begin(), s.cells.end());
  std::vector<std::vector<int>> stack{s.cells.front()};
  std::set<std::vector<int>> seen{s.cells.front()};
  while (!stack.empty()) {
    auto c = stack.back();
    stack.pop_back();
    for (int i = 0; i < s.n; ++i) {
      for (int d : {-1, 1}) {
        auto nb = c;
        nb[i] += d;
        if (cells.count(nb) && !seen.count(nb)) {
          seen.insert(nb);
          stack.push_back(nb);
        }
      }
    }
  }
  return seen.size() == cells.size();
}

Representation shape_to_rep(const SkewShape& shape) {
  SkewShape s = normalize_shape(shape);
  if (!is_valid_shape(s)) {
    throw std::invalid_argument("shape_to_rep: not a convex shape");
  }
  int m = static_cast<int>(s.cells.size());
  std::map<std::vector<int>, int> id;  // cell -> 1-based element
  for (int k = 0; k < m; ++k) id[s.cells[k]] = k + 1;
  std::vector<F1Map> maps;
  maps.reserve(s.n);
  for (int i = 0; i < s.n; ++i) {
    std::vector<int> img(m, 0);
    for (int k = 0; k < m; ++k) {
      auto cell = s.cells[k];
      cell[i] += 1;
      auto it = id.find(cell);
      if (it != id.end()) img[k] = it->second;
    }
    maps.emplace_back(m, m, std::move(img));
  }
  return Representation(loop_quiver(s.n), {m}, std::move(maps));
}

bool maps_commute(const Representation& v) {
  if (v.quiver.num_vertices != 1) {
    throw std::invalid_argument("maps_commute: representation must live on a loop quiver");
  }
  for (size_t i = 0; i < v.maps.size(); ++i) {
    for (size_t j = i + 1; j < v.maps.size(); ++j) {
      if (compose(v.maps[i], v.maps[j]) != compose(v.maps[j], v.maps[i])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::map<int, std::vector<int>>> admits_grading(const Representation& v) {
  if (v.quiver.num_vertices != 1) {
    throw std::invalid_argument("admits_grading: representation must live on a loop quiver");
  }
  int n = v.quiver.num_arrows();
  if (n > 8) throw std::invalid_argument("admits_grading: too many loops");
  int d = v.dims[0];
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  // undirected incidence of the colored quiver
  struct Inc {
    int other;
    int color;
    int dir;  // +1 along the arrow, -1 against
  };
  std::vector<std::vector<Inc>> inc(d + 1);
  for (int i = 0; i < n; ++i) {
    for (int k = 1; k <= d; ++k) {
      int y = v.maps[i](k);
      if (y != 0) {
        inc[k].push_back({y, i, +1});
        inc[y].push_back({k, i, -1});
      }
    }
  }
  do {
    std::map<int, std::vector<int>> deg;
    bool ok = true;
    for (int start = 1; start <= d && ok; ++start) {
      if (deg.count(start)) continue;
      std::vector<int> comp{start};
      deg[start] = std::vector<int>(n, 0);
      std::vector<int> stack{start};
      while (!stack.empty() && ok) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& e : inc[x]) {
          std::vector<int> want = deg[x];
          want[sigma[e.color]] += e.dir;
          auto it = deg.find(e.other);
          if (it == deg.end()) {
            deg[e.other] = want;
            comp.push_back(e.other);
            stack.push_back(e.other);
          } else if (it->second != want) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        // translate the component so its minimum is the origin
        std::vector<int> mins(n, 0);
        bool first = true;
        for (int x : comp) {
          for (int i = 0; i < n; ++i) {
            mins[i] = first ? deg[x][i] : std::min(mins[i], deg[x][i]);
          }
          first = false;
        }
        for (int x : comp) {
          for (int i = 0; i < n; ++i) deg[x][i] -= mins[i];
        }
      }
    }
    if (ok) return deg;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

SkewShape rep_to_shape(const Representation& v) {
  if (v.quiver.num_vertices != 1) {
    throw std::invalid_argument("rep_to_shape: representation must live on a loop quiver");
  }
  if (!maps_commute(v)) {
    throw std::domain_error("rep_to_shape: maps do not commute");
  }
  if (!is_connected(gamma_of(v))) {
    throw std::domain_error("rep_to_shape: representation is decomposable");
  }
  auto grading = admits_grading(v);
  if (!grading) {
    throw std::domain_error("rep_to_shape: no consistent grading");
  }
  SkewShape s;
  s.n = v.quiver.num_arrows();
  for (const auto& [elem, cell] : *grading) s.cells.push_back(cell);
  s = normalize_shape(std::move(s));
  if (static_cast<int>(s.cells.size()) != v.total_dim()) {
    throw std::logic_error("rep_to_shape: degree map is not injective");
  }
  return s;
}

std::vector<SkewShape> enumerate_shapes(int n, int cells) {
  if (n < 1 || cells < 1) {
    throw std::invalid_argument("enumerate_shapes: n and cells must be positive");
  }
  std::set<std::vector<std::vector<int>>> level;
  level.insert({std::vector<int>(n, 0)});
  for (int size = 1; size < cells; ++size) {
    std::set<std::vector<std::vector<int>>> next;
    for (const auto& cur : level) {
      std::set<std::vector<int>> present(cur.begin(), cur.end());
      for (const auto& c : cur) {
        for (int i = 0; i < n; ++i) {
          for (int d : {-1, 1}) {
            auto nb = c;
            nb[i] += d;
            if (present.count(nb)) continue;
            SkewShape grown;
            grown.n = n;
            grown.cells = cur;
            grown.cells.push_back(nb);
            next.insert(normalize_shape(std::move(grown)).cells);
          }
        }
      }
    }
    level.swap(next);
  }
  std::vector<SkewShape> out;
  for (const auto& cs : level) {
    SkewShape s;
    s.n = n;
    s.cells = cs;
    if (is_valid_shape(s)) out.push_back(std::move(s));
  }
  return out;
}

std::string shape_ascii(const SkewShape& shape) {
  if (shape.n != 2) {
    throw std::invalid_argument("shape_ascii: only 2-dimensional shapes");
  }
  SkewShape s = normalize_shape(shape);
  int maxx = 0, maxy = 0;
  for (const auto& c : s.cells) {
    maxx = std::max(maxx, c[0]);
    maxy = std::max(maxy, c[1]);
  }
  std::set<std::vector<int>> cells(s.cells.begin(), s.cells.end());
  std::ostringstream os;
  for (int y = maxy; y >= 0; --y) {
    for (int x = 0; x <= maxx; ++x) {
      os << (cells.count({x, y}) ? '#' : '.');
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace f1rep
