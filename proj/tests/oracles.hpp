#pragma once

// Test-only oracles. These deliberately avoid the library's canonical
// labeling: isomorphism is decided by sweeping the full product of vertex
// permutation groups, and counts come from closed forms or recurrences.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "f1rep/rep.hpp"

namespace oracle {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Number of partial injections {0..a} -> {0..b}.
inline long long map_count_formula(int a, int b) {
  long long total = 0;
  for (int k = 0; k <= std::min(a, b); ++k) {
    total += binomial(a, k) * binomial(b, k) * factorial(k);
  }
  return total;
}

inline std::vector<long long> partition_numbers(int dmax) {
  std::vector<long long> p(dmax + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= dmax; ++part) {
    for (int d = part; d <= dmax; ++d) p[d] += p[d - part];
  }
  return p;
}

// Conjugate of one map by permutations of source and target elements.
// perm[k-1] is the new name of element k.
inline f1rep::F1Map conjugate(const f1rep::F1Map& f, const std::vector<int>& src_perm,
                              const std::vector<int>& tgt_perm) {
  std::vector<int> img(f.src_dim, 0);
  for (int k = 1; k <= f.src_dim; ++k) {
    int v = f(k);
    img[src_perm[k - 1] - 1] = v == 0 ? 0 : tgt_perm[v - 1];
  }
  return f1rep::F1Map(f.src_dim, f.tgt_dim, std::move(img));
}

// Minimum flattened image encoding over the whole product of per-vertex
// symmetric groups acting by conjugation.
inline std::vector<int> orbit_canonical(const f1rep::Representation& r) {
  int nv = r.quiver.num_vertices;
  std::vector<std::vector<int>> perms(nv);
  for (int u = 0; u < nv; ++u) {
    perms[u].resize(r.dims[u]);
    std::iota(perms[u].begin(), perms[u].end(), 1);
  }
  std::vector<int> best;
  bool first = true;
  auto rec = [&](auto&& self, int u) -> void {
    if (u == nv) {
      std::vector<int> code;
      for (int a = 0; a < r.quiver.num_arrows(); ++a) {
        auto g = conjugate(r.maps[a], perms[r.quiver.source(a)],
                           perms[r.quiver.target(a)]);
        code.insert(code.end(), g.image.begin(), g.image.end());
      }
      if (first || code < best) {
        best = std::move(code);
        first = false;
      }
      return;
    }
    std::vector<int> p(r.dims[u]);
    std::iota(p.begin(), p.end(), 1);
    do {
      perms[u] = p;
      self(self, u + 1);
    } while (std::next_permutation(p.begin(), p.end()));
  };
  rec(rec, 0);
  return best;
}

inline bool isomorphic_by_orbit(const f1rep::Representation& a,
                                const f1rep::Representation& b) {
  if (a.quiver != b.quiver || a.dims != b.dims) return false;
  return orbit_canonical(a) == orbit_canonical(b);
}

}  // namespace oracle
