#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "f1rep/colored.hpp"
#include "f1rep/enumerate.hpp"
#include "oracles.hpp"

using namespace f1rep;

namespace {

// the worked pair over L_2: f1(n) = n-1, f2(n) = n-2 resp. g1 = f2,
// g2(n) = n+1 on {1,2}
Representation rep_v() {
  return Representation(loop_quiver(2), {3},
                        {F1Map(3, 3, {0, 1, 2}), F1Map(3, 3, {0, 0, 1})});
}

Representation rep_w() {
  return Representation(loop_quiver(2), {3},
                        {F1Map(3, 3, {0, 0, 1}), F1Map(3, 3, {2, 3, 0})});
}

ColoredQuiver relabel(const ColoredQuiver& g, const std::vector<int>& perm) {
  ColoredQuiver out;
  out.base = g.base;
  out.vertex_color.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    out.vertex_color[perm[v]] = g.vertex_color[v];
  }
  for (const auto& a : g.arrows) {
    out.arrows.push_back({perm[a.src], perm[a.tgt], a.color});
  }
  return out;
}

std::vector<Quiver> test_quivers() {
  return {loop_quiver(1), loop_quiver(2), path_quiver(2), kronecker_quiver()};
}

}  // namespace

TEST_CASE("gamma of the worked example") {
  ColoredQuiver g = gamma_of(rep_v());
  CHECK(g.num_vertices() == 3);
  REQUIRE(g.arrows.size() == 3);
  // arrows 2->1 and 3->2 of color 0, and 3->1 of color 1
  CHECK(g.arrows[0] == ColoredQuiver::Arrow{1, 0, 0});
  CHECK(g.arrows[1] == ColoredQuiver::Arrow{2, 1, 0});
  CHECK(g.arrows[2] == ColoredQuiver::Arrow{2, 0, 1});

  CHECK(gamma_of(zero_rep(loop_quiver(2))).num_vertices() == 0);

  ColoredQuiver chain = gamma_of(jordan_chain(3));
  CHECK(chain.arrows.size() == 2);
}

TEST_CASE("admissibility") {
  CHECK(check_admissible(gamma_of(rep_v())));

  ColoredQuiver loop;
  loop.base = loop_quiver(1);
  loop.vertex_color = {0};
  loop.arrows = {{0, 0, 0}};
  CHECK_FALSE(check_admissible(loop));

  ColoredQuiver branching;
  branching.base = loop_quiver(1);
  branching.vertex_color = {0, 0, 0};
  branching.arrows = {{0, 1, 0}, {0, 2, 0}};
  CHECK_FALSE(check_admissible(branching));
  CHECK_THROWS_AS(rep_of(branching), std::invalid_argument);

  // color projection must be a quiver map
  ColoredQuiver wrong;
  wrong.base = path_quiver(2);
  wrong.vertex_color = {1, 0};
  wrong.arrows = {{0, 1, 0}};
  CHECK_FALSE(check_admissible(wrong));
}

TEST_CASE("gamma of nilpotent representations is always admissible") {
  std::vector<Quiver> quivers = {loop_quiver(1), loop_quiver(2), path_quiver(3),
                                 cycle_quiver({true, true, false})};
  for (const auto& q : quivers) {
    for (int t = 0; t <= 5; ++t) {
      if (q.num_vertices > 1 && t > 4) continue;  // keep the sweep quick
      for (const auto& d : compositions(t, q.num_vertices)) {
        for (const auto& e : enumerate_classes(q, d, true)) {
          CHECK(check_admissible(gamma_of(e.rep)));
        }
      }
    }
  }
}

TEST_CASE("rep_of inverts gamma_of") {
  ColoredQuiver path;
  path.base = loop_quiver(1);
  path.vertex_color = {0, 0, 0};
  path.arrows = {{0, 1, 0}, {1, 2, 0}};
  CHECK(rep_key(rep_of(path)) == rep_key(jordan_chain(3)));

  // the worked example W, drawn by hand
  ColoredQuiver gw;
  gw.base = loop_quiver(2);
  gw.vertex_color = {0, 0, 0};
  gw.arrows = {{2, 0, 0}, {0, 1, 1}, {1, 2, 1}};
  CHECK(rep_key(rep_of(gw)) == rep_key(rep_w()));

  ColoredQuiver empty;
  empty.base = loop_quiver(2);
  CHECK(rep_of(empty).total_dim() == 0);

  for (const auto& g : {path, gw}) {
    CHECK(canonical_key(gamma_of(rep_of(g))) == canonical_key(g));
  }
}

TEST_CASE("canonical keys are relabeling-invariant and separate the examples") {
  ColoredQuiver gv = gamma_of(rep_v());
  ColoredQuiver gw = gamma_of(rep_w());
  CHECK(canonical_key(gv) != canonical_key(gw));

  std::mt19937 rng(7);
  std::vector<int> perm{0, 1, 2};
  for (int t = 0; t < 20; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_key(relabel(gv, perm)) == canonical_key(gv));
    CHECK(canonical_key(relabel(gw, perm)) == canonical_key(gw));
  }
}

TEST_CASE("canonical keys agree with explicit orbit search") {
  for (const auto& q : test_quivers()) {
    for (int t = 0; t <= 4; ++t) {
      for (const auto& d : compositions(t, q.num_vertices)) {
        // partition all map tuples two ways: by canonical key and by the
        // oracle's minimum-over-the-group encoding; they must coincide
        std::map<std::vector<int>, std::set<CanonicalKey>> oracle_to_keys;
        std::map<CanonicalKey, std::set<std::vector<int>>> key_to_oracle;
        int na = q.num_arrows();
        std::vector<std::vector<F1Map>> spaces(na);
        for (int a = 0; a < na; ++a) {
          spaces[a] = enumerate_maps(d[q.source(a)], d[q.target(a)]);
        }
        std::vector<size_t> idx(na, 0);
        while (true) {
          std::vector<F1Map> maps;
          for (int a = 0; a < na; ++a) maps.push_back(spaces[a][idx[a]]);
          Representation r(q, d, std::move(maps));
          auto orbit = oracle::orbit_canonical(r);
          auto key = rep_key(r);
          oracle_to_keys[orbit].insert(key);
          key_to_oracle[key].insert(orbit);
          int a = na - 1;
          while (a >= 0 && ++idx[a] == spaces[a].size()) idx[a--] = 0;
          if (a < 0) break;
        }
        for (const auto& [o, keys] : oracle_to_keys) CHECK(keys.size() == 1);
        for (const auto& [k, orbits] : key_to_oracle) CHECK(orbits.size() == 1);
      }
    }
  }
}

TEST_CASE("degree bounds and source-sink balance") {
  for (const auto& q : test_quivers()) {
    std::vector<int> outdeg(q.num_vertices, 0), indeg(q.num_vertices, 0);
    for (int a = 0; a < q.num_arrows(); ++a) {
      ++outdeg[q.source(a)];
      ++indeg[q.target(a)];
    }
    for (int t = 1; t <= 4; ++t) {
      for (const auto& d : compositions(t, q.num_vertices)) {
        for (const auto& e : enumerate_classes(q, d, true)) {
          ColoredQuiver g = gamma_of(e.rep);
          std::vector<int> gout(g.num_vertices(), 0), gin(g.num_vertices(), 0);
          for (const auto& a : g.arrows) {
            ++gout[a.src];
            ++gin[a.tgt];
          }
          for (int x = 0; x < g.num_vertices(); ++x) {
            CHECK(gout[x] <= outdeg[g.vertex_color[x]]);
            CHECK(gin[x] <= indeg[g.vertex_color[x]]);
          }
          // per color, #sources = #sinks
          for (int c = 0; c < q.num_arrows(); ++c) {
            int sources = 0, sinks = 0;
            std::vector<char> has_out(g.num_vertices(), 0), has_in(g.num_vertices(), 0);
            for (const auto& a : g.arrows) {
              if (a.color != c) continue;
              has_out[a.src] = 1;
              has_in[a.tgt] = 1;
            }
            for (int x = 0; x < g.num_vertices(); ++x) {
              if (!has_out[x]) ++sinks;
              if (!has_in[x]) ++sources;
            }
            CHECK(sources == sinks);
          }
        }
      }
    }
  }
}

TEST_CASE("chromatic hom counts") {
  Representation s = jordan_chain(1), c2 = jordan_chain(2);
  CHECK(chromatic_homs(s, s) == 2);
  CHECK(chromatic_homs(c2, s) == 2);
  CHECK(chromatic_homs(zero_rep(loop_quiver(1)), c2) == 1);

  Representation non_nil(loop_quiver(1), {1}, {F1Map::identity(1)});
  CHECK_THROWS_AS(chromatic_homs(non_nil, non_nil), std::invalid_argument);
}

TEST_CASE("chromatic hom counts match brute-force hom sets") {
  for (const auto& q : test_quivers()) {
    std::vector<Representation> reps;
    for (int t = 0; t <= 4; ++t) {
      for (const auto& d : compositions(t, q.num_vertices)) {
        for (auto& e : enumerate_classes(q, d, true)) {
          if (q.num_vertices > 1 && t > 3) continue;
          reps.push_back(std::move(e.rep));
        }
      }
    }
    for (const auto& v : reps) {
      for (const auto& w : reps) {
        CHECK(chromatic_homs(v, w) ==
              static_cast<long long>(hom_set(v, w).size()));
      }
    }
  }
}

TEST_CASE("dot export of the worked example") {
  std::string dot = to_dot(gamma_of(rep_v()));
  CHECK(dot.find("digraph colored_quiver {") == 0);
  CHECK(dot.find("qcolor=0") != std::string::npos);
  CHECK(dot.find("acolor=1, color=blue, style=dotted") != std::string::npos);
}
