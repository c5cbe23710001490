#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f1rep/rep.hpp"

namespace f1rep {

// Normal form of an element of the quiver monoid M_Q: zero, a vertex
// idempotent, or a composable path written in traversal order.
struct MonoidElement {
  enum class Kind { Zero, Idempotent, Path };
  Kind kind = Kind::Zero;
  int vertex = -1;          // Idempotent
  std::vector<int> arrows;  // Path, first-traversed first

  static MonoidElement zero();
  static MonoidElement idempotent(int v);
  static MonoidElement path(std::vector<int> arrows, const Quiver& q);

  bool operator==(const MonoidElement&) const = default;
};

// Product a*b in M_Q (b acts first); mismatched endpoints collapse to zero.
MonoidElement mq_multiply(const MonoidElement& a, const MonoidElement& b,
                          const Quiver& q);

// An arbitrary pointed map on {0,...,dim}; module actions are not required
// to be injective away from the kernel.
struct PointedMap {
  int dim = 0;
  std::vector<int> image;

  PointedMap() = default;
  PointedMap(int d, std::vector<int> img);
  static PointedMap zero(int d) { return PointedMap(d, std::vector<int>(d, 0)); }

  int operator()(int k) const { return k == 0 ? 0 : image[k - 1]; }
  bool operator==(const PointedMap&) const = default;
};

// A finite left M_Q-module: a pointed carrier with one action map per
// generator, respecting the monoid relations.
struct MQModule {
  Quiver quiver;
  int carrier_dim = 0;
  std::vector<PointedMap> idem_action;   // per vertex
  std::vector<PointedMap> arrow_action;  // per arrow

  PointedMap act(const MonoidElement& m) const;
};

MQModule rep_to_module(const Representation& v);

// Every monoid word of length up to the carrier dimension must act
// injectively away from its kernel.
bool is_type_alpha(const MQModule& m);

// Linear module maps (partial injections commuting with all generator
// actions); mirrors Hom in the representation category.
long long module_hom_count(const MQModule& a, const MQModule& b);

// A finite set of cells in Z^n, compared and stored up to translation
// (minimum shifted to the origin, cells sorted).
struct SkewShape {
  int n = 0;
  std::vector<std::vector<int>> cells;

  bool operator==(const SkewShape&) const = default;
};

SkewShape normalize_shape(SkewShape s);
bool is_valid_shape(const SkewShape& s);      // convexity
bool is_connected_shape(const SkewShape& s);  // cover-adjacency connectivity

// Cells become basis elements; f_i adds e_i when the result stays in the
// shape. Requires a valid (convex) shape.
Representation shape_to_rep(const SkewShape& s);

// Inverse direction for indecomposable commuting graded L_n representations.
// Throws std::domain_error naming the failed hypothesis.
SkewShape rep_to_shape(const Representation& v);

bool maps_commute(const Representation& v);

// A degree per nonzero element with deg(f_i(a)) = deg(a) + e_{sigma(i)} for
// some permutation sigma, or nullopt. Degrees are translated so that each
// connected component starts at the origin.
std::optional<std::map<int, std::vector<int>>> admits_grading(const Representation& v);

// All connected skew shapes with the given cell count, one per translation
// class, lexicographically ordered.
std::vector<SkewShape> enumerate_shapes(int n, int cells);

// ASCII rendering for n = 2 (rows top-down by decreasing second coordinate).
std::string shape_ascii(const SkewShape& s);

}  // namespace f1rep
