#pragma once

#include <string>
#include <vector>

#include "f1rep/rep.hpp"

namespace f1rep {

// The colored quiver of a representation: one vertex per nonzero element,
// colored by its quiver vertex; one arrow per arrow action, colored by the
// quiver arrow.
struct ColoredQuiver {
  struct Arrow {
    int src;
    int tgt;
    int color;
    bool operator==(const Arrow&) const = default;
  };

  Quiver base;
  std::vector<int> vertex_color;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertex_color.size()); }
  bool operator==(const ColoredQuiver&) const = default;
};

// Complete invariant for chromatic isomorphism, usable as a hash-map key.
using CanonicalKey = std::string;

ColoredQuiver gamma_of(const Representation& v);

// Conditions characterizing colored quivers of nilpotent representations:
// the color projection is a quiver map, the digraph is acyclic, and per
// arrow color every vertex has in- and out-degree at most one.
bool check_admissible(const ColoredQuiver& g);

// Inverse of gamma_of, up to chromatic isomorphism. Throws naming the
// violated admissibility condition.
Representation rep_of(const ColoredQuiver& g);

// Canonical form via color refinement plus backtracking over the smallest
// ambiguous class, computed per connected component. Works for arbitrary
// colored multidigraphs, so it also serves the non-nilpotent tables.
CanonicalKey canonical_key(const ColoredQuiver& g);

// canonical_key(gamma_of(r))
CanonicalKey rep_key(const Representation& r);

std::string key_hex(const CanonicalKey& key);

bool is_connected(const ColoredQuiver& g);

// |Hom(v,w)| counted on the colored-quiver side: bijective chromatic maps
// from upwardly-closed full subquivers of Gamma_v onto downwardly-closed
// full subquivers of Gamma_w. Requires both representations nilpotent.
long long chromatic_homs(const Representation& v, const Representation& w);

std::string to_dot(const ColoredQuiver& g);

}  // namespace f1rep
