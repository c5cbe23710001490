#pragma once

#include <map>
#include <vector>

#include "f1rep/colored.hpp"
#include "f1rep/rational.hpp"
#include "f1rep/rep.hpp"

namespace f1rep {

struct IsoClassEntry {
  CanonicalKey key;
  Representation rep;
  bool indecomposable = false;
  bool nilpotent = false;
};

// One entry per isomorphism class, grouped by total dimension.
struct IsoClassTable {
  Quiver quiver;
  std::map<int, std::vector<IsoClassEntry>> by_dim;
};

// All dimension vectors with the given total, lexicographic.
std::vector<DimVector> compositions(int total, int parts);

// One representative per iso class with dimension vector d, found by
// sweeping all map tuples and bucketing by canonical key. Sorted by key.
std::vector<IsoClassEntry> enumerate_classes(const Quiver& q, const DimVector& d,
                                             bool nilpotent_only);
std::vector<Representation> enumerate_reps(const Quiver& q, const DimVector& d,
                                           bool nilpotent_only);

IsoClassTable build_iso_table(const Quiver& q, int max_total_dim,
                              bool nilpotent_only);

// Growth functions: iso classes of n-dimensional indecomposables, nilpotent
// (ni) or arbitrary (i_growth).
long long ni(const Quiver& q, int n);
long long i_growth(const Quiver& q, int n);

// Nilpotent classes of the n-loop quiver in dimension d, enumerated on the
// colored-quiver side: fix the color-0 skeleton (a chain partition of d) and
// sweep the remaining colors. Reaches dimensions where the map-tuple sweep
// is out of range.
std::vector<CanonicalKey> ln_class_keys(int loops, int d, bool connected_only);

// The indecomposable I_[n,i] over a cycle quiver (vertices ordered
// cyclically, arrow j between j and j+1); i is the 1-based start vertex.
Representation build_I(const Quiver& cycle, int n, int i);

// The cycle-shaped nilpotent indecomposable of dimension w*ell over an
// acyclic cycle quiver. Throws on equioriented input.
Representation build_I_tilde(const Quiver& cycle, int w, int i);

// M(n): [n] at every vertex, arrow 0 acts by k -> k-1, all other arrows by
// the identity. Requires arrow 0 to start at vertex 0.
Representation build_M(const Quiver& cycle, int n);

// Deletes loop i (0-based) of an L_n representation, relabeling the rest.
Representation delete_loop(const Representation& m, int i);

// The doubling construction L_n -> L_{n-1}: two stacked copies of the
// colored quiver (arrow n-1 resp. n deleted) glued along maximal colored
// paths. Injective on iso classes and indecomposability-preserving for
// n >= 3.
Representation f_reduce(const Representation& m);

// Attach a leaf per colored-quiver vertex, tagged with its vertex color,
// and forget vertex colors: a nilpotent Q-representation becomes an
// L_{|Q0|+|Q1|}-representation of twice the dimension.
Representation embed_loops(const Representation& m);

// Place an L_2 representation on the subquiver spanned by a fundamental
// cycle pair of q (cycle_rank >= 2): f_1 on alpha, f_2 on beta, identities
// on the rest of the subquiver, zero elsewhere.
Representation embed_rank2(const Representation& m, const Quiver& q);

// Finite-prefix check of NI_q(n) <= D * NI_q2(C*n) for 1 <= n <= n_max.
// The underlying relation is asymptotic; this verifies a prefix only.
bool nil_leq_check(const Quiver& q, const Quiver& q2, int C, const Rational& D,
                   int n_max);

// The gluing family over pendant_cycle_quiver(ell): n pairwise
// non-isomorphic nilpotent indecomposables of dimension 3*ell*n.
std::vector<Representation> pseudotree_family(int ell, int n);

}  // namespace f1rep
