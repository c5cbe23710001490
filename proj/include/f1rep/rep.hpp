#pragma once

#include <vector>

#include "f1rep/f1lin.hpp"
#include "f1rep/quiver.hpp"

namespace f1rep {

// A representation of a quiver over F1: one pointed set per vertex (given by
// its dimension) and one partial injection per arrow.
struct Representation {
  Quiver quiver;
  DimVector dims;
  std::vector<F1Map> maps;

  Representation() = default;
  Representation(Quiver q, DimVector d, std::vector<F1Map> m);

  int total_dim() const;
  bool operator==(const Representation&) const = default;
};

// Components of a morphism, one map per vertex. The commuting-square
// condition is checked by is_morphism.
struct Morphism {
  std::vector<F1Map> components;
};

// Per-vertex subsets of nonzero elements, closed under all arrow maps.
struct SubRep {
  std::vector<std::vector<int>> subsets;  // sorted element lists
};

Representation zero_rep(const Quiver& q);
Representation simple_rep(const Quiver& q, int vertex);

// Jordan chain of the given length over the Jordan quiver: f(k) = k-1.
Representation jordan_chain(int len);

bool is_morphism(const Representation& v, const Representation& w,
                 const Morphism& phi);

// True iff the colored quiver of v is acyclic.
bool is_nilpotent_rep(const Representation& v);

Representation direct_sum_rep(const Representation& v, const Representation& w);

// All morphisms v -> w, ordered lexicographically by component image arrays.
std::vector<Morphism> hom_set(const Representation& v, const Representation& w);

bool is_valid_subrep(const Representation& r, const SubRep& s);

// All arrow-closed per-vertex subsets, in a deterministic order.
std::vector<SubRep> subrepresentations(const Representation& r);

// The subrepresentation itself, with elements renumbered per vertex.
Representation sub_to_rep(const Representation& r, const SubRep& s);

Representation quotient(const Representation& r, const SubRep& s);

// Number of invertible endomorphisms.
long long aut_count(const Representation& r);

// Indecomposable summands (connected components of the colored quiver),
// ordered by smallest member element.
std::vector<Representation> decompose(const Representation& r);

}  // namespace f1rep
