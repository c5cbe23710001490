#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "f1rep/enumerate.hpp"
#include "f1rep/rational.hpp"

namespace f1rep {

struct IsoClass {
  CanonicalKey key;
  Representation rep;
};

// Finite formal linear combination of iso-class keys; no zero coefficients
// are stored.
using HallElement = std::map<CanonicalKey, Rational>;
using TensorElement = std::map<std::pair<CanonicalKey, CanonicalKey>, Rational>;

HallElement& add_term(HallElement& x, const CanonicalKey& key, const Rational& c);

// a^R_{M,N} and P^R_{M,N} on plain representations (all nilpotent, same
// quiver): the subrepresentation count and the short-exact-sequence count.
// The identity a^R_{M,N} * |Aut M| * |Aut N| = P^R_{M,N} is a theorem the
// test suites verify, so the two are computed by independent routes.
long long hall_coeff_count(const Representation& r, const Representation& m,
                           const Representation& n);
long long ses_pair_count(const Representation& r, const Representation& m,
                         const Representation& n);

// The Hall algebra of nilpotent representations of a fixed quiver, with all
// iso classes up to a dimension cap precomputed.
class HallAlgebra {
 public:
  HallAlgebra(Quiver q, int dim_cap);

  const Quiver& quiver() const { return quiver_; }
  int dim_cap() const { return dim_cap_; }
  const std::vector<IsoClassEntry>& classes(int total_dim) const;

  // Canonicalize a nilpotent representation into its iso class.
  IsoClass class_of(const Representation& r) const;
  const Representation& rep_of_key(const CanonicalKey& key) const;
  IsoClass zero_class() const;

  long long aut(const CanonicalKey& key) const;

  // a^R_{M,N}: subrepresentations of R isomorphic to N with quotient
  // isomorphic to M.
  long long hall_coeff(const IsoClass& r, const IsoClass& m, const IsoClass& n) const;

  // P^R_{M,N}: pairs (injection N -> R, surjection R -> M) that are exact
  // at R, kernel and image taken pointwise at every vertex.
  long long ses_count(const IsoClass& r, const IsoClass& m, const IsoClass& n) const;

  // Bilinear extension of delta_M * delta_N = sum_R a^R_{M,N} delta_R; the
  // sum runs over classes of dimension vector dim M + dim N.
  HallElement product(const HallElement& x, const HallElement& y) const;

  // Delta(delta_R) = sum over ordered class pairs (A,B) with A + B = R.
  TensorElement coproduct(const HallElement& x) const;
  TensorElement tensor_product(const TensorElement& x, const TensorElement& y) const;

  // product(x,y) - product(y,x) for indecomposable classes.
  HallElement lie_bracket(const IsoClass& x, const IsoClass& y) const;

  // Relabel the loops of an L_n class by a permutation: g_i = f_{sigma(i)}.
  IsoClass sigma_twist(const IsoClass& x, const std::vector<int>& sigma) const;

  HallElement delta(const IsoClass& x) const;

 private:
  Quiver quiver_;
  int dim_cap_;
  IsoClassTable table_;
  std::map<CanonicalKey, Representation> rep_by_key_;
  mutable std::map<CanonicalKey, long long> aut_cache_;
};

}  // namespace f1rep
