#include "f1rep/hall.hpp"

#include <algorithm>
#include <stdexcept>

namespace f1rep {

HallElement& add_term(HallElement& x, const CanonicalKey& key, const Rational& c) {
  if (c.is_zero()) return x;
  auto it = x.find(key);
  if (it == x.end()) {
    x.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) x.erase(it);
  }
  return x;
}

HallAlgebra::HallAlgebra(Quiver q, int dim_cap)
    : quiver_(std::move(q)), dim_cap_(dim_cap) {
  if (dim_cap < 0) throw std::invalid_argument("HallAlgebra: negative dim cap");
  table_ = build_iso_table(quiver_, dim_cap_, true);
  for (const auto& [t, entries] : table_.by_dim) {
    for (const auto& e : entries) rep_by_key_.emplace(e.key, e.rep);
  }
}

const std::vector<IsoClassEntry>& HallAlgebra::classes(int total_dim) const {
  auto it = table_.by_dim.find(total_dim);
  if (it == table_.by_dim.end()) {
    throw std::out_of_range(
        "HallAlgebra: iso-class table does not cover dimension " +
        std::to_string(total_dim) + "; rebuild with a larger dim cap");
  }
  return it->second;
}

IsoClass HallAlgebra::class_of(const Representation& r) const {
  if (r.quiver != quiver_) {
    throw std::invalid_argument("HallAlgebra: representation lives on another quiver");
  }
  if (!is_nilpotent_rep(r)) {
    throw std::invalid_argument("HallAlgebra: representation is not nilpotent");
  }
  CanonicalKey key = rep_key(r);
  auto it = rep_by_key_.find(key);
  return {key, it != rep_by_key_.end() ? it->second : r};
}

const Representation& HallAlgebra::rep_of_key(const CanonicalKey& key) const {
  auto it = rep_by_key_.find(key);
  if (it == rep_by_key_.end()) {
    throw std::out_of_range("HallAlgebra: unknown iso-class key");
  }
  return it->second;
}

IsoClass HallAlgebra::zero_class() const { return class_of(zero_rep(quiver_)); }

long long HallAlgebra::aut(const CanonicalKey& key) const {
  auto it = aut_cache_.find(key);
  if (it != aut_cache_.end()) return it->second;
  long long a = aut_count(rep_of_key(key));
  aut_cache_.emplace(key, a);
  return a;
}

long long hall_coeff_count(const Representation& r, const Representation& m,
                           const Representation& n) {
  if (m.total_dim() + n.total_dim() != r.total_dim()) return 0;
  CanonicalKey key_m = rep_key(m), key_n = rep_key(n);
  long long count = 0;
  for (const auto& sub : subrepresentations(r)) {
    if (rep_key(sub_to_rep(r, sub)) != key_n) continue;
    if (rep_key(quotient(r, sub)) == key_m) ++count;
  }
  return count;
}

long long HallAlgebra::hall_coeff(const IsoClass& r, const IsoClass& m,
                                  const IsoClass& n) const {
  if (m.rep.total_dim() + n.rep.total_dim() != r.rep.total_dim()) return 0;
  long long count = 0;
  for (const auto& sub : subrepresentations(r.rep)) {
    if (rep_key(sub_to_rep(r.rep, sub)) != n.key) continue;
    if (rep_key(quotient(r.rep, sub)) == m.key) ++count;
  }
  return count;
}

namespace {

bool components_injective(const Morphism& phi) {
  return std::all_of(phi.components.begin(), phi.components.end(),
                     [](const F1Map& f) { return f.rank() == f.src_dim; });
}

bool components_surjective(const Morphism& phi) {
  return std::all_of(phi.components.begin(), phi.components.end(),
                     [](const F1Map& f) { return f.rank() == f.tgt_dim; });
}

// image of inj equals kernel of surj at every vertex
bool exact_at_middle(const Morphism& inj, const Morphism& surj) {
  for (size_t u = 0; u < inj.components.size(); ++u) {
    const F1Map& i = inj.components[u];
    const F1Map& p = surj.components[u];
    std::vector<char> in_image(i.tgt_dim + 1, 0);
    for (int k = 1; k <= i.src_dim; ++k) {
      if (i(k) != 0) in_image[i(k)] = 1;
    }
    for (int y = 1; y <= p.src_dim; ++y) {
      if ((p(y) == 0) != (in_image[y] != 0)) return false;
    }
  }
  return true;
}

}  // namespace

long long ses_pair_count(const Representation& r, const Representation& m,
                         const Representation& n) {
  std::vector<Morphism> injections;
  for (auto& phi : hom_set(n, r)) {
    if (components_injective(phi)) injections.push_back(std::move(phi));
  }
  std::vector<Morphism> surjections;
  for (auto& phi : hom_set(r, m)) {
    if (components_surjective(phi)) surjections.push_back(std::move(phi));
  }
  long long count = 0;
  for (const auto& i : injections) {
    for (const auto& p : surjections) {
      if (exact_at_middle(i, p)) ++count;
    }
  }
  return count;
}

long long HallAlgebra::ses_count(const IsoClass& r, const IsoClass& m,
                                 const IsoClass& n) const {
  return ses_pair_count(r.rep, m.rep, n.rep);
}

HallElement HallAlgebra::product(const HallElement& x, const HallElement& y) const {
  HallElement out;
  for (const auto& [keyM, cM] : x) {
    const Representation& M = rep_of_key(keyM);
    for (const auto& [keyN, cN] : y) {
      const Representation& N = rep_of_key(keyN);
      int total = M.total_dim() + N.total_dim();
      DimVector dsum(quiver_.num_vertices);
      for (int u = 0; u < quiver_.num_vertices; ++u) {
        dsum[u] = M.dims[u] + N.dims[u];
      }
      IsoClass mc{keyM, M}, nc{keyN, N};
      for (const auto& entry : classes(total)) {
        if (entry.rep.dims != dsum) continue;
        long long a = hall_coeff({entry.key, entry.rep}, mc, nc);
        if (a != 0) add_term(out, entry.key, cM * cN * Rational(a));
      }
    }
  }
  return out;
}

TensorElement HallAlgebra::coproduct(const HallElement& x) const {
  TensorElement out;
  for (const auto& [keyR, cR] : x) {
    const Representation& R = rep_of_key(keyR);
    // indecomposable summand multiset
    std::vector<std::pair<Representation, int>> groups;  // (summand, multiplicity)
    std::vector<CanonicalKey> group_keys;
    for (auto& s : decompose(R)) {
      CanonicalKey k = rep_key(s);
      auto it = std::find(group_keys.begin(), group_keys.end(), k);
      if (it == group_keys.end()) {
        group_keys.push_back(k);
        groups.emplace_back(std::move(s), 1);
      } else {
        groups[it - group_keys.begin()].second += 1;
      }
    }
    // ordered splittings: choose a sub-multiset for the left factor
    std::vector<int> take(groups.size(), 0);
    auto rec = [&](auto&& self, size_t i) -> void {
      if (i == groups.size()) {
        Representation left = zero_rep(quiver_), right = zero_rep(quiver_);
        for (size_t g = 0; g < groups.size(); ++g) {
          for (int c = 0; c < take[g]; ++c) left = direct_sum_rep(left, groups[g].first);
          for (int c = take[g]; c < groups[g].second; ++c) {
            right = direct_sum_rep(right, groups[g].first);
          }
        }
        auto key = std::make_pair(rep_key(left), rep_key(right));
        auto it = out.find(key);
        if (it == out.end()) {
          out.emplace(key, cR);
        } else {
          it->second = it->second + cR;
          if (it->second.is_zero()) out.erase(it);
        }
        return;
      }
      for (take[i] = 0; take[i] <= groups[i].second; ++take[i]) self(self, i + 1);
      take[i] = 0;
    };
    rec(rec, 0);
  }
  return out;
}

TensorElement HallAlgebra::tensor_product(const TensorElement& x,
                                          const TensorElement& y) const {
  TensorElement out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      HallElement left = product({{kx.first, Rational(1)}}, {{ky.first, Rational(1)}});
      HallElement right = product({{kx.second, Rational(1)}}, {{ky.second, Rational(1)}});
      for (const auto& [kl, cl] : left) {
        for (const auto& [kr, cr] : right) {
          auto key = std::make_pair(kl, kr);
          Rational add = cx * cy * cl * cr;
          auto it = out.find(key);
          if (it == out.end()) {
            if (!add.is_zero()) out.emplace(key, add);
          } else {
            it->second = it->second + add;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
    }
  }
  return out;
}

HallElement HallAlgebra::lie_bracket(const IsoClass& x, const IsoClass& y) const {
  for (const IsoClass* c : {&x, &y}) {
    if (!is_connected(gamma_of(c->rep))) {
      throw std::invalid_argument("lie_bracket: arguments must be indecomposable");
    }
  }
  HallElement fwd = product(delta(x), delta(y));
  HallElement bwd = product(delta(y), delta(x));
  for (const auto& [k, c] : bwd) add_term(fwd, k, Rational(0) - c);
  return fwd;
}

IsoClass HallAlgebra::sigma_twist(const IsoClass& x, const std::vector<int>& sigma) const {
  if (quiver_.num_vertices != 1) {
    throw std::invalid_argument("sigma_twist: quiver must be a loop quiver");
  }
  int n = quiver_.num_arrows();
  if (static_cast<int>(sigma.size()) != n) {
    throw std::invalid_argument("sigma_twist: permutation size mismatch");
  }
  std::vector<char> seen(n, 0);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) {
      throw std::invalid_argument("sigma_twist: not a permutation");
    }
    seen[v] = 1;
  }
  const Representation& r = x.rep;
  std::vector<F1Map> maps(n, F1Map(0, 0));
  for (int i = 0; i < n; ++i) maps[i] = r.maps[sigma[i]];
  return class_of(Representation(quiver_, r.dims, std::move(maps)));
}

HallElement HallAlgebra::delta(const IsoClass& x) const {
  return HallElement{{x.key, Rational(1)}};
}

}  // namespace f1rep
