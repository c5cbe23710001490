#pragma once

#include <vector>

namespace f1rep {

// A linear map between the pointed sets {0,...,src_dim} and {0,...,tgt_dim}.
// image[k-1] is the image of the nonzero element k; the value 0 means "sent
// to the basepoint".  Nonzero entries are pairwise distinct, so the map is a
// partial injection.
struct F1Map {
  int src_dim = 0;
  int tgt_dim = 0;
  std::vector<int> image;  // size src_dim, entries in 0..tgt_dim

  F1Map() = default;
  F1Map(int src, int tgt);                        // zero map
  F1Map(int src, int tgt, std::vector<int> img);  // validates entries

  static F1Map identity(int n);

  // Image of element k (k = 0 is the basepoint).
  int operator()(int k) const { return k == 0 ? 0 : image[k - 1]; }

  bool operator==(const F1Map&) const = default;

  bool is_zero() const;
  int rank() const;         // number of nonzero image entries
  int kernel_size() const;  // src_dim - rank()
};

// g after f (f is applied first). Requires f.tgt_dim == g.src_dim.
F1Map compose(const F1Map& g, const F1Map& f);

// Block map on {0,...,f.src+g.src}; the first block acts as f, the second as
// g with both indices shifted past f's dimensions.
F1Map direct_sum(const F1Map& f, const F1Map& g);

// True iff some power of f is the zero map. Requires src_dim == tgt_dim.
bool is_nilpotent(const F1Map& f);

// All partial injections {0..a} -> {0..b}, ordered lexicographically by
// image array.
std::vector<F1Map> enumerate_maps(int a, int b);

}  // namespace f1rep
