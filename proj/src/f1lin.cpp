#include "f1rep/f1lin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace f1rep {

namespace {

void check_dims(int src, int tgt) {
  if (src < 0 || tgt < 0) {
    throw std::invalid_argument("F1Map: dimensions must be non-negative");
  }
}

}  // namespace

F1Map::F1Map(int src, int tgt) : src_dim(src), tgt_dim(tgt), image(src, 0) {
  check_dims(src, tgt);
}

F1Map::F1Map(int src, int tgt, std::vector<int> img)
    : src_dim(src), tgt_dim(tgt), image(std::move(img)) {
  check_dims(src, tgt);
  if (static_cast<int>(image.size()) != src) {
    throw std::invalid_argument("F1Map: image array must have length src_dim");
  }
  std::vector<char> used(tgt + 1, 0);
  for (int v : image) {
    if (v < 0 || v > tgt) {
      throw std::invalid_argument("F1Map: image entry out of range");
    }
    if (v != 0) {
      if (used[v]) {
        throw std::invalid_argument(
            "F1Map: nonzero image entries must be distinct");
      }
      used[v] = 1;
    }
  }
}

F1Map F1Map::identity(int n) {
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = k;
  return F1Map(n, n, std::move(img));
}

bool F1Map::is_zero() const {
  return std::all_of(image.begin(), image.end(), [](int v) { return v == 0; });
}

int F1Map::rank() const {
  return static_cast<int>(
      std::count_if(image.begin(), image.end(), [](int v) { return v != 0; }));
}

int F1Map::kernel_size() const { return src_dim - rank(); }

F1Map compose(const F1Map& g, const F1Map& f) {
  if (f.tgt_dim != g.src_dim) {
    throw std::invalid_argument("compose: f.tgt_dim != g.src_dim");
  }
  std::vector<int> img(f.src_dim);
  for (int k = 1; k <= f.src_dim; ++k) img[k - 1] = g(f(k));
  return F1Map(f.src_dim, g.tgt_dim, std::move(img));
}

F1Map direct_sum(const F1Map& f, const F1Map& g) {
  std::vector<int> img(f.src_dim + g.src_dim, 0);
  for (int k = 1; k <= f.src_dim; ++k) img[k - 1] = f(k);
  for (int k = 1; k <= g.src_dim; ++k) {
    int v = g(k);
    img[f.src_dim + k - 1] = v == 0 ? 0 : f.tgt_dim + v;
  }
  return F1Map(f.src_dim + g.src_dim, f.tgt_dim + g.tgt_dim, std::move(img));
}

bool is_nilpotent(const F1Map& f) {
  if (f.src_dim != f.tgt_dim) {
    throw std::invalid_argument("is_nilpotent: map is not an endomorphism");
  }
  // Nilpotent iff the functional graph has no cycle through a nonzero element.
  for (int k = 1; k <= f.src_dim; ++k) {
    int x = f(k);
    for (int steps = 0; steps < f.src_dim && x != 0; ++steps) {
      if (x == k) return false;
      x = f(x);
    }
    if (x == k && k != 0) return false;
  }
  return true;
}

namespace {

void gen_maps(int a, int b, int pos, std::vector<int>& img,
              std::vector<char>& used, std::vector<F1Map>& out) {
  if (pos == a) {
    out.emplace_back(a, b, img);
    return;
  }
  for (int v = 0; v <= b; ++v) {
    if (v != 0 && used[v]) continue;
    img[pos] = v;
    if (v != 0) used[v] = 1;
    gen_maps(a, b, pos + 1, img, used, out);
    if (v != 0) used[v] = 0;
  }
}

}  // namespace

std::vector<F1Map> enumerate_maps(int a, int b) {
  check_dims(a, b);
  std::vector<F1Map> out;
  std::vector<int> img(a, 0);
  std::vector<char> used(b + 1, 0);
  gen_maps(a, b, 0, img, used, out);
  return out;
}

}  // namespace f1rep
