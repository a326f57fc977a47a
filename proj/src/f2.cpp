#include "springer2/f2.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer2::f2 {

namespace {
int lead(Vec v) { return 63 - __builtin_clzll(v); }
}  // namespace

Vec Subspace::reduce(Vec v) const {
  for (Vec b : basis_)
    if ((v >> lead(b)) & 1U) v ^= b;
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(v);
  if (v == 0) return false;
  for (Vec& b : basis_)
    if ((b >> lead(v)) & 1U) b ^= v;
  basis_.push_back(v);
  std::sort(basis_.begin(), basis_.end(), std::greater<>());
  return true;
}

std::vector<Vec> Subspace::elements() const {
  std::vector<Vec> out;
  const std::size_t k = basis_.size();
  for (Vec mask = 0; mask < (Vec{1} << k); ++mask) out.push_back(apply(mask, basis_));
  std::sort(out.begin(), out.end());
  return out;
}

Subspace span(const std::vector<Vec>& vs) {
  Subspace s;
  for (Vec v : vs) s.insert(v);
  return s;
}

Vec apply(Vec v, const std::vector<Vec>& images) {
  Vec out = 0;
  for (std::size_t j = 0; j < images.size(); ++j)
    if ((v >> j) & 1U) out ^= images[j];
  return out;
}

std::vector<Vec> kernel(const std::vector<Vec>& images) {
  if (images.size() > 63) throw std::invalid_argument("f2::kernel: too many generators");
  // Gaussian elimination on (image | source) pairs.
  std::vector<std::pair<Vec, Vec>> rows;
  std::vector<Vec> ker;
  for (std::size_t j = 0; j < images.size(); ++j) {
    Vec img = images[j], src = Vec{1} << j;
    for (const auto& [ri, rs] : rows)
      if (img && ((img >> lead(ri)) & 1U)) {
        img ^= ri;
        src ^= rs;
      }
    if (img == 0) ker.push_back(src);
    else {
      rows.emplace_back(img, src);
      std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return lead(x.first) > lead(y.first); });
    }
  }
  return ker;
}

Subspace image(const std::vector<Vec>& source_vectors, const std::vector<Vec>& images) {
  Subspace s;
  for (Vec v : source_vectors) s.insert(apply(v, images));
  return s;
}

std::vector<Vec> annihilator(const Subspace& h, int dim) {
  if (dim > 24) throw std::invalid_argument("f2::annihilator: dimension too large to list");
  std::vector<Vec> out;
  for (Vec chi = 0; chi < (Vec{1} << dim); ++chi) {
    bool ok = true;
    for (Vec b : h.basis())
      if (parity(chi & b)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(chi);
  }
  return out;
}

}  // namespace springer2::f2
