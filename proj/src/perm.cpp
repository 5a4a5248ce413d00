#include "etmod/perm.hpp"

#include <numeric>

namespace etmod {

Permutation Permutation::from_images(const std::vector<long long>& images) {
  const std::size_t n = images.size();
  if (n > 65535)
    fail(ErrorKind::MalformedPermutation, "degree exceeds 65535");
  std::vector<std::uint16_t> img(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    long long v = images[i];
    if (v < 0 || v >= static_cast<long long>(n))
      fail(ErrorKind::MalformedPermutation,
           "image " + std::to_string(v) + " out of range at position " +
               std::to_string(i));
    if (seen[static_cast<std::size_t>(v)])
      fail(ErrorKind::MalformedPermutation,
           "duplicate image " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
    img[i] = static_cast<std::uint16_t>(v);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint16_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i)
    img[i] = static_cast<std::uint16_t>(i);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    inv[img_[i]] = static_cast<std::uint16_t>(i);
  return Permutation(std::move(inv));
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<std::uint16_t> img(a.img_.size());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = b.img_[a.img_[i]];
  return Permutation(std::move(img));
}

Permutation power(const Permutation& g, std::uint64_t e) {
  Permutation acc = Permutation::identity(g.degree());
  Permutation base = g;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace etmod
