#pragma once

#include <cstdint>
#include <vector>

#include "etmod/errors.hpp"

namespace etmod {

// A permutation of {0, ..., degree-1}, stored as its image sequence.
// Products read left to right: (a * b)(i) = b(a(i)), so right-regular
// representations are homomorphisms without any flipping.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<std::uint16_t> images)
      : img_(std::move(images)) {}

  // Checked construction from arbitrary integers.
  static Permutation from_images(const std::vector<long long>& images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  std::uint16_t operator[](std::size_t i) const { return img_[i]; }
  const std::vector<std::uint16_t>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Order as lcm of cycle lengths.
  std::uint64_t order() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  // Lexicographic on image sequences; the canonical element order.
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
  std::vector<std::uint16_t> img_;
};

Permutation power(const Permutation& g, std::uint64_t e);

}  // namespace etmod
