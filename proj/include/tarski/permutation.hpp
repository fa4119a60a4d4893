#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tarski/word.hpp"

namespace tarski {

/// Bijection of {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::size_t p) const { return images_[p]; }
  std::span<const std::uint32_t> images() const { return images_; }
  bool is_identity() const;
  /// Smallest k >= 1 with this^k = identity.
  std::uint64_t order() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// (x * y)(p) = x(y(p)). Throws InputError on degree mismatch.
Permutation multiply(const Permutation& x, const Permutation& y);
Permutation invert(const Permutation& x);

/// Image of `w` under the homomorphism sending generator g to assignment[g-1].
/// w = l1 l2 ... lk evaluates to perm(l1) * perm(l2) * ... * perm(lk).
Permutation evaluate_word(std::span<const Permutation> assignment, const FreeWord& w,
                          std::size_t degree);
Permutation evaluate_word(std::span<const Permutation> assignment, const FreeWord& w);

}  // namespace tarski
