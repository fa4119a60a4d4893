#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tarski/permutation.hpp"

namespace tarski {

/// Subset of the points {0, ..., degree-1} of a finite action.
class FiniteSet {
 public:
  FiniteSet() = default;
  explicit FiniteSet(std::size_t degree) : bits_(degree) {}
  /// Throws InputError when a point is out of range.
  FiniteSet(std::size_t degree, const std::vector<std::size_t>& points);

  static FiniteSet full(std::size_t degree);

  std::size_t degree() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool contains(std::size_t p) const { return p < bits_.size() && bits_.test(p); }
  bool is_empty() const { return bits_.none(); }
  void insert(std::size_t p) { bits_.set(p); }
  std::optional<std::size_t> least_member() const;
  std::vector<std::size_t> points() const;

  bool is_subset_of(const FiniteSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const FiniteSet& other) const { return bits_.intersects(other.bits_); }

  friend FiniteSet operator|(const FiniteSet& s, const FiniteSet& t);
  friend FiniteSet operator&(const FiniteSet& s, const FiniteSet& t);
  friend FiniteSet operator-(const FiniteSet& s, const FiniteSet& t);
  FiniteSet complement() const;

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

 private:
  boost::dynamic_bitset<> bits_;
};

/// {g(p) : p in s}.
FiniteSet image(const Permutation& g, const FiniteSet& s);

}  // namespace tarski
