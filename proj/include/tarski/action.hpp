#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tarski/group_element.hpp"
#include "tarski/point_set.hpp"

namespace tarski {

/// Largest finite group `enumerate_group` will build before giving up.
inline constexpr std::size_t kDefaultMaxGroupOrder = 100000;

/// Elements of the permutation group generated by `generators`, in
/// breadth-first order from the identity (left multiplication by generators
/// in the given order). Throws BoundExceeded above `max_order`.
std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators, std::size_t degree,
                                         std::size_t max_order = kDefaultMaxGroupOrder);

/// A group action G ↷ X in one of four backends.
///
/// - FinitePermutation: X = {0..n-1}; group elements are permutations of
///   degree n or words evaluated through the generator assignment.
/// - FreeSelf: X = G = F_k acting on itself by left multiplication.
/// - Trivial: every element fixes every point; X is either {0..n-1} or the
///   reduced words of some rank.
/// - FiniteRegular: a finite permutation group acting on its own element list
///   by left multiplication. Points are indices into `group_elements()`.
class Action {
 public:
  enum class Kind { FinitePermutation, FreeSelf, Trivial, FiniteRegular };

  static Action finite(std::size_t degree, std::vector<Permutation> generators);
  static Action free_self(int rank);
  /// Trivial action on {0..degree-1}; `group_rank` sizes the acting free group.
  static Action trivial_finite(std::size_t degree, int group_rank = 1);
  /// Trivial action on the reduced words of `rank`.
  static Action trivial_free(int rank, int group_rank = 1);
  static Action finite_regular(std::vector<Permutation> generators,
                               std::size_t max_order = kDefaultMaxGroupOrder);

  Kind kind() const { return kind_; }
  bool is_finite() const { return !free_universe_; }
  /// |X|; throws InputError for free-word universes.
  std::size_t degree() const;
  /// Rank of the free-word universe; throws InputError for finite universes.
  int universe_rank() const;
  /// Number of generators that words in tuples may use.
  int generator_count() const;
  /// Generators as permutations of X (finite universes only).
  const std::vector<Permutation>& generators() const { return point_generators_; }
  /// FiniteRegular only: the group elements, indexed by point.
  const std::vector<Permutation>& group_elements() const { return elements_; }
  /// FiniteRegular only: generators as permutations of their own degree.
  const std::vector<Permutation>& abstract_generators() const { return abstract_generators_; }

  /// Throws InputError if `g` cannot act on this action's X.
  void check_element(const GroupElement& g) const;
  /// The permutation of X induced by `g` (finite universes only).
  Permutation as_permutation(const GroupElement& g) const;

  Point act(const GroupElement& g, const Point& x) const;
  PointSet act_on_set(const GroupElement& g, const PointSet& s) const;
  /// g^-1 · s.
  PointSet preimage(const GroupElement& g, const PointSet& s) const;

  PointSet full_set() const;
  PointSet empty_set() const;
  /// Index of a group element among `group_elements()` (FiniteRegular only).
  std::optional<std::size_t> element_index(const Permutation& g) const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::Trivial;
  bool free_universe_ = false;
  std::size_t degree_ = 0;
  int rank_ = 0;
  int group_rank_ = 0;
  std::vector<Permutation> point_generators_;
  std::vector<Permutation> abstract_generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> element_lookup_;
};

/// Ordered blocks E_1..E_m.
using Partition = std::vector<PointSet>;

struct PartitionViolation {
  enum class Kind { WrongUniverse, EmptyBlock, Overlap, CoverGap };
  Kind kind;
  std::size_t block = 0;        // 0-based
  std::size_t other_block = 0;  // Overlap only
  std::optional<Point> witness;

  std::string describe() const;
};

struct PartitionReport {
  std::vector<PartitionViolation> violations;
  bool ok() const { return violations.empty(); }
};

PartitionReport validate_partition(const Action& action, const Partition& blocks);

/// A surjective point map f: X -> Y between finite actions together with
/// generator images φ(g_i), satisfying f(g_i·x) = φ(g_i)·f(x).
class EquivariantMap {
 public:
  /// Validates exhaustively; throws InputError on a non-equivariant or
  /// non-surjective table.
  static EquivariantMap make(const Action& source, const Action& target, std::vector<std::size_t> point_map,
                             std::vector<Permutation> generator_images);

  std::size_t operator()(std::size_t x) const { return point_map_[x]; }
  const std::vector<std::size_t>& point_map() const { return point_map_; }
  const std::vector<Permutation>& generator_images() const { return generator_images_; }
  std::size_t source_degree() const { return point_map_.size(); }
  std::size_t target_degree() const { return target_degree_; }
  /// φ(w) as a permutation of Y.
  Permutation image(const FreeWord& w) const;

 private:
  std::vector<std::size_t> point_map_;
  std::vector<Permutation> generator_images_;
  std::size_t target_degree_ = 0;
};

/// Block-wise preimages f^-1(E_i), in order.
Partition pull_back_partition(const EquivariantMap& map, const Partition& partition);

struct OrbitCosetResult {
  std::vector<std::size_t> orbit;  // original point labels; orbit[0] = x0
  Action orbit_action;             // the action restricted to the orbit, relabelled 0..r-1
  Action coset_action;             // G acting on G/Stab(x0)
  EquivariantMap orbit_to_coset;   // x ↦ g_x Stab(x0); a bijection
  Action regular_action;           // G acting on itself
  EquivariantMap regular_to_coset; // g ↦ g Stab(x0)
  std::size_t group_order = 0;
  std::size_t stabilizer_order = 0;
  std::vector<std::vector<std::size_t>> cosets;  // indices into regular_action.group_elements()
  bool restricted = false;
  std::string warning;
};

/// Orbit of x0 and the coset action G/Stab(x0), with both equivariant maps.
/// Non-transitive input is restricted to the orbit and reported.
OrbitCosetResult orbit_coset_action(const Action& action, std::size_t x0,
                                    std::size_t max_order = kDefaultMaxGroupOrder);

}  // namespace tarski
