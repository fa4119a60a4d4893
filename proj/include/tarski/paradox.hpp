#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tarski/action.hpp"
#include "tarski/config.hpp"

namespace tarski {

/// A named hypothesis of a construction failed on the given data.
class HypothesisError : public std::runtime_error {
 public:
  HypothesisError(std::string hypothesis, std::optional<Point> witness, const std::string& detail)
      : std::runtime_error(detail), hypothesis_(std::move(hypothesis)), witness_(std::move(witness)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }
  const std::optional<Point>& witness() const noexcept { return witness_; }

 private:
  std::string hypothesis_;
  std::optional<Point> witness_;
};

struct Piece {
  PointSet set;
  GroupElement translator;
};

/// Pieces A_1..A_n with translators g_i and B_1..B_m with translators h_j:
/// all pieces pairwise disjoint, X = ∪ g_i A_i = ∪ h_j B_j.
struct ParadoxicalDecomposition {
  std::vector<Piece> first;
  std::vector<Piece> second;

  std::size_t piece_count() const { return first.size() + second.size(); }
};

struct DecompositionCheck {
  enum class Kind { Ok, WrongUniverse, Overlap, CoverGap, TranslateOverlap, PiecesDoNotExhaust };
  Kind kind = Kind::Ok;
  /// Piece indices across both families (first family first), 0-based.
  std::size_t piece = 0;
  std::size_t other_piece = 0;
  int family = 0;  // 1 or 2 for cover failures
  std::optional<Point> witness;
  std::string detail;

  bool ok() const { return kind == Kind::Ok; }
};

/// Checks pairwise disjointness and both covers. With `strict`, the
/// translates within each family must also be disjoint and the pieces must
/// exhaust X.
DecompositionCheck verify_decomposition(const Action& action, const ParadoxicalDecomposition& dec,
                                        bool strict = false);

/// Sets X_1..X_n and elements h_1..h_n with X_{n+1} = X_1.
struct PingPongChain {
  std::vector<PointSet> sets;
  std::vector<GroupElement> elements;
};

struct ChainDecomposition {
  ParadoxicalDecomposition decomposition;
  std::size_t piece_bound = 0;           // n + 2
  std::vector<GroupElement> prefixes;    // s_1..s_{n+1}, s_i = h_n h_{n-1} ... h_i, s_{n+1} = e
  std::vector<PointSet> differences;     // D_i = X_{i+1} \ h_i X_i
  std::vector<PointSet> telescoping;     // E_0 = s_1 X_1, E_i = s_{i+1} D_i
};

/// Builds the (n+2)-piece decomposition from a ping-pong chain. Throws
/// HypothesisError when h_i X_i ⊄ X_{i+1} or the D_i miss a point.
ChainDecomposition chain_to_decomposition(const Action& action, const PingPongChain& chain);

/// 2k pairwise disjoint sets A_i, B_i and elements g_i.
struct CyclicTableau {
  std::vector<PointSet> a;
  std::vector<PointSet> b;
  std::vector<GroupElement> elements;
};

struct PingPongCertificate {
  bool ok = false;
  std::string failure;                  // which condition failed
  std::size_t index = 0;                // 0-based tableau row of the failure
  std::optional<Point> witness;
  std::vector<std::string> verified;    // human-readable verified inclusions
  std::string conclusion;
};

/// Verifies B_i^c ⊆ g_i A_i for every i; on success ⟨g_1..g_k⟩ is free of rank k.
PingPongCertificate check_pingpong_cyclic(const Action& action, const CyclicTableau& tableau);

/// One factor H_i for the subgroup ping-pong check.
struct SubgroupSpec {
  /// Cyclic: ⟨elements[0]⟩, powers 1 <= |n| <= exponent_bound when infinite.
  /// Listed: the subgroup generated by `elements` (finite universes), or the
  /// listed elements themselves (free-word universes).
  enum class Kind { Cyclic, Listed };
  Kind kind = Kind::Cyclic;
  std::vector<GroupElement> elements;
  long exponent_bound = 3;
};

struct SubgroupPingPongReport {
  enum class Status { Ok, OverlappingSets, EmptySet, SizeCondition, InclusionFailed };
  Status status = Status::Ok;
  std::string detail;
  /// Certified |H_i|; nullopt means infinite.
  std::vector<std::optional<std::uint64_t>> orders;
  bool exhaustive = false;  // every H_i finite and fully enumerated
  long exponent_bound = 0;
  std::size_t inclusions_checked = 0;
  std::optional<Point> witness;

  bool ok() const { return status == Status::Ok; }
};

/// For every enumerated nonidentity h ∈ H_i and s ≠ i, verifies h·X_s ⊆ X_i.
/// For k = 2 requires |H_1| >= 3 and |H_2| >= 2; for k > 2 some |H_i| > 2.
SubgroupPingPongReport check_pingpong_subgroups(const Action& action, const std::vector<SubgroupSpec>& groups,
                                                const std::vector<PointSet>& sets);

/// Five pairwise disjoint sets with g_1E_1 = E_2 = g_2^-1 E_4 and
/// E_3 = g_1^-1 E_5 = g_2 E_1.
struct NonabelianWitness {
  std::vector<PointSet> sets;
  GroupElement g1;
  GroupElement g2;
};

/// Singletons {e}, {g1}, {g2}, {g2g1}, {g1g2} in a regular or free self-action.
/// Throws HypothesisError("elements commute") when g1g2 = g2g1.
NonabelianWitness make_nonabelian_witness(const Action& action, const GroupElement& g1, const GroupElement& g2);

struct WitnessCheck {
  bool ok = false;
  std::string reason;
};

WitnessCheck verify_nonabelian(const Action& action, const NonabelianWitness& w);

/// Disjoint E_1, E_2 with a E_1 ⊆ E_1 and a E_2 ∩ E_1 ≠ ∅.
struct InfiniteOrderWitness {
  PointSet e1;
  PointSet e2;
  GroupElement a;
};

struct InfiniteOrderOutcome {
  std::optional<InfiniteOrderWitness> witness;
  std::optional<std::uint64_t> finite_order;
  std::string reason;
};

/// Free self-action: E_1 = {a^n : n >= 0}, E_2 = {a^-n : n >= 1}. Finite
/// backends report the element's order instead.
InfiniteOrderOutcome make_infinite_order_witness(const Action& action, const GroupElement& a);
WitnessCheck verify_infinite_order(const Action& action, const InfiniteOrderWitness& w);

/// Coordinate j (0 = the point itself, j >= 1 = g_j · point) landing in block i.
struct PatternHit {
  std::size_t coordinate = 0;
  std::uint32_t block = 0;  // 1-based
};

/// Two families of hits. A configuration is covered by a family when it
/// matches at least one hit of it.
struct ParadoxPattern {
  std::vector<PatternHit> first;
  std::vector<PatternHit> second;
};

struct PatternCheck {
  enum class Kind { Holds, OutOfRange, SharedBlock, Uncovered };
  Kind kind = Kind::Holds;
  int family = 0;
  std::optional<Configuration> counterexample;
  std::string detail;

  bool holds() const { return kind == Kind::Holds; }
};

PatternCheck pattern_check(const ConfigurationSet& cs, const ParadoxPattern& p);

/// Pieces E_i with translator g_j^-1 (identity for coordinate 0), one per hit.
ParadoxicalDecomposition pattern_decomposition(const ConfigurationSet& cs, const ParadoxPattern& p);

struct SearchBounds {
  std::size_t max_pieces = 4;
  std::size_t depth = 1;
  std::size_t translator_length = 1;
  std::size_t max_candidates = 5000000;
};

struct SearchResult {
  std::optional<ParadoxicalDecomposition> found;
  std::string obstruction;  // set when a structural argument rules out any decomposition
  std::size_t candidates_examined = 0;
  SearchBounds bounds;
};

/// Exhaustive search over pieces that are depth-d atoms (singletons of words
/// shorter than d, cones of words of length d) and translators of length
/// <= L. Fewest pieces first, then lexicographic. Throws BoundExceeded past
/// `max_candidates`.
SearchResult bounded_paradox_search(const Action& action, const SearchBounds& bounds);

}  // namespace tarski
