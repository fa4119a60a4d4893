#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tarski/word.hpp"

namespace tarski {

/// A regular set of reduced words in the free group of a given rank.
///
/// Stored as the minimal complete DFA over the signed alphabet (a, A, b, B,
/// ...), with states numbered in breadth-first order from the start state.
/// That numbering makes the representation canonical, so `operator==` is
/// extensional set equality. Every accepted word is reduced.
class SymbolicSet {
 public:
  static SymbolicSet empty(int rank);
  static SymbolicSet full(int rank);
  /// All reduced words having `prefix` as a prefix, `prefix` included.
  static SymbolicSet cone(int rank, const FreeWord& prefix);
  static SymbolicSet singleton(int rank, const FreeWord& w);
  /// {a^n : n >= 1}. For a = e this is {e}.
  static SymbolicSet positive_powers(int rank, const FreeWord& a);

  int rank() const { return rank_; }
  std::size_t state_count() const { return accepting_.size(); }

  bool contains(const FreeWord& w) const;
  bool is_empty() const;
  bool is_full() const;
  /// Shortlex-least member, if any.
  std::optional<FreeWord> least_member() const;
  /// Members of length <= max_length in shortlex order.
  std::vector<FreeWord> enumerate_up_to(std::size_t max_length) const;

  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;

  // Raw automaton access for algorithms in this module.
  struct Automaton {
    int alphabet = 0;
    std::uint32_t start = 0;
    std::vector<std::uint32_t> next;  // next[state * alphabet + letter]
    std::vector<std::uint8_t> accepting;
    std::uint32_t step(std::uint32_t s, int letter) const { return next[s * alphabet + letter]; }
  };
  /// Minimises `dfa`, intersects it with the reduced-word language of `rank`
  /// and renumbers canonically.
  static SymbolicSet from_automaton(int rank, const Automaton& dfa);
  Automaton automaton() const;

 private:
  int rank_ = 0;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint8_t> accepting_;
};

enum class SetOp { Union, Intersection, Complement, Difference };

/// Union/intersection fold over all operands; complement takes one operand;
/// difference takes two. Throws InputError on rank mismatch or arity errors.
SymbolicSet combine(SetOp op, std::span<const SymbolicSet> operands);
SymbolicSet set_union(const SymbolicSet& s, const SymbolicSet& t);
SymbolicSet intersection(const SymbolicSet& s, const SymbolicSet& t);
SymbolicSet complement(const SymbolicSet& s);
SymbolicSet difference(const SymbolicSet& s, const SymbolicSet& t);

/// Left translate g·S = {g w : w in S}. Throws InputError if g uses a
/// generator above the set's rank.
SymbolicSet translate(const FreeWord& g, const SymbolicSet& s);

struct SetRelation {
  bool equal = false;
  bool subset = false;  // S ⊆ T
  bool disjoint = false;
  bool empty = false;   // S = ∅
  /// Shortlex-least word of S \ T when `subset` is false.
  std::optional<FreeWord> subset_witness;
  /// Shortlex-least word of S ∩ T when `disjoint` is false.
  std::optional<FreeWord> overlap_witness;
};

SetRelation compare(const SymbolicSet& s, const SymbolicSet& t);

}  // namespace tarski
