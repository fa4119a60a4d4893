#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tarski/config.hpp"

namespace tarski {

/// Search bounds for comparing configuration data of two actions. The full
/// quantifier over all pairs is infinite; results only ever hold up to these.
struct ConBounds {
  std::size_t max_tuple_length = 2;
  std::size_t max_word_length = 1;
  /// Used when a partition family is generated automatically.
  std::size_t max_blocks = 2;
  /// Caller-supplied partition families; generated when absent.
  std::optional<std::vector<Partition>> partitions_a;
  std::optional<std::vector<Partition>> partitions_b;
};

struct ConInclusionReport {
  bool included = false;  // every A-pair within bounds has a B-pair with an equal set
  std::size_t a_pairs_checked = 0;
  std::size_t b_pairs_enumerated = 0;
  std::optional<ConfigurationPair> counterexample;
  std::vector<Configuration> counterexample_configurations;
};

/// Every tuple of length 1..max_length whose entries are words of length
/// <= max_word_length over the action's generators, shortlex within each entry.
std::vector<std::vector<GroupElement>> generate_tuples(const Action& action, std::size_t max_length,
                                                       std::size_t max_word_length);

/// Partitions into at most `max_blocks` nonempty blocks: of the points for
/// finite universes, of the depth-one atoms {e}, cone(a), cone(A), ... for
/// free-word universes. Ordered by restricted growth string. Throws
/// BoundExceeded beyond `limit` partitions.
std::vector<Partition> generate_partitions(const Action& action, std::size_t max_blocks, std::size_t limit = 100000);

/// Bounded check of Con(A) ⊆ Con(B).
ConInclusionReport con_included(const Action& a, const Action& b, const ConBounds& bounds);

struct CardinalityProbe {
  bool admits = false;  // X splits into n nonempty blocks
  /// The splitting, when it exists: n-1 singletons and the rest.
  std::optional<Partition> witness;
};

CardinalityProbe cardinality_probe(const Action& action, std::size_t n);

}  // namespace tarski
