#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tarski/action.hpp"

namespace tarski {

/// Block labels (C_0, C_1, ..., C_n), each in 1..m.
using Configuration = std::vector<std::uint32_t>;

std::string to_string(const Configuration& c);

/// An ordered tuple (g_1..g_n) together with a partition (E_1..E_m) of X.
struct ConfigurationPair {
  std::vector<GroupElement> tuple;
  Partition partition;
};

/// The realized configurations of a pair and their base cells
/// x_0(C) = E_{C_0} ∩ g_1^-1 E_{C_1} ∩ ... ∩ g_n^-1 E_{C_n}.
/// Configurations are kept in lexicographic order.
class ConfigurationSet {
 public:
  /// Assembles a set from parts without checking; `compute_configurations`
  /// is the normal way to obtain one.
  ConfigurationSet(Action action, ConfigurationPair pair, std::vector<Configuration> configurations,
                   std::vector<PointSet> base_cells);

  const Action& action() const { return action_; }
  const ConfigurationPair& pair() const { return pair_; }
  const std::vector<Configuration>& configurations() const { return configurations_; }
  const std::vector<PointSet>& base_cells() const { return base_cells_; }
  std::size_t size() const { return configurations_.size(); }
  std::size_t tuple_length() const { return pair_.tuple.size(); }
  std::size_t block_count() const { return pair_.partition.size(); }

  std::optional<std::size_t> index_of(const Configuration& c) const;
  bool contains(const Configuration& c) const { return index_of(c).has_value(); }
  /// Copy with one configuration (and its base cell) removed.
  ConfigurationSet without(const Configuration& c) const;

 private:
  Action action_;
  ConfigurationPair pair_;
  std::vector<Configuration> configurations_;
  std::vector<PointSet> base_cells_;
};

/// Throws InputError if the tuple is empty, an element cannot act, or the
/// partition is invalid.
ConfigurationSet compute_configurations(const Action& action, const ConfigurationPair& pair);

/// x_0(C) for j = 0, g_j · x_0(C) for j >= 1.
PointSet cell(const ConfigurationSet& cs, const Configuration& c, std::size_t j);

struct CellViolation {
  enum class Kind { Overlap, CoverGap, BlockMismatch };
  Kind kind;
  std::size_t coordinate = 0;  // j
  std::uint32_t block = 0;     // i, BlockMismatch only
  Configuration first, second; // Overlap only
  std::optional<Point> witness;

  std::string describe() const;
};

struct CellPartitionReport {
  std::vector<CellViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every coordinate j: the cells x_j(C) partition X, and
/// E_i = ⊔_{C_j = i} x_j(C) for every block i.
CellPartitionReport verify_cell_partition(const ConfigurationSet& cs);

}  // namespace tarski
