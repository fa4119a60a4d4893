#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tarski/config.hpp"
#include "tarski/equations.hpp"

namespace tarski {

/// How a fine pair relates to a coarse pair.
/// - Partition: same tuple, fine partition refines coarse (C ≪ D).
/// - String: same partition, coarse tuple is a prefix of the fine tuple (D ⪯ C).
/// - Composed: both at once; applied as Partition then String.
enum class RefinementMode { Partition, String, Composed };

/// Maps configurations of a fine pair onto those of a coarse pair.
class ConfigurationProjection {
 public:
  /// Throws InputError if `fine` does not refine `coarse` in the given mode.
  ConfigurationProjection(RefinementMode mode, const ConfigurationPair& fine, const ConfigurationPair& coarse);

  Configuration operator()(const Configuration& c) const;
  /// Coarse block (1-based) containing each fine block.
  const std::vector<std::uint32_t>& block_map() const { return block_map_; }

 private:
  std::vector<std::uint32_t> block_map_;
  std::size_t coarse_length_ = 0;
};

Configuration project_configuration(RefinementMode mode, const ConfigurationPair& fine,
                                    const ConfigurationPair& coarse, const Configuration& c);

/// z_D = Σ_{C ↦ D} z_C. Throws InputError if `z` is not a normalized
/// solution of the fine system or the pairs are not related by `mode`.
std::vector<Rational> coarsen_solution(RefinementMode mode, const ConfigurationSet& fine,
                                       const ConfigurationSet& coarse, std::span<const Rational> z);

}  // namespace tarski
