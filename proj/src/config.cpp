#include "tarski/config.hpp"

#include <algorithm>

#include "tarski/error.hpp"

namespace tarski {

std::string to_string(const Configuration& c) {
  std::string s = "(";
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(c[j]);
  }
  return s + ")";
}

ConfigurationSet::ConfigurationSet(Action action, ConfigurationPair pair, std::vector<Configuration> configurations,
                                   std::vector<PointSet> base_cells)
    : action_(std::move(action)),
      pair_(std::move(pair)),
      configurations_(std::move(configurations)),
      base_cells_(std::move(base_cells)) {
  if (configurations_.size() != base_cells_.size()) {
    throw InputError("configuration and base-cell counts differ");
  }
}

std::optional<std::size_t> ConfigurationSet::index_of(const Configuration& c) const {
  auto it = std::lower_bound(configurations_.begin(), configurations_.end(), c);
  if (it == configurations_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - configurations_.begin());
}

ConfigurationSet ConfigurationSet::without(const Configuration& c) const {
  ConfigurationSet copy = *this;
  if (auto i = index_of(c)) {
    copy.configurations_.erase(copy.configurations_.begin() + static_cast<std::ptrdiff_t>(*i));
    copy.base_cells_.erase(copy.base_cells_.begin() + static_cast<std::ptrdiff_t>(*i));
  }
  return copy;
}

ConfigurationSet compute_configurations(const Action& action, const ConfigurationPair& pair) {
  if (pair.tuple.empty()) throw InputError("a configuration pair needs at least one group element", "tuple");
  for (std::size_t j = 0; j < pair.tuple.size(); ++j) {
    try {
      action.check_element(pair.tuple[j]);
    } catch (const InputError& e) {
      throw InputError(e.what(), "tuple[" + std::to_string(j) + "]");
    }
  }
  const auto report = validate_partition(action, pair.partition);
  if (!report.ok()) throw InputError("invalid partition: " + report.violations.front().describe(), "partition");

  const std::size_t n = pair.tuple.size();
  const std::size_t m = pair.partition.size();
  // preimages[j][i] = g_j^-1 · E_{i+1}
  std::vector<std::vector<PointSet>> preimages(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& block : pair.partition) preimages[j].push_back(action.preimage(pair.tuple[j], block));
  }

  std::vector<Configuration> configurations;
  std::vector<PointSet> cells;
  Configuration current(n + 1);
  // Depth-first over coordinates in lexicographic order, pruning empty prefixes.
  auto extend = [&](auto&& self, std::size_t j, const PointSet& acc) -> void {
    if (j == n + 1) {
      configurations.push_back(current);
      cells.push_back(acc);
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      PointSet next = j == 0 ? pair.partition[i] : intersection(acc, preimages[j - 1][i]);
      if (is_empty(next)) continue;
      current[j] = static_cast<std::uint32_t>(i + 1);
      self(self, j + 1, next);
    }
  };
  extend(extend, 0, action.full_set());
  return ConfigurationSet(action, pair, std::move(configurations), std::move(cells));
}

PointSet cell(const ConfigurationSet& cs, const Configuration& c, std::size_t j) {
  const auto index = cs.index_of(c);
  if (!index) throw InputError("configuration " + to_string(c) + " is not realized");
  if (j > cs.tuple_length()) {
    throw InputError("coordinate " + std::to_string(j) + " outside 0.." + std::to_string(cs.tuple_length()));
  }
  const PointSet& base = cs.base_cells()[*index];
  if (j == 0) return base;
  return cs.action().act_on_set(cs.pair().tuple[j - 1], base);
}

std::string CellViolation::describe() const {
  const std::string w = witness ? " at " + to_string(*witness) : std::string();
  switch (kind) {
    case Kind::Overlap:
      return "cells x_" + std::to_string(coordinate) + to_string(first) + " and x_" + std::to_string(coordinate) +
             to_string(second) + " overlap" + w;
    case Kind::CoverGap:
      return "cells x_" + std::to_string(coordinate) + "(C) do not cover X" + w;
    case Kind::BlockMismatch:
      return "block " + std::to_string(block) + " differs from the union of its x_" + std::to_string(coordinate) +
             " cells" + w;
  }
  return {};
}

CellPartitionReport verify_cell_partition(const ConfigurationSet& cs) {
  CellPartitionReport report;
  const Action& action = cs.action();
  const auto& configs = cs.configurations();
  const std::size_t m = cs.block_count();
  for (std::size_t j = 0; j <= cs.tuple_length(); ++j) {
    std::vector<PointSet> cells;
    cells.reserve(configs.size());
    for (const auto& c : configs) cells.push_back(cell(cs, c, j));

    PointSet covered = action.empty_set();
    std::vector<PointSet> by_block(m, action.empty_set());
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (!is_empty(intersection(covered, cells[k]))) {
        for (std::size_t l = 0; l < k; ++l) {
          if (auto w = least_member(intersection(cells[l], cells[k]))) {
            report.violations.push_back({CellViolation::Kind::Overlap, j, 0, configs[l], configs[k], w});
          }
        }
      }
      covered = set_union(covered, cells[k]);
      auto& slot = by_block[configs[k][j] - 1];
      slot = set_union(slot, cells[k]);
    }
    if (auto w = least_member(complement(covered))) {
      report.violations.push_back({CellViolation::Kind::CoverGap, j, 0, {}, {}, w});
    }
    for (std::size_t i = 0; i < m; ++i) {
      const PointSet sym = set_union(difference(by_block[i], cs.pair().partition[i]),
                                     difference(cs.pair().partition[i], by_block[i]));
      if (auto w = least_member(sym)) {
        report.violations.push_back(
            {CellViolation::Kind::BlockMismatch, j, static_cast<std::uint32_t>(i + 1), {}, {}, w});
      }
    }
  }
  return report;
}

}  // namespace tarski
