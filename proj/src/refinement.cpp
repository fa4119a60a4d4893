#include "tarski/refinement.hpp"

#include "tarski/error.hpp"

namespace tarski {

namespace {

std::vector<std::uint32_t> containing_blocks(const Partition& fine, const Partition& coarse) {
  std::vector<std::uint32_t> map(fine.size(), 0);
  for (std::size_t p = 0; p < fine.size(); ++p) {
    for (std::size_t l = 0; l < coarse.size(); ++l) {
      if (same_universe(fine[p], coarse[l]) && is_subset(fine[p], coarse[l])) {
        map[p] = static_cast<std::uint32_t>(l + 1);
        break;
      }
    }
    if (map[p] == 0) {
      throw InputError("fine block " + std::to_string(p + 1) + " lies in no coarse block; not a refinement");
    }
  }
  return map;
}

bool is_prefix(const std::vector<GroupElement>& prefix, const std::vector<GroupElement>& tuple) {
  if (prefix.size() > tuple.size()) return false;
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    if (prefix[j] != tuple[j]) return false;
  }
  return true;
}

}  // namespace

ConfigurationProjection::ConfigurationProjection(RefinementMode mode, const ConfigurationPair& fine,
                                                 const ConfigurationPair& coarse)
    : coarse_length_(coarse.tuple.size()) {
  if (mode == RefinementMode::Partition && fine.tuple != coarse.tuple) {
    throw InputError("partition refinement needs identical tuples");
  }
  if (mode != RefinementMode::Partition && !is_prefix(coarse.tuple, fine.tuple)) {
    throw InputError("the coarse tuple is not a prefix of the fine tuple");
  }
  if (mode == RefinementMode::String) {
    if (fine.partition.size() != coarse.partition.size()) throw InputError("string extension needs the same partition");
    for (std::size_t i = 0; i < fine.partition.size(); ++i) {
      if (fine.partition[i] != coarse.partition[i]) throw InputError("string extension needs the same partition");
    }
    for (std::size_t i = 0; i < fine.partition.size(); ++i) block_map_.push_back(static_cast<std::uint32_t>(i + 1));
  } else {
    block_map_ = containing_blocks(fine.partition, coarse.partition);
  }
}

Configuration ConfigurationProjection::operator()(const Configuration& c) const {
  if (c.size() < coarse_length_ + 1) throw InputError("configuration " + to_string(c) + " is too short");
  Configuration d(coarse_length_ + 1);
  for (std::size_t j = 0; j <= coarse_length_; ++j) {
    if (c[j] < 1 || c[j] > block_map_.size()) throw InputError("configuration " + to_string(c) + " has a bad block");
    d[j] = block_map_[c[j] - 1];
  }
  return d;
}

Configuration project_configuration(RefinementMode mode, const ConfigurationPair& fine,
                                    const ConfigurationPair& coarse, const Configuration& c) {
  return ConfigurationProjection(mode, fine, coarse)(c);
}

std::vector<Rational> coarsen_solution(RefinementMode mode, const ConfigurationSet& fine,
                                       const ConfigurationSet& coarse, std::span<const Rational> z) {
  const auto check = verify_solution(build_equations(fine), z);
  if (!check.ok()) throw InputError("not a normalized solution of the fine system: " + check.detail);
  const ConfigurationProjection project(mode, fine.pair(), coarse.pair());
  std::vector<Rational> out(coarse.size(), Rational(0));
  for (std::size_t v = 0; v < fine.size(); ++v) {
    const Configuration d = project(fine.configurations()[v]);
    const auto index = coarse.index_of(d);
    if (!index) {
      throw std::logic_error("projected configuration " + to_string(d) + " is not realized by the coarse pair");
    }
    out[*index] += z[v];
  }
  return out;
}

}  // namespace tarski
