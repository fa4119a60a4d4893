#include "tarski/action.hpp"

#include <algorithm>

#include "tarski/error.hpp"

namespace tarski {

std::vector<Permutation> enumerate_group(const std::vector<Permutation>& generators, std::size_t degree,
                                         std::size_t max_order) {
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::map<Permutation, std::size_t> seen{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      auto h = multiply(g, elements[i]);
      if (seen.contains(h)) continue;
      if (elements.size() >= max_order) {
        throw BoundExceeded("group order exceeds bound " + std::to_string(max_order));
      }
      seen.emplace(h, elements.size());
      elements.push_back(std::move(h));
    }
  }
  return elements;
}

Action Action::finite(std::size_t degree, std::vector<Permutation> generators) {
  if (degree == 0) throw InputError("a finite action needs at least one point");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].degree() != degree) {
      throw InputError("generator has degree " + std::to_string(generators[i].degree()) + ", expected " +
                           std::to_string(degree),
                       "generators[" + std::to_string(i) + "]");
    }
  }
  if (generators.size() > static_cast<std::size_t>(kMaxRank)) {
    throw InputError("at most " + std::to_string(kMaxRank) + " generators are supported");
  }
  Action a;
  a.kind_ = Kind::FinitePermutation;
  a.degree_ = degree;
  a.group_rank_ = static_cast<int>(generators.size());
  a.point_generators_ = std::move(generators);
  return a;
}

Action Action::free_self(int rank) {
  if (rank < 1 || rank > kMaxRank) throw InputError("rank " + std::to_string(rank) + " outside 1..10");
  Action a;
  a.kind_ = Kind::FreeSelf;
  a.free_universe_ = true;
  a.rank_ = rank;
  a.group_rank_ = rank;
  return a;
}

Action Action::trivial_finite(std::size_t degree, int group_rank) {
  if (degree == 0) throw InputError("a finite action needs at least one point");
  Action a;
  a.kind_ = Kind::Trivial;
  a.degree_ = degree;
  a.group_rank_ = group_rank;
  a.point_generators_.assign(static_cast<std::size_t>(group_rank), Permutation::identity(degree));
  return a;
}

Action Action::trivial_free(int rank, int group_rank) {
  if (rank < 1 || rank > kMaxRank) throw InputError("rank " + std::to_string(rank) + " outside 1..10");
  Action a;
  a.kind_ = Kind::Trivial;
  a.free_universe_ = true;
  a.rank_ = rank;
  a.group_rank_ = group_rank;
  return a;
}

Action Action::finite_regular(std::vector<Permutation> generators, std::size_t max_order) {
  if (generators.empty()) throw InputError("a regular action needs at least one generator");
  if (generators.size() > static_cast<std::size_t>(kMaxRank)) {
    throw InputError("at most " + std::to_string(kMaxRank) + " generators are supported");
  }
  const std::size_t d = generators.front().degree();
  Action a;
  a.kind_ = Kind::FiniteRegular;
  a.elements_ = enumerate_group(generators, d, max_order);
  for (std::size_t i = 0; i < a.elements_.size(); ++i) a.element_lookup_.emplace(a.elements_[i], i);
  a.degree_ = a.elements_.size();
  a.group_rank_ = static_cast<int>(generators.size());
  for (const auto& g : generators) {
    std::vector<std::uint32_t> images(a.degree_);
    for (std::size_t p = 0; p < a.degree_; ++p) {
      images[p] = static_cast<std::uint32_t>(a.element_lookup_.at(multiply(g, a.elements_[p])));
    }
    a.point_generators_.emplace_back(std::move(images));
  }
  a.abstract_generators_ = std::move(generators);
  return a;
}

std::size_t Action::degree() const {
  if (free_universe_) throw InputError("the free-word universe is infinite");
  return degree_;
}

int Action::universe_rank() const {
  if (!free_universe_) throw InputError("action has a finite universe");
  return rank_;
}

int Action::generator_count() const { return group_rank_; }

std::optional<std::size_t> Action::element_index(const Permutation& g) const {
  auto it = element_lookup_.find(g);
  if (it == element_lookup_.end()) return std::nullopt;
  return it->second;
}

void Action::check_element(const GroupElement& g) const {
  if (const auto* w = std::get_if<FreeWord>(&g)) {
    if (kind_ == Kind::Trivial) return;
    if (w->max_generator() > group_rank_) {
      throw InputError("word " + w->to_string() + " uses a generator beyond the " + std::to_string(group_rank_) +
                       " available");
    }
    return;
  }
  const auto& p = std::get<Permutation>(g);
  switch (kind_) {
    case Kind::FreeSelf:
      throw InputError("a permutation cannot act on the free group");
    case Kind::Trivial:
      return;
    case Kind::FinitePermutation:
      if (p.degree() != degree_) {
        throw InputError("permutation " + p.to_string() + " has degree " + std::to_string(p.degree()) +
                         ", action has degree " + std::to_string(degree_));
      }
      return;
    case Kind::FiniteRegular:
      if (!element_index(p)) throw InputError("permutation " + p.to_string() + " is not in the group");
      return;
  }
}

Permutation Action::as_permutation(const GroupElement& g) const {
  if (free_universe_) throw InputError("the free-word universe has no permutation representation");
  check_element(g);
  if (kind_ == Kind::Trivial) return Permutation::identity(degree_);
  if (const auto* w = std::get_if<FreeWord>(&g)) return evaluate_word(point_generators_, *w, degree_);
  const auto& p = std::get<Permutation>(g);
  if (kind_ == Kind::FinitePermutation) return p;
  std::vector<std::uint32_t> images(degree_);
  for (std::size_t q = 0; q < degree_; ++q) {
    images[q] = static_cast<std::uint32_t>(element_lookup_.at(multiply(p, elements_[q])));
  }
  return Permutation(std::move(images));
}

Point Action::act(const GroupElement& g, const Point& x) const {
  check_element(g);
  if (free_universe_) {
    const auto* w = std::get_if<FreeWord>(&x);
    if (!w || w->max_generator() > rank_) throw InputError("point " + to_string(x) + " is not in X");
    if (kind_ == Kind::Trivial) return x;
    return multiply(std::get<FreeWord>(g), *w);
  }
  const auto* i = std::get_if<std::size_t>(&x);
  if (!i || *i >= degree_) throw InputError("point " + to_string(x) + " is not in X");
  if (kind_ == Kind::Trivial) return x;
  return static_cast<std::size_t>(as_permutation(g)(*i));
}

PointSet Action::act_on_set(const GroupElement& g, const PointSet& s) const {
  check_element(g);
  if (!same_universe(s, full_set())) throw InputError("set does not live in this action's X");
  if (kind_ == Kind::Trivial) return s;
  if (free_universe_) return translate(std::get<FreeWord>(g), std::get<SymbolicSet>(s));
  return image(as_permutation(g), std::get<FiniteSet>(s));
}

PointSet Action::preimage(const GroupElement& g, const PointSet& s) const { return act_on_set(invert(g), s); }

PointSet Action::full_set() const {
  if (free_universe_) return SymbolicSet::full(rank_);
  return FiniteSet::full(degree_);
}

PointSet Action::empty_set() const {
  if (free_universe_) return SymbolicSet::empty(rank_);
  return FiniteSet(degree_);
}

std::string Action::describe() const {
  switch (kind_) {
    case Kind::FinitePermutation:
      return "finite permutation action of degree " + std::to_string(degree_) + " with " +
             std::to_string(point_generators_.size()) + " generators";
    case Kind::FreeSelf:
      return "free group of rank " + std::to_string(rank_) + " acting on itself";
    case Kind::Trivial:
      return free_universe_ ? "trivial action on reduced words of rank " + std::to_string(rank_)
                            : "trivial action on " + std::to_string(degree_) + " points";
    case Kind::FiniteRegular:
      return "regular action of a group of order " + std::to_string(degree_);
  }
  return {};
}

std::string PartitionViolation::describe() const {
  const std::string w = witness ? " at " + to_string(*witness) : std::string();
  switch (kind) {
    case Kind::WrongUniverse:
      return "block " + std::to_string(block + 1) + " is not a subset representation of X";
    case Kind::EmptyBlock:
      return "block " + std::to_string(block + 1) + " is empty";
    case Kind::Overlap:
      return "blocks " + std::to_string(block + 1) + " and " + std::to_string(other_block + 1) + " overlap" + w;
    case Kind::CoverGap:
      return "blocks do not cover X" + w;
  }
  return {};
}

PartitionReport validate_partition(const Action& action, const Partition& blocks) {
  PartitionReport report;
  const PointSet full = action.full_set();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!same_universe(blocks[i], full)) {
      report.violations.push_back({PartitionViolation::Kind::WrongUniverse, i, 0, std::nullopt});
    }
  }
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (is_empty(blocks[i])) report.violations.push_back({PartitionViolation::Kind::EmptyBlock, i, 0, std::nullopt});
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (auto w = least_member(intersection(blocks[i], blocks[j]))) {
        report.violations.push_back({PartitionViolation::Kind::Overlap, i, j, w});
      }
    }
  }
  PointSet covered = action.empty_set();
  for (const auto& b : blocks) covered = set_union(covered, b);
  if (auto w = least_member(complement(covered))) {
    report.violations.push_back({PartitionViolation::Kind::CoverGap, 0, 0, w});
  }
  return report;
}

EquivariantMap EquivariantMap::make(const Action& source, const Action& target, std::vector<std::size_t> point_map,
                                    std::vector<Permutation> generator_images) {
  if (!source.is_finite() || !target.is_finite()) {
    throw InputError("equivariant maps are only supported between finite actions");
  }
  const std::size_t nx = source.degree();
  const std::size_t ny = target.degree();
  if (point_map.size() != nx) {
    throw InputError("point map has " + std::to_string(point_map.size()) + " entries, source has " +
                     std::to_string(nx) + " points");
  }
  if (generator_images.size() != source.generators().size()) {
    throw InputError("need one generator image per source generator");
  }
  for (const auto& img : generator_images) {
    if (img.degree() != ny) throw InputError("generator image " + img.to_string() + " does not act on Y");
  }
  std::vector<bool> hit(ny, false);
  for (std::size_t x = 0; x < nx; ++x) {
    if (point_map[x] >= ny) throw InputError("point map sends " + std::to_string(x) + " outside Y");
    hit[point_map[x]] = true;
  }
  for (std::size_t y = 0; y < ny; ++y) {
    if (!hit[y]) throw InputError("point map is not surjective: " + std::to_string(y) + " has no preimage");
  }
  for (std::size_t g = 0; g < generator_images.size(); ++g) {
    const auto& gx = source.generators()[g];
    for (std::size_t x = 0; x < nx; ++x) {
      if (point_map[gx(x)] != generator_images[g](point_map[x])) {
        throw InputError("map is not equivariant: f(g" + std::to_string(g + 1) + "·" + std::to_string(x) +
                         ") != φ(g" + std::to_string(g + 1) + ")·f(" + std::to_string(x) + ")");
      }
    }
  }
  EquivariantMap m;
  m.point_map_ = std::move(point_map);
  m.generator_images_ = std::move(generator_images);
  m.target_degree_ = ny;
  return m;
}

Permutation EquivariantMap::image(const FreeWord& w) const {
  return evaluate_word(generator_images_, w, target_degree_);
}

Partition pull_back_partition(const EquivariantMap& map, const Partition& partition) {
  Partition out;
  out.reserve(partition.size());
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const auto* block = std::get_if<FiniteSet>(&partition[i]);
    if (!block || block->degree() != map.target_degree()) {
      throw InputError("block is not a subset of the map's target", "blocks[" + std::to_string(i) + "]");
    }
    FiniteSet pre(map.source_degree());
    for (std::size_t x = 0; x < map.source_degree(); ++x) {
      if (block->contains(map(x))) pre.insert(x);
    }
    out.emplace_back(std::move(pre));
  }
  return out;
}

OrbitCosetResult orbit_coset_action(const Action& action, std::size_t x0, std::size_t max_order) {
  if (!action.is_finite()) throw InputError("orbit/coset construction needs a finite action");
  const std::size_t n = action.degree();
  if (x0 >= n) throw InputError("base point " + std::to_string(x0) + " outside X");
  std::vector<Permutation> gens = action.generators();
  if (gens.empty()) gens.push_back(Permutation::identity(n));

  // Orbit of x0, breadth first, with a transversal word for each orbit point.
  std::vector<std::size_t> orbit{x0};
  std::vector<std::size_t> position(n, SIZE_MAX);
  position[x0] = 0;
  std::vector<FreeWord> transversal{FreeWord()};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::size_t y = gens[g](orbit[i]);
      if (position[y] != SIZE_MAX) continue;
      position[y] = orbit.size();
      orbit.push_back(y);
      transversal.push_back(multiply(FreeWord::generator(static_cast<int>(g) + 1), transversal[i]));
    }
  }
  const std::size_t r = orbit.size();

  std::vector<Permutation> orbit_gens;
  for (const auto& g : gens) {
    std::vector<std::uint32_t> images(r);
    for (std::size_t i = 0; i < r; ++i) images[i] = static_cast<std::uint32_t>(position[g(orbit[i])]);
    orbit_gens.emplace_back(std::move(images));
  }

  Action regular = Action::finite_regular(gens, max_order);
  const auto& elements = regular.group_elements();

  // Left cosets g·Stab(x0), ordered by their first element in enumeration order.
  // g and h share a coset iff g(x0) = h(x0).
  std::vector<std::size_t> coset_of_point(n, SIZE_MAX);
  std::vector<std::vector<std::size_t>> cosets;
  std::vector<std::size_t> element_coset(elements.size());
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const std::size_t y = elements[e](x0);
    if (coset_of_point[y] == SIZE_MAX) {
      coset_of_point[y] = cosets.size();
      cosets.emplace_back();
    }
    cosets[coset_of_point[y]].push_back(e);
    element_coset[e] = coset_of_point[y];
  }
  const std::size_t stabilizer_order = cosets.front().size();

  std::vector<Permutation> coset_gens;
  for (const auto& lg : regular.generators()) {
    std::vector<std::uint32_t> images(cosets.size());
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      images[c] = static_cast<std::uint32_t>(element_coset[lg(cosets[c].front())]);
    }
    coset_gens.emplace_back(std::move(images));
  }

  OrbitCosetResult result{
      orbit,
      Action::finite(r, orbit_gens),
      Action::finite(cosets.size(), coset_gens),
      {},
      regular,
      {},
      elements.size(),
      stabilizer_order,
      cosets,
      r != n,
      r != n ? "action is not transitive; restricted to the orbit of " + std::to_string(x0) + " (" +
                   std::to_string(r) + " of " + std::to_string(n) + " points)"
             : std::string(),
  };

  std::vector<std::size_t> orbit_map(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Permutation gx = evaluate_word(gens, transversal[i], n);
    orbit_map[i] = element_coset[*regular.element_index(gx)];
  }
  result.orbit_to_coset = EquivariantMap::make(result.orbit_action, result.coset_action, orbit_map, coset_gens);
  result.regular_to_coset = EquivariantMap::make(result.regular_action, result.coset_action, element_coset,
                                                 coset_gens);
  return result;
}

}  // namespace tarski
