#include "tarski/con_compare.hpp"

#include <set>

#include "tarski/error.hpp"

namespace tarski {

std::vector<std::vector<GroupElement>> generate_tuples(const Action& action, std::size_t max_length,
                                                       std::size_t max_word_length) {
  const int gens = action.generator_count();
  std::vector<FreeWord> words = gens > 0 ? all_words(gens, max_word_length) : std::vector<FreeWord>{FreeWord()};
  std::vector<std::vector<GroupElement>> out;
  std::vector<std::vector<GroupElement>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<GroupElement>> next;
    for (const auto& prefix : layer) {
      for (const auto& w : words) {
        auto t = prefix;
        t.emplace_back(w);
        next.push_back(std::move(t));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Partition> generate_partitions(const Action& action, std::size_t max_blocks, std::size_t limit) {
  std::vector<PointSet> atoms;
  if (action.is_finite()) {
    for (std::size_t p = 0; p < action.degree(); ++p) atoms.emplace_back(FiniteSet(action.degree(), {p}));
  } else {
    const int rank = action.universe_rank();
    atoms.emplace_back(SymbolicSet::singleton(rank, FreeWord()));
    for (int a = 0; a < 2 * rank; ++a) {
      const Letter l = Letter::from_alphabet_index(a);
      atoms.emplace_back(SymbolicSet::cone(rank, FreeWord::reduce(std::span<const Letter>(&l, 1))));
    }
  }
  std::vector<Partition> out;
  std::vector<std::size_t> rgs(atoms.size(), 0);
  auto emit = [&](std::size_t blocks) {
    if (out.size() >= limit) throw BoundExceeded("more than " + std::to_string(limit) + " candidate partitions");
    Partition part(blocks, action.empty_set());
    for (std::size_t a = 0; a < atoms.size(); ++a) part[rgs[a]] = set_union(part[rgs[a]], atoms[a]);
    out.push_back(std::move(part));
  };
  // Restricted growth strings: rgs[0] = 0, rgs[a] <= 1 + max(rgs[0..a)).
  auto rec = [&](auto&& self, std::size_t a, std::size_t used) -> void {
    if (a == atoms.size()) {
      emit(used);
      return;
    }
    for (std::size_t b = 0; b <= used && b < max_blocks; ++b) {
      rgs[a] = b;
      self(self, a + 1, b == used ? used + 1 : used);
    }
  };
  if (!atoms.empty() && max_blocks > 0) rec(rec, 0, 0);
  return out;
}

ConInclusionReport con_included(const Action& a, const Action& b, const ConBounds& bounds) {
  const auto tuples_a = generate_tuples(a, bounds.max_tuple_length, bounds.max_word_length);
  const auto tuples_b = generate_tuples(b, bounds.max_tuple_length, bounds.max_word_length);
  const auto parts_a = bounds.partitions_a ? *bounds.partitions_a : generate_partitions(a, bounds.max_blocks);
  const auto parts_b = bounds.partitions_b ? *bounds.partitions_b : generate_partitions(b, bounds.max_blocks);

  ConInclusionReport report;
  std::set<std::vector<Configuration>> realized_b;
  for (const auto& t : tuples_b) {
    for (const auto& p : parts_b) {
      realized_b.insert(compute_configurations(b, {t, p}).configurations());
      ++report.b_pairs_enumerated;
    }
  }
  for (const auto& t : tuples_a) {
    for (const auto& p : parts_a) {
      ConfigurationPair pair{t, p};
      auto configs = compute_configurations(a, pair).configurations();
      ++report.a_pairs_checked;
      if (!realized_b.contains(configs)) {
        report.included = false;
        report.counterexample = std::move(pair);
        report.counterexample_configurations = std::move(configs);
        return report;
      }
    }
  }
  report.included = true;
  return report;
}

CardinalityProbe cardinality_probe(const Action& action, std::size_t n) {
  if (n == 0) throw InputError("block count must be positive");
  CardinalityProbe probe;
  std::vector<Point> singles;
  if (action.is_finite()) {
    if (action.degree() < n) return probe;
    for (std::size_t p = 0; p + 1 < n; ++p) singles.emplace_back(p);
  } else {
    const auto words = all_words(action.universe_rank(), n);
    for (std::size_t k = 0; k + 1 < n; ++k) singles.emplace_back(words[k]);
  }
  Partition part;
  PointSet rest = action.full_set();
  for (const auto& p : singles) {
    PointSet s = action.is_finite()
                     ? PointSet(FiniteSet(action.degree(), {std::get<std::size_t>(p)}))
                     : PointSet(SymbolicSet::singleton(action.universe_rank(), std::get<FreeWord>(p)));
    rest = difference(rest, s);
    part.push_back(std::move(s));
  }
  part.push_back(std::move(rest));
  probe.admits = true;
  probe.witness = std::move(part);
  return probe;
}

}  // namespace tarski
