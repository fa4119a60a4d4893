#include "tarski/paradox.hpp"

#include <algorithm>
#include <set>

#include "tarski/error.hpp"

namespace tarski {

namespace {

PointSet singleton_set(const Action& action, const Point& p) {
  if (action.is_finite()) return FiniteSet(action.degree(), {std::get<std::size_t>(p)});
  return SymbolicSet::singleton(action.universe_rank(), std::get<FreeWord>(p));
}

PointSet union_all(const Action& action, const std::vector<PointSet>& sets) {
  PointSet acc = action.empty_set();
  for (const auto& s : sets) acc = set_union(acc, s);
  return acc;
}

void check_universe(const Action& action, const PointSet& s, const std::string& where) {
  if (!same_universe(s, action.full_set())) throw InputError("set does not live in this action's X", where);
}

std::string indexed(const char* name, std::size_t i) { return std::string(name) + std::to_string(i); }

}  // namespace

// --- decompositions ---------------------------------------------------------

DecompositionCheck verify_decomposition(const Action& action, const ParadoxicalDecomposition& dec, bool strict) {
  std::vector<const Piece*> pieces;
  for (const auto& p : dec.first) pieces.push_back(&p);
  for (const auto& p : dec.second) pieces.push_back(&p);

  DecompositionCheck r;
  const PointSet full = action.full_set();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!same_universe(pieces[i]->set, full)) {
      r.kind = DecompositionCheck::Kind::WrongUniverse;
      r.piece = i;
      r.detail = "piece " + std::to_string(i + 1) + " does not live in X";
      return r;
    }
    action.check_element(pieces[i]->translator);
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (auto w = least_member(intersection(pieces[i]->set, pieces[j]->set))) {
        r.kind = DecompositionCheck::Kind::Overlap;
        r.piece = i;
        r.other_piece = j;
        r.witness = w;
        r.detail = "disjointness: pieces " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                   " share " + to_string(*w);
        return r;
      }
    }
  }
  const std::vector<const std::vector<Piece>*> families{&dec.first, &dec.second};
  std::size_t offset = 0;
  for (int f = 0; f < 2; ++f) {
    const auto& family = *families[f];
    std::vector<PointSet> translates;
    for (const auto& p : family) translates.push_back(action.act_on_set(p.translator, p.set));
    if (strict) {
      for (std::size_t i = 0; i < translates.size(); ++i) {
        for (std::size_t j = i + 1; j < translates.size(); ++j) {
          if (auto w = least_member(intersection(translates[i], translates[j]))) {
            r.kind = DecompositionCheck::Kind::TranslateOverlap;
            r.family = f + 1;
            r.piece = offset + i;
            r.other_piece = offset + j;
            r.witness = w;
            r.detail = "strict cover " + std::to_string(f + 1) + ": translates overlap at " + to_string(*w);
            return r;
          }
        }
      }
    }
    if (auto w = least_member(complement(union_all(action, translates)))) {
      r.kind = DecompositionCheck::Kind::CoverGap;
      r.family = f + 1;
      r.witness = w;
      r.detail = "cover " + std::to_string(f + 1) + ": " + to_string(*w) + " is not covered";
      return r;
    }
    offset += family.size();
  }
  if (strict) {
    std::vector<PointSet> sets;
    for (const auto* p : pieces) sets.push_back(p->set);
    if (auto w = least_member(complement(union_all(action, sets)))) {
      r.kind = DecompositionCheck::Kind::PiecesDoNotExhaust;
      r.witness = w;
      r.detail = "strict: pieces miss " + to_string(*w);
      return r;
    }
  }
  return r;
}

// --- ping-pong chain --------------------------------------------------------

ChainDecomposition chain_to_decomposition(const Action& action, const PingPongChain& chain) {
  const std::size_t n = chain.sets.size();
  if (n < 2) throw InputError("a ping-pong chain needs n >= 2");
  if (chain.elements.size() != n) throw InputError("a chain needs one element per set");
  for (std::size_t i = 0; i < n; ++i) {
    check_universe(action, chain.sets[i], "sets[" + std::to_string(i) + "]");
    action.check_element(chain.elements[i]);
  }

  ChainDecomposition out;
  for (std::size_t i = 0; i < n; ++i) {
    const PointSet& next = chain.sets[(i + 1) % n];
    const PointSet moved = action.act_on_set(chain.elements[i], chain.sets[i]);
    if (auto w = least_member(difference(moved, next))) {
      throw HypothesisError(indexed("h", i + 1) + indexed("X", i + 1) + " ⊆ " + indexed("X", i + 2), w,
                            "h_" + std::to_string(i + 1) + "X_" + std::to_string(i + 1) + " is not contained in X_" +
                                std::to_string(i + 2) + ": " + to_string(*w));
    }
    out.differences.push_back(difference(next, moved));
  }
  if (auto w = least_member(complement(union_all(action, out.differences)))) {
    throw HypothesisError("X = ∪ D_i", w, "the sets D_i = X_{i+1} \\ h_i X_i miss " + to_string(*w));
  }

  // s_i = h_n h_{n-1} ... h_i, s_{n+1} = e.
  GroupElement identity = FreeWord();
  if (const auto* p = std::get_if<Permutation>(&chain.elements.front())) identity = Permutation::identity(p->degree());
  out.prefixes.assign(n + 1, identity);
  for (std::size_t i = n; i-- > 0;) out.prefixes[i] = multiply(out.prefixes[i + 1], chain.elements[i]);

  out.telescoping.push_back(action.act_on_set(out.prefixes[0], chain.sets[0]));
  for (std::size_t i = 0; i < n; ++i) out.telescoping.push_back(action.act_on_set(out.prefixes[i + 1], out.differences[i]));

  // X_1 = E_0 ⊔ E_1 ⊔ ... ⊔ E_n must hold exactly.
  PointSet acc = action.empty_set();
  for (const auto& e : out.telescoping) {
    if (!is_empty(intersection(acc, e))) throw std::logic_error("telescoping pieces overlap");
    acc = set_union(acc, e);
  }
  if (acc != chain.sets[0]) throw std::logic_error("telescoping pieces do not reassemble X_1");

  auto& dec = out.decomposition;
  dec.first.push_back({out.telescoping[0], invert(out.prefixes[0])});
  dec.first.push_back({complement(chain.sets[0]), identity});
  for (std::size_t i = 0; i < n; ++i) dec.second.push_back({out.telescoping[i + 1], invert(out.prefixes[i + 1])});
  out.piece_bound = n + 2;

  const auto check = verify_decomposition(action, dec);
  if (!check.ok()) throw std::logic_error("chain decomposition failed verification: " + check.detail);
  return out;
}

// --- ping-pong certificates -------------------------------------------------

PingPongCertificate check_pingpong_cyclic(const Action& action, const CyclicTableau& tableau) {
  const std::size_t k = tableau.elements.size();
  if (k < 2) throw InputError("a cyclic tableau needs k >= 2");
  if (tableau.a.size() != k || tableau.b.size() != k) throw InputError("tableau needs k sets A_i and k sets B_i");

  std::vector<PointSet> all;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    check_universe(action, tableau.a[i], "a[" + std::to_string(i) + "]");
    check_universe(action, tableau.b[i], "b[" + std::to_string(i) + "]");
    action.check_element(tableau.elements[i]);
    all.push_back(tableau.a[i]);
    names.push_back(indexed("A", i + 1));
    all.push_back(tableau.b[i]);
    names.push_back(indexed("B", i + 1));
  }

  PingPongCertificate cert;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (auto w = least_member(intersection(all[i], all[j]))) {
        cert.failure = "precondition: " + names[i] + " and " + names[j] + " are not disjoint";
        cert.index = i / 2;
        cert.witness = w;
        return cert;
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const PointSet lhs = complement(tableau.b[i]);
    const PointSet rhs = action.act_on_set(tableau.elements[i], tableau.a[i]);
    if (auto w = least_member(difference(lhs, rhs))) {
      cert.failure = names[2 * i + 1] + "^c ⊆ g" + std::to_string(i + 1) + names[2 * i] + " fails";
      cert.index = i;
      cert.witness = w;
      cert.verified.clear();
      return cert;
    }
    cert.verified.push_back(names[2 * i + 1] + "^c ⊆ g" + std::to_string(i + 1) + names[2 * i] + " with g" +
                            std::to_string(i + 1) + " = " + to_string(tableau.elements[i]));
  }
  cert.ok = true;
  std::string gens;
  for (std::size_t i = 0; i < k; ++i) gens += (i ? ", " : "") + to_string(tableau.elements[i]);
  cert.conclusion = "<" + gens + "> is a free subgroup of rank " + std::to_string(k);
  return cert;
}

namespace {

// Order of g as it acts: the permutation order on finite universes, and for
// words in a free-word universe, infinite (certified by a witness) unless g = e.
std::optional<std::uint64_t> certified_order(const Action& action, const GroupElement& g) {
  if (action.is_finite()) return action.as_permutation(g).order();
  const auto* w = std::get_if<FreeWord>(&g);
  if (!w) throw InputError("free-word universes act through words only");
  if (w->is_identity()) return 1;
  const Action self = Action::free_self(std::max({1, w->max_generator(), action.universe_rank()}));
  const auto outcome = make_infinite_order_witness(self, g);
  if (!outcome.witness || !verify_infinite_order(self, *outcome.witness).ok) {
    throw std::logic_error("could not certify infinite order of " + w->to_string());
  }
  return std::nullopt;
}

}  // namespace

SubgroupPingPongReport check_pingpong_subgroups(const Action& action, const std::vector<SubgroupSpec>& groups,
                                                const std::vector<PointSet>& sets) {
  const std::size_t k = groups.size();
  if (k < 2) throw InputError("ping-pong needs at least two subgroups");
  if (sets.size() != k) throw InputError("need one set X_i per subgroup");
  for (std::size_t i = 0; i < k; ++i) {
    check_universe(action, sets[i], "sets[" + std::to_string(i) + "]");
    if (groups[i].elements.empty()) throw InputError("subgroup " + std::to_string(i + 1) + " has no elements");
    for (const auto& g : groups[i].elements) action.check_element(g);
  }

  SubgroupPingPongReport report;
  long bound = 0;
  for (const auto& g : groups) bound = std::max(bound, g.exponent_bound);
  report.exponent_bound = bound;

  for (std::size_t i = 0; i < k; ++i) {
    if (is_empty(sets[i])) {
      report.status = SubgroupPingPongReport::Status::EmptySet;
      report.detail = "X_" + std::to_string(i + 1) + " is empty";
      return report;
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (auto w = least_member(intersection(sets[i], sets[j]))) {
        report.status = SubgroupPingPongReport::Status::OverlappingSets;
        report.detail = "X_" + std::to_string(i + 1) + " and X_" + std::to_string(j + 1) + " overlap";
        report.witness = w;
        return report;
      }
    }
  }

  // Nonidentity elements of each H_i, as permutations of X (finite) or words.
  std::vector<std::vector<Permutation>> finite_elements(k);
  std::vector<std::vector<FreeWord>> word_elements(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& spec = groups[i];
    if (action.is_finite()) {
      std::vector<Permutation> gens;
      if (spec.kind == SubgroupSpec::Kind::Cyclic) {
        gens.push_back(action.as_permutation(spec.elements.front()));
      } else {
        for (const auto& g : spec.elements) gens.push_back(action.as_permutation(g));
      }
      auto all = enumerate_group(gens, action.degree());
      report.orders.emplace_back(all.size());
      for (auto& p : all) {
        if (!p.is_identity()) finite_elements[i].push_back(std::move(p));
      }
      continue;
    }
    if (spec.kind == SubgroupSpec::Kind::Cyclic) {
      const auto order = certified_order(action, spec.elements.front());
      report.orders.push_back(order);
      if (order) continue;  // order 1: no nonidentity elements
      const auto& g = std::get<FreeWord>(spec.elements.front());
      for (long e = 1; e <= spec.exponent_bound; ++e) {
        word_elements[i].push_back(power(g, e));
        word_elements[i].push_back(power(g, -e));
      }
    } else {
      std::optional<std::uint64_t> order = 1;
      for (const auto& g : spec.elements) {
        const auto& w = std::get<FreeWord>(g);
        if (w.is_identity()) continue;
        order = certified_order(action, g);
        word_elements[i].push_back(w);
      }
      report.orders.push_back(order);
    }
  }
  report.exhaustive = std::all_of(report.orders.begin(), report.orders.end(), [](auto o) { return o.has_value(); });

  auto at_least = [](const std::optional<std::uint64_t>& order, std::uint64_t n) { return !order || *order >= n; };
  if (k == 2) {
    if (!at_least(report.orders[0], 3) || !at_least(report.orders[1], 2)) {
      report.status = SubgroupPingPongReport::Status::SizeCondition;
      report.detail = "size condition |H_1| >= 3 and |H_2| >= 2 not met";
      return report;
    }
  } else if (std::none_of(report.orders.begin(), report.orders.end(), [&](auto o) { return at_least(o, 3); })) {
    report.status = SubgroupPingPongReport::Status::SizeCondition;
    report.detail = "size condition |H_i| > 2 for some i not met";
    return report;
  }

  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t count = action.is_finite() ? finite_elements[i].size() : word_elements[i].size();
    for (std::size_t e = 0; e < count; ++e) {
      for (std::size_t s = 0; s < k; ++s) {
        if (s == i) continue;
        PointSet moved = action.is_finite()
                             ? PointSet(image(finite_elements[i][e], std::get<FiniteSet>(sets[s])))
                             : action.act_on_set(word_elements[i][e], sets[s]);
        ++report.inclusions_checked;
        if (auto w = least_member(difference(moved, sets[i]))) {
          const std::string name = action.is_finite() ? finite_elements[i][e].to_string()
                                                      : word_elements[i][e].to_string();
          report.status = SubgroupPingPongReport::Status::InclusionFailed;
          report.detail = name + "·X_" + std::to_string(s + 1) + " ⊄ X_" + std::to_string(i + 1);
          report.witness = w;
          return report;
        }
      }
    }
  }
  report.detail = report.exhaustive ? "verified exhaustively"
                                    : "verified for exponents up to " + std::to_string(bound);
  return report;
}

// --- witnesses --------------------------------------------------------------

namespace {

Point identity_point(const Action& action) {
  switch (action.kind()) {
    case Action::Kind::FreeSelf:
      return FreeWord();
    case Action::Kind::FiniteRegular:
      return *action.element_index(Permutation::identity(action.group_elements().front().degree()));
    default:
      throw InputError("witness sets live in a group acting on itself (free self-action or regular action)");
  }
}

}  // namespace

NonabelianWitness make_nonabelian_witness(const Action& action, const GroupElement& g1, const GroupElement& g2) {
  const Point e = identity_point(action);
  const Point p1 = action.act(g1, e);
  const Point p2 = action.act(g2, e);
  const Point p12 = action.act(g1, p2);
  const Point p21 = action.act(g2, p1);
  if (p12 == p21) {
    throw HypothesisError("g1 g2 != g2 g1", std::nullopt,
                          "elements commute: " + to_string(g1) + " and " + to_string(g2));
  }
  NonabelianWitness w{{}, g1, g2};
  // E_4 = {g2 g1}, E_5 = {g1 g2}: the order the relations force.
  for (const auto& p : {e, p1, p2, p21, p12}) w.sets.push_back(singleton_set(action, p));
  return w;
}

WitnessCheck verify_nonabelian(const Action& action, const NonabelianWitness& w) {
  if (w.sets.size() != 5) return {false, "expected five sets"};
  for (std::size_t i = 0; i < 5; ++i) {
    check_universe(action, w.sets[i], "sets[" + std::to_string(i) + "]");
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (!is_empty(intersection(w.sets[i], w.sets[j]))) {
        return {false, "E_" + std::to_string(i + 1) + " and E_" + std::to_string(j + 1) + " are not disjoint"};
      }
    }
  }
  // With E_1 empty every identity holds vacuously and nothing follows.
  if (is_empty(w.sets[0])) return {false, "E_1 is empty"};
  const auto& e = w.sets;
  if (action.act_on_set(w.g1, e[0]) != e[1]) return {false, "g1 E_1 != E_2"};
  if (action.preimage(w.g2, e[3]) != e[1]) return {false, "E_2 != g2^-1 E_4"};
  if (action.preimage(w.g1, e[4]) != e[2]) return {false, "E_3 != g1^-1 E_5"};
  if (action.act_on_set(w.g2, e[0]) != e[2]) return {false, "E_3 != g2 E_1"};
  return {true, "g1 g2 E_1 = E_5 and g2 g1 E_1 = E_4 are disjoint, so g1 g2 != g2 g1: the group is non-abelian"};
}

InfiniteOrderOutcome make_infinite_order_witness(const Action& action, const GroupElement& a) {
  action.check_element(a);
  InfiniteOrderOutcome out;
  if (action.is_finite()) {
    out.finite_order = action.as_permutation(a).order();
    out.reason = "element has finite order " + std::to_string(*out.finite_order);
    return out;
  }
  if (action.kind() != Action::Kind::FreeSelf) {
    out.reason = "the element acts trivially on X, so no witness sets exist in X";
    return out;
  }
  const auto& w = std::get<FreeWord>(a);
  if (w.is_identity()) {
    out.finite_order = 1;
    out.reason = "element has finite order 1";
    return out;
  }
  const int rank = action.universe_rank();
  out.witness = InfiniteOrderWitness{
      set_union(SymbolicSet::positive_powers(rank, w), SymbolicSet::singleton(rank, FreeWord())),
      SymbolicSet::positive_powers(rank, invert(w)), a};
  return out;
}

WitnessCheck verify_infinite_order(const Action& action, const InfiniteOrderWitness& w) {
  check_universe(action, w.e1, "e1");
  check_universe(action, w.e2, "e2");
  if (!is_empty(intersection(w.e1, w.e2))) return {false, "E_1 and E_2 are not disjoint"};
  if (auto p = least_member(difference(action.act_on_set(w.a, w.e1), w.e1))) {
    return {false, "a E_1 ⊄ E_1 (witness " + to_string(*p) + ")"};
  }
  if (is_empty(intersection(action.act_on_set(w.a, w.e2), w.e1))) return {false, "a E_2 ∩ E_1 is empty"};
  return {true, "a^n y ∈ E_1 for y ∈ E_2 and all n >= 1, so a^n != e: " + to_string(w.a) + " has infinite order"};
}

// --- patterns ---------------------------------------------------------------

PatternCheck pattern_check(const ConfigurationSet& cs, const ParadoxPattern& p) {
  PatternCheck r;
  std::set<std::uint32_t> used;
  const std::vector<const std::vector<PatternHit>*> families{&p.first, &p.second};
  for (int f = 0; f < 2; ++f) {
    if (families[f]->empty()) {
      r.kind = PatternCheck::Kind::Uncovered;
      r.family = f + 1;
      r.detail = "family " + std::to_string(f + 1) + " is empty";
      return r;
    }
    for (const auto& hit : *families[f]) {
      if (hit.coordinate > cs.tuple_length() || hit.block < 1 || hit.block > cs.block_count()) {
        r.kind = PatternCheck::Kind::OutOfRange;
        r.family = f + 1;
        r.detail = "hit (" + std::to_string(hit.coordinate) + "," + std::to_string(hit.block) + ") out of range";
        return r;
      }
      if (!used.insert(hit.block).second) {
        r.kind = PatternCheck::Kind::SharedBlock;
        r.family = f + 1;
        r.detail = "block " + std::to_string(hit.block) + " would be used by two pieces";
        return r;
      }
    }
  }
  for (int f = 0; f < 2; ++f) {
    for (const auto& c : cs.configurations()) {
      const bool hit = std::any_of(families[f]->begin(), families[f]->end(),
                                   [&](const PatternHit& h) { return c[h.coordinate] == h.block; });
      if (!hit) {
        r.kind = PatternCheck::Kind::Uncovered;
        r.family = f + 1;
        r.counterexample = c;
        r.detail = "configuration " + to_string(c) + " avoids family " + std::to_string(f + 1);
        return r;
      }
    }
  }
  return r;
}

ParadoxicalDecomposition pattern_decomposition(const ConfigurationSet& cs, const ParadoxPattern& p) {
  ParadoxicalDecomposition dec;
  auto piece = [&](const PatternHit& h) {
    if (h.coordinate > cs.tuple_length() || h.block < 1 || h.block > cs.block_count()) {
      throw InputError("pattern hit out of range");
    }
    GroupElement t = h.coordinate == 0 ? GroupElement(FreeWord()) : invert(cs.pair().tuple[h.coordinate - 1]);
    if (h.coordinate == 0) {
      if (const auto* perm = std::get_if<Permutation>(&cs.pair().tuple.front())) {
        t = Permutation::identity(perm->degree());
      }
    }
    return Piece{cs.pair().partition[h.block - 1], t};
  };
  for (const auto& h : p.first) dec.first.push_back(piece(h));
  for (const auto& h : p.second) dec.second.push_back(piece(h));
  return dec;
}

// --- bounded search ---------------------------------------------------------

SearchResult bounded_paradox_search(const Action& action, const SearchBounds& bounds) {
  if (bounds.max_pieces < 1 || bounds.depth < 1 || bounds.translator_length < 1) {
    throw InputError("search bounds must be >= 1");
  }
  SearchResult result;
  result.bounds = bounds;
  if (action.is_finite()) {
    result.obstruction =
        "X is finite: disjoint pieces with X = ∪ g_i A_i = ∪ h_j B_j would give |X| >= Σ|A_i| + Σ|B_j| >= 2|X|";
    return result;
  }
  if (action.kind() == Action::Kind::Trivial) {
    result.obstruction = "the action is trivial: g A = A, so each family of disjoint pieces would have to exhaust X";
    return result;
  }

  const int rank = action.universe_rank();
  std::vector<PointSet> atoms;
  for (const auto& w : all_words(rank, bounds.depth)) {
    if (w.length() < bounds.depth) atoms.emplace_back(SymbolicSet::singleton(rank, w));
  }
  for (const auto& w : all_words(rank, bounds.depth)) {
    if (w.length() == bounds.depth) atoms.emplace_back(SymbolicSet::cone(rank, w));
  }
  const auto translators = all_words(rank, bounds.translator_length);
  // moved[a][t] = translators[t] · atoms[a]
  std::vector<std::vector<PointSet>> moved(atoms.size());
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (const auto& t : translators) moved[a].push_back(action.act_on_set(t, atoms[a]));
  }
  const PointSet full = action.full_set();

  auto bump = [&] {
    if (++result.candidates_examined > bounds.max_candidates) {
      throw BoundExceeded("paradox search examined more than " + std::to_string(bounds.max_candidates) +
                          " candidates");
    }
  };

  std::vector<bool> used(atoms.size(), false);
  std::vector<Piece> chosen_first;
  std::vector<Piece> chosen_second;

  // Chooses `remaining` more pieces for the current family with atom indices
  // above `from`; `acc` is the union of their translates so far.
  auto choose = [&](auto&& self, std::vector<Piece>& family, std::size_t remaining, std::size_t from,
                    const PointSet& acc, auto&& on_cover) -> bool {
    if (remaining == 0) {
      bump();
      return acc == full && on_cover();
    }
    for (std::size_t a = from; a < atoms.size(); ++a) {
      if (used[a]) continue;
      used[a] = true;
      for (std::size_t t = 0; t < translators.size(); ++t) {
        family.push_back({atoms[a], translators[t]});
        if (self(self, family, remaining - 1, a + 1, set_union(acc, moved[a][t]), on_cover)) return true;
        family.pop_back();
      }
      used[a] = false;
    }
    return false;
  };

  for (std::size_t total = 2; total <= bounds.max_pieces; ++total) {
    for (std::size_t n1 = 1; n1 < total; ++n1) {
      const std::size_t n2 = total - n1;
      auto second_done = [] { return true; };
      auto first_done = [&] {
        return choose(choose, chosen_second, n2, 0, action.empty_set(), second_done);
      };
      if (choose(choose, chosen_first, n1, 0, action.empty_set(), first_done)) {
        ParadoxicalDecomposition dec{chosen_first, chosen_second};
        if (!verify_decomposition(action, dec).ok()) throw std::logic_error("search produced an invalid decomposition");
        result.found = std::move(dec);
        return result;
      }
    }
  }
  return result;
}

}  // namespace tarski
