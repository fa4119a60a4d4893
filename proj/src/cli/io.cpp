#include "tarski/io.hpp"

#include <algorithm>

#include "tarski/error.hpp"

namespace tarski::io {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string where(const std::string& path) { return path.empty() ? "/" : path; }

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError("expected an array", where(path));
  return j;
}

std::string string_at(const Json& j, const std::string& path) {
  if (!j.is_string()) throw InputError("expected a string", where(path));
  return j.get<std::string>();
}

int int_at(const Json& j, const std::string& path) {
  const std::size_t n = parse_count(j, path);
  if (n > 1000000) throw InputError("value too large", where(path));
  return static_cast<int>(n);
}

std::size_t point_at(const Json& j, const std::string& path, const Action& action) {
  const std::size_t p = parse_count(j, path);
  if (p >= action.degree()) {
    throw InputError("point " + std::to_string(p) + " outside X = {0.." + std::to_string(action.degree() - 1) + "}",
                     where(path));
  }
  return p;
}

PointSet finite_points(const Json& j, const std::string& path, const Action& action) {
  if (!action.is_finite()) throw InputError("point lists need a finite universe", where(path));
  FiniteSet s(action.degree());
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) s.insert(point_at(j[i], child(path, i), action));
  return s;
}

int free_rank(const Action& action, const std::string& path) {
  if (action.is_finite()) throw InputError("word sets need a free-word universe", where(path));
  return action.universe_rank();
}

// Rethrows a word error with the JSON location in front of the offset.
template <typename F>
auto at_location(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    if (e.location().empty()) throw InputError(e.what(), where(path));
    if (e.location().front() == '/') throw;
    const std::string message = std::string(e.what()).substr(e.location().size() + 2);
    throw InputError(message, where(path) + " " + e.location());
  }
}

Json pieces_to_json(const std::vector<Piece>& pieces) {
  Json out = Json::array();
  for (const auto& p : pieces) out.push_back({{"set", to_json(p.set)}, {"translator", to_json(p.translator)}});
  return out;
}

std::vector<Piece> parse_pieces(const Json& j, const std::string& path, const Action& action) {
  std::vector<Piece> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
    const std::string p = child(path, i);
    out.push_back({parse_set(field(j[i], "set", p), child(p, "set"), action),
                   parse_element(field(j[i], "translator", p), child(p, "translator"), action)});
  }
  return out;
}

Json hits_to_json(const std::vector<PatternHit>& hits) {
  Json out = Json::array();
  for (const auto& h : hits) out.push_back({h.coordinate, h.block});
  return out;
}

std::vector<PatternHit> parse_hits(const Json& j, const std::string& path) {
  std::vector<PatternHit> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
    const std::string p = child(path, i);
    if (!j[i].is_array() || j[i].size() != 2) throw InputError("a hit is a [coordinate, block] pair", p);
    out.push_back({parse_count(j[i][0], child(p, 0)), static_cast<std::uint32_t>(int_at(j[i][1], child(p, 1)))});
  }
  return out;
}

}  // namespace

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError("expected an object", where(path));
  auto it = j.find(key);
  if (it == j.end()) throw InputError("missing field \"" + key + "\"", where(path));
  return *it;
}

std::size_t parse_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InputError("expected a nonnegative integer", where(path));
  }
  return j.get<std::size_t>();
}

// --- serialization ----------------------------------------------------------

Json to_json(const FreeWord& w) { return w.to_string(); }
Json to_json(const Permutation& p) { return p.images(); }
Json to_json(const GroupElement& g) {
  return std::visit([](const auto& x) { return to_json(x); }, g);
}
Json to_json(const Point& p) {
  if (const auto* i = std::get_if<std::size_t>(&p)) return *i;
  return to_json(std::get<FreeWord>(p));
}

Json to_json(const PointSet& s) {
  if (const auto* f = std::get_if<FiniteSet>(&s)) return {{"kind", "points"}, {"points", f->points()}};
  const auto& sym = std::get<SymbolicSet>(s);
  const auto dfa = sym.automaton();
  Json transitions = Json::array();
  for (std::size_t q = 0; q < dfa.accepting.size(); ++q) {
    transitions.push_back(std::vector<std::uint32_t>(dfa.next.begin() + q * dfa.alphabet,
                                                     dfa.next.begin() + (q + 1) * dfa.alphabet));
  }
  std::vector<std::uint32_t> accepting;
  for (std::size_t q = 0; q < dfa.accepting.size(); ++q) {
    if (dfa.accepting[q]) accepting.push_back(static_cast<std::uint32_t>(q));
  }
  Json sample = Json::array();
  for (const auto& w : sym.enumerate_up_to(2)) sample.push_back(w.to_string());
  return {{"kind", "automaton"},  {"rank", sym.rank()},         {"start", dfa.start},
          {"accepting", accepting}, {"transitions", transitions}, {"sample_up_to_length_2", sample}};
}

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}
Json to_json(const Configuration& c) { return c; }

Json to_json(const Action& a) {
  switch (a.kind()) {
    case Action::Kind::FinitePermutation: {
      Json gens = Json::array();
      for (const auto& g : a.generators()) gens.push_back(to_json(g));
      return {{"backend", "finite"}, {"degree", a.degree()}, {"generators", gens}};
    }
    case Action::Kind::FreeSelf:
      return {{"backend", "free-self"}, {"rank", a.universe_rank()}};
    case Action::Kind::FiniteRegular: {
      Json gens = Json::array();
      for (const auto& g : a.abstract_generators()) gens.push_back(to_json(g));
      return {{"backend", "finite-regular"}, {"generators", gens}};
    }
    case Action::Kind::Trivial:
      if (a.is_finite()) return {{"backend", "trivial"}, {"degree", a.degree()}, {"group_rank", a.generator_count()}};
      return {{"backend", "trivial"}, {"rank", a.universe_rank()}, {"group_rank", a.generator_count()}};
  }
  return {};
}

Json to_json(const ConfigurationPair& pair) {
  Json tuple = Json::array();
  for (const auto& g : pair.tuple) tuple.push_back(to_json(g));
  Json partition = Json::array();
  for (const auto& b : pair.partition) partition.push_back(to_json(b));
  return {{"tuple", tuple}, {"partition", partition}};
}

Json to_json(const ParadoxicalDecomposition& dec) {
  return {{"first", pieces_to_json(dec.first)}, {"second", pieces_to_json(dec.second)}};
}

Json to_json(const PingPongChain& chain) {
  Json sets = Json::array(), elements = Json::array();
  for (const auto& s : chain.sets) sets.push_back(to_json(s));
  for (const auto& g : chain.elements) elements.push_back(to_json(g));
  return {{"sets", sets}, {"elements", elements}};
}

Json to_json(const CyclicTableau& tableau) {
  Json a = Json::array(), b = Json::array(), elements = Json::array();
  for (const auto& s : tableau.a) a.push_back(to_json(s));
  for (const auto& s : tableau.b) b.push_back(to_json(s));
  for (const auto& g : tableau.elements) elements.push_back(to_json(g));
  return {{"a", a}, {"b", b}, {"elements", elements}};
}

Json to_json(const NonabelianWitness& w) {
  Json sets = Json::array();
  for (const auto& s : w.sets) sets.push_back(to_json(s));
  return {{"sets", sets}, {"g1", to_json(w.g1)}, {"g2", to_json(w.g2)}};
}

Json to_json(const InfiniteOrderWitness& w) {
  return {{"e1", to_json(w.e1)}, {"e2", to_json(w.e2)}, {"a", to_json(w.a)}};
}

Json to_json(const ParadoxPattern& p) { return {{"first", hits_to_json(p.first)}, {"second", hits_to_json(p.second)}}; }

// --- parsing ----------------------------------------------------------------

FreeWord parse_word(const Json& j, const std::string& path) {
  const std::string text = string_at(j, path);
  return at_location(path, [&] { return FreeWord::parse(text); });
}

Permutation parse_permutation(const Json& j, const std::string& path) {
  std::vector<std::uint32_t> images;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
    images.push_back(static_cast<std::uint32_t>(int_at(j[i], child(path, i))));
  }
  return at_location(path, [&] { return Permutation(std::move(images)); });
}

GroupElement parse_element(const Json& j, const std::string& path, const Action& action) {
  GroupElement g = j.is_array() ? GroupElement(parse_permutation(j, path)) : GroupElement(parse_word(j, path));
  at_location(path, [&] {
    action.check_element(g);
    return 0;
  });
  return g;
}

std::vector<GroupElement> parse_elements(const Json& j, const std::string& path, const Action& action) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(parse_element(j[i], child(path, i), action));
  return out;
}

Action parse_action(const Json& j, const std::string& path) {
  const std::string backend = string_at(field(j, "backend", path), child(path, "backend"));
  auto generators = [&] {
    std::vector<Permutation> out;
    const std::string p = child(path, "generators");
    const Json& gens = field(j, "generators", path);
    for (std::size_t i = 0; i < array_at(gens, p).size(); ++i) out.push_back(parse_permutation(gens[i], child(p, i)));
    return out;
  };
  auto rank = [&](const char* key) { return int_at(field(j, key, path), child(path, key)); };
  return at_location(path, [&] {
    if (backend == "free-self") return Action::free_self(rank("rank"));
    if (backend == "finite") return Action::finite(parse_count(field(j, "degree", path), child(path, "degree")), generators());
    if (backend == "finite-regular") return Action::finite_regular(generators());
    if (backend == "trivial") {
      const int group_rank = j.contains("group_rank") ? rank("group_rank") : 1;
      if (j.contains("degree")) {
        return Action::trivial_finite(parse_count(j["degree"], child(path, "degree")), group_rank);
      }
      return Action::trivial_free(rank("rank"), group_rank);
    }
    throw InputError("unknown backend \"" + backend + "\" (expected free-self, finite, finite-regular or trivial)",
                     child(path, "backend"));
  });
}

PointSet parse_set(const Json& j, const std::string& path, const Action& action) {
  if (j.is_array()) return finite_points(j, path, action);
  const std::string kind = string_at(field(j, "kind", path), child(path, "kind"));
  auto word = [&] { return parse_word(field(j, "word", path), child(path, "word")); };
  auto operands = [&] { return parse_sets(field(j, "operands", path), child(path, "operands"), action); };
  auto fold = [&](auto op) {
    auto sets = operands();
    if (sets.empty()) throw InputError("needs at least one operand", child(path, "operands"));
    PointSet acc = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) acc = op(acc, sets[i]);
    return acc;
  };
  return at_location(path, [&]() -> PointSet {
    if (kind == "points") return finite_points(field(j, "points", path), child(path, "points"), action);
    if (kind == "full") return action.full_set();
    if (kind == "empty") return action.empty_set();
    if (kind == "cone") return SymbolicSet::cone(free_rank(action, path), word());
    if (kind == "singleton") {
      if (action.is_finite()) return FiniteSet(action.degree(), {point_at(field(j, "point", path), child(path, "point"), action)});
      return SymbolicSet::singleton(free_rank(action, path), word());
    }
    if (kind == "powers") return SymbolicSet::positive_powers(free_rank(action, path), word());
    if (kind == "union") return fold([](const PointSet& a, const PointSet& b) { return set_union(a, b); });
    if (kind == "intersection") return fold([](const PointSet& a, const PointSet& b) { return intersection(a, b); });
    if (kind == "complement") return complement(parse_set(field(j, "operand", path), child(path, "operand"), action));
    if (kind == "difference") {
      auto sets = operands();
      if (sets.size() != 2) throw InputError("difference takes two operands", child(path, "operands"));
      return difference(sets[0], sets[1]);
    }
    if (kind == "automaton") {
      const int rank = free_rank(action, path);
      SymbolicSet::Automaton dfa;
      dfa.alphabet = 2 * rank;
      const Json& rows = field(j, "transitions", path);
      const std::string rp = child(path, "transitions");
      const std::size_t states = array_at(rows, rp).size();
      if (states == 0) throw InputError("an automaton needs at least one state", rp);
      dfa.accepting.assign(states, 0);
      for (std::size_t q = 0; q < states; ++q) {
        const std::string qp = child(rp, q);
        if (array_at(rows[q], qp).size() != static_cast<std::size_t>(dfa.alphabet)) {
          throw InputError("each state needs " + std::to_string(dfa.alphabet) + " transitions", qp);
        }
        for (std::size_t l = 0; l < rows[q].size(); ++l) {
          const std::size_t t = parse_count(rows[q][l], child(qp, l));
          if (t >= states) throw InputError("transition target out of range", child(qp, l));
          dfa.next.push_back(static_cast<std::uint32_t>(t));
        }
      }
      const std::size_t start = parse_count(field(j, "start", path), child(path, "start"));
      if (start >= states) throw InputError("start state out of range", child(path, "start"));
      dfa.start = static_cast<std::uint32_t>(start);
      const Json& acc = field(j, "accepting", path);
      for (std::size_t i = 0; i < array_at(acc, child(path, "accepting")).size(); ++i) {
        const std::size_t q = parse_count(acc[i], child(child(path, "accepting"), i));
        if (q >= states) throw InputError("accepting state out of range", child(child(path, "accepting"), i));
        dfa.accepting[q] = 1;
      }
      return SymbolicSet::from_automaton(rank, dfa);
    }
    throw InputError("unknown set kind \"" + kind + "\"", child(path, "kind"));
  });
}

std::vector<PointSet> parse_sets(const Json& j, const std::string& path, const Action& action) {
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(parse_set(j[i], child(path, i), action));
  return out;
}

ConfigurationPair parse_pair(const Json& j, const std::string& path, const Action& action) {
  return {parse_elements(field(j, "tuple", path), child(path, "tuple"), action),
          parse_sets(field(j, "partition", path), child(path, "partition"), action)};
}

Configuration parse_configuration(const Json& j, const std::string& path) {
  Configuration c;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) {
    c.push_back(static_cast<std::uint32_t>(int_at(j[i], child(path, i))));
  }
  return c;
}

Rational parse_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  const std::string text = string_at(j, path);
  return at_location(path, [&] { return tarski::parse_rational(text); });
}

std::vector<Rational> parse_rationals(const Json& j, const std::string& path) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < array_at(j, path).size(); ++i) out.push_back(parse_rational(j[i], child(path, i)));
  return out;
}

ParadoxicalDecomposition parse_decomposition(const Json& j, const std::string& path, const Action& action) {
  return {parse_pieces(field(j, "first", path), child(path, "first"), action),
          parse_pieces(field(j, "second", path), child(path, "second"), action)};
}

PingPongChain parse_chain(const Json& j, const std::string& path, const Action& action) {
  return {parse_sets(field(j, "sets", path), child(path, "sets"), action),
          parse_elements(field(j, "elements", path), child(path, "elements"), action)};
}

CyclicTableau parse_tableau(const Json& j, const std::string& path, const Action& action) {
  return {parse_sets(field(j, "a", path), child(path, "a"), action),
          parse_sets(field(j, "b", path), child(path, "b"), action),
          parse_elements(field(j, "elements", path), child(path, "elements"), action)};
}

NonabelianWitness parse_nonabelian(const Json& j, const std::string& path, const Action& action) {
  return {parse_sets(field(j, "sets", path), child(path, "sets"), action),
          parse_element(field(j, "g1", path), child(path, "g1"), action),
          parse_element(field(j, "g2", path), child(path, "g2"), action)};
}

InfiniteOrderWitness parse_infinite_order(const Json& j, const std::string& path, const Action& action) {
  return {parse_set(field(j, "e1", path), child(path, "e1"), action),
          parse_set(field(j, "e2", path), child(path, "e2"), action),
          parse_element(field(j, "a", path), child(path, "a"), action)};
}

ParadoxPattern parse_pattern(const Json& j, const std::string& path) {
  return {parse_hits(field(j, "first", path), child(path, "first")),
          parse_hits(field(j, "second", path), child(path, "second"))};
}

}  // namespace tarski::io
