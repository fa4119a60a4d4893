#include <doctest.h>

#include <map>

#include "tarski/equations.hpp"
#include "tarski/error.hpp"
#include "tarski/paradox.hpp"

using namespace tarski;

namespace {
FreeWord w(const char* s) { return FreeWord::parse(s); }
Permutation p(std::vector<std::uint32_t> v) { return Permutation(std::move(v)); }
PointSet cone(const char* s) { return SymbolicSet::cone(2, w(s)); }
PointSet single(const char* s) { return SymbolicSet::singleton(2, w(s)); }
PointSet pts(std::size_t n, std::vector<std::size_t> v) { return FiniteSet(n, std::move(v)); }

const Action& f2() {
  static const Action a = Action::free_self(2);
  return a;
}

ParadoxicalDecomposition classical() {
  return {{{cone("a"), w("e")}, {cone("A"), w("a")}}, {{cone("b"), w("e")}, {cone("B"), w("b")}}};
}

PingPongChain fixture_chain() {
  return {{set_union(complement(cone("a")), cone("ab")), cone("a")}, {w("abA"), w("ab")}};
}

Partition first_letter() { return {single("e"), cone("a"), cone("A"), cone("b"), cone("B")}; }

// Reads a decomposition as a pattern: tuple = the distinct nonidentity
// inverse translators, partition = the pieces plus whatever they leave out.
struct AsPattern {
  ConfigurationPair pair;
  ParadoxPattern pattern;
};

AsPattern as_pattern(const Action& action, const ParadoxicalDecomposition& dec) {
  AsPattern out;
  std::map<std::string, std::size_t> coordinate;
  PointSet covered = action.empty_set();
  auto hits = [&](const std::vector<Piece>& family, std::vector<PatternHit>& into) {
    for (const auto& piece : family) {
      std::size_t j = 0;
      if (!is_identity(piece.translator)) {
        const GroupElement inv = invert(piece.translator);
        auto [it, fresh] = coordinate.emplace(to_string(inv), out.pair.tuple.size() + 1);
        if (fresh) out.pair.tuple.push_back(inv);
        j = it->second;
      }
      out.pair.partition.push_back(piece.set);
      covered = set_union(covered, piece.set);
      into.push_back({j, static_cast<std::uint32_t>(out.pair.partition.size())});
    }
  };
  hits(dec.first, out.pattern.first);
  hits(dec.second, out.pattern.second);
  if (!is_empty(complement(covered))) out.pair.partition.push_back(complement(covered));
  if (out.pair.tuple.empty()) out.pair.tuple.push_back(w("a"));
  return out;
}

void check_tarski_alternative(const Action& action, const ParadoxicalDecomposition& dec) {
  REQUIRE(verify_decomposition(action, dec).ok());
  const auto ap = as_pattern(action, dec);
  const auto cs = compute_configurations(action, ap.pair);
  CHECK(pattern_check(cs, ap.pattern).holds());
  CHECK_FALSE(solve_feasibility(build_equations(cs)).feasible());
}
}  // namespace

TEST_CASE("classical F2 decomposition") {
  const auto check = verify_decomposition(f2(), classical());
  CHECK(check.ok());
  CHECK(classical().piece_count() == 4);

  auto gap = classical();
  gap.first[1].translator = w("e");
  const auto g = verify_decomposition(f2(), gap);
  CHECK(g.kind == DecompositionCheck::Kind::CoverGap);
  CHECK(g.family == 1);
  CHECK(to_string(*g.witness) == "e");

  auto overlap = classical();
  overlap.first[1].set = cone("a");
  const auto o = verify_decomposition(f2(), overlap);
  CHECK(o.kind == DecompositionCheck::Kind::Overlap);
  CHECK(to_string(*o.witness) == "a");
}

TEST_CASE("strict decompositions") {
  const auto strict = verify_decomposition(f2(), classical(), true);
  CHECK(strict.kind == DecompositionCheck::Kind::PiecesDoNotExhaust);
  CHECK(to_string(*strict.witness) == "e");
  auto exact = classical();
  exact.first[0].set = set_union(cone("a"), single("e"));
  exact.first[1].set = difference(cone("A"), single("A"));
  // a·(cone(A) \ {A}) misses {e} only, which the first piece supplies.
  CHECK(verify_decomposition(f2(), exact).ok());
}

TEST_CASE("wrong universe pieces") {
  ParadoxicalDecomposition dec{{{pts(3, {0}), w("e")}}, {{pts(3, {1}), w("e")}}};
  CHECK(verify_decomposition(f2(), dec).kind == DecompositionCheck::Kind::WrongUniverse);
}

TEST_CASE("chain construction at n = 2") {
  const auto chain = fixture_chain();
  CHECK(f2().act_on_set(w("abA"), chain.sets[0]) == set_union(cone("abA"), cone("abb")));
  CHECK(f2().act_on_set(w("ab"), chain.sets[1]) == cone("aba"));
  const auto out = chain_to_decomposition(f2(), chain);
  CHECK(out.piece_bound == 4);
  CHECK(out.decomposition.piece_count() == 4);
  CHECK(verify_decomposition(f2(), out.decomposition).ok());
  REQUIRE(out.prefixes.size() == 3);
  CHECK(std::get<FreeWord>(out.prefixes[0]) == w("ababA"));
  CHECK(std::get<FreeWord>(out.prefixes[1]) == w("ab"));
  CHECK(std::get<FreeWord>(out.prefixes[2]).is_identity());
  PointSet acc = f2().empty_set();
  for (const auto& e : out.telescoping) acc = set_union(acc, e);
  CHECK(acc == chain.sets[0]);
  check_tarski_alternative(f2(), out.decomposition);
}

TEST_CASE("chain hypothesis failures name a witness") {
  auto bad = fixture_chain();
  bad.elements[0] = w("b");
  try {
    chain_to_decomposition(f2(), bad);
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "h1X1 ⊆ X2");
    REQUIRE(e.witness());
    // B lies in X1 and b·B = e falls outside cone(a).
    CHECK(to_string(*e.witness()) == "e");
  }
  PingPongChain gap{{f2().full_set(), f2().full_set()}, {w("e"), w("e")}};
  try {
    chain_to_decomposition(f2(), gap);
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "X = ∪ D_i");
    CHECK(to_string(*e.witness()) == "e");
  }
  PingPongChain short_chain{{f2().full_set()}, {w("a")}};
  CHECK_THROWS_AS(chain_to_decomposition(f2(), short_chain), InputError);
}

TEST_CASE("cyclic ping-pong tableau") {
  const CyclicTableau good{{cone("A"), cone("B")}, {cone("a"), cone("b")}, {w("a"), w("b")}};
  const auto cert = check_pingpong_cyclic(f2(), good);
  CHECK(cert.ok);
  CHECK(cert.verified.size() == 2);
  CHECK(cert.conclusion.find("free subgroup of rank 2") != std::string::npos);

  CyclicTableau swapped = good;
  std::swap(swapped.a[0], swapped.b[0]);
  const auto fail = check_pingpong_cyclic(f2(), swapped);
  CHECK_FALSE(fail.ok);
  CHECK(fail.index == 0);
  CHECK(to_string(*fail.witness) == "e");

  CyclicTableau overlapping = good;
  overlapping.a[0] = cone("a");
  const auto pre = check_pingpong_cyclic(f2(), overlapping);
  CHECK_FALSE(pre.ok);
  CHECK(pre.failure.find("precondition") != std::string::npos);
}

TEST_CASE("subgroup ping-pong in F2") {
  const std::vector<SubgroupSpec> groups{{SubgroupSpec::Kind::Cyclic, {w("a")}, 3},
                                         {SubgroupSpec::Kind::Cyclic, {w("b")}, 3}};
  const std::vector<PointSet> sets{set_union(cone("a"), cone("A")), set_union(cone("b"), cone("B"))};
  const auto r = check_pingpong_subgroups(f2(), groups, sets);
  CHECK(r.ok());
  CHECK(r.inclusions_checked == 12);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.exponent_bound == 3);
  CHECK_FALSE(r.orders[0].has_value());

  auto wider = groups;
  wider[0].exponent_bound = wider[1].exponent_bound = 5;
  CHECK(check_pingpong_subgroups(f2(), wider, sets).ok());

  const std::vector<PointSet> overlapping{cone("a"), set_union(cone("a"), cone("b"))};
  CHECK(check_pingpong_subgroups(f2(), groups, overlapping).status == SubgroupPingPongReport::Status::OverlappingSets);
}

TEST_CASE("subgroup ping-pong in S3 is exhaustive and fails") {
  const Action s3 = Action::finite_regular({p({1, 0, 2}), p({0, 2, 1})});
  const std::vector<SubgroupSpec> transpositions{{SubgroupSpec::Kind::Cyclic, {p({1, 0, 2})}, 3},
                                                 {SubgroupSpec::Kind::Cyclic, {p({0, 2, 1})}, 3}};
  // Every pair of disjoint nonempty X1, X2 among the 6 points.
  std::size_t size_failures = 0, pairs = 0;
  for (int code = 0; code < 729; ++code) {
    std::vector<std::size_t> x1, x2;
    for (int i = 0, c = code; i < 6; ++i, c /= 3) {
      if (c % 3 == 1) x1.push_back(i);
      if (c % 3 == 2) x2.push_back(i);
    }
    if (x1.empty() || x2.empty()) continue;
    ++pairs;
    const auto r = check_pingpong_subgroups(s3, transpositions, {pts(6, x1), pts(6, x2)});
    CHECK_FALSE(r.ok());
    CHECK(r.exhaustive);
    if (r.status == SubgroupPingPongReport::Status::SizeCondition) ++size_failures;
  }
  CHECK(pairs == 602);
  CHECK(size_failures == pairs);

  // With |H1| = 3 the size condition holds and every candidate fails an inclusion.
  const std::vector<SubgroupSpec> rotation_first{{SubgroupSpec::Kind::Cyclic, {p({1, 2, 0})}, 3},
                                                 {SubgroupSpec::Kind::Cyclic, {p({1, 0, 2})}, 3}};
  for (int code = 0; code < 729; ++code) {
    std::vector<std::size_t> x1, x2;
    for (int i = 0, c = code; i < 6; ++i, c /= 3) {
      if (c % 3 == 1) x1.push_back(i);
      if (c % 3 == 2) x2.push_back(i);
    }
    if (x1.empty() || x2.empty()) continue;
    const auto r = check_pingpong_subgroups(s3, rotation_first, {pts(6, x1), pts(6, x2)});
    CHECK(r.status == SubgroupPingPongReport::Status::InclusionFailed);
  }
}

TEST_CASE("subgroup size condition is quoted") {
  const Action s3 = Action::finite_regular({p({1, 0, 2}), p({0, 2, 1})});
  const std::vector<SubgroupSpec> groups{{SubgroupSpec::Kind::Listed, {p({1, 0, 2})}, 3},
                                         {SubgroupSpec::Kind::Listed, {p({1, 2, 0})}, 3}};
  const auto r = check_pingpong_subgroups(s3, groups, {pts(6, {0}), pts(6, {1})});
  CHECK(r.status == SubgroupPingPongReport::Status::SizeCondition);
  CHECK(r.detail.find("|H_1| >= 3") != std::string::npos);
  CHECK(*r.orders[0] == 2);
  CHECK(*r.orders[1] == 3);
}

TEST_CASE("nonabelian witnesses") {
  const auto fw = make_nonabelian_witness(f2(), w("a"), w("b"));
  REQUIRE(fw.sets.size() == 5);
  const std::vector<PointSet> expected{single("e"), single("a"), single("b"), single("ba"), single("ab")};
  CHECK(fw.sets == expected);
  CHECK(verify_nonabelian(f2(), fw).ok);
  CHECK(multiply(fw.g1, fw.g2) != multiply(fw.g2, fw.g1));

  const Action z = Action::free_self(1);
  CHECK_THROWS_AS(make_nonabelian_witness(z, FreeWord::parse("a"), FreeWord::parse("aa")), HypothesisError);

  const Action s3 = Action::finite_regular({p({1, 0, 2}), p({0, 2, 1})});
  const auto sw = make_nonabelian_witness(s3, p({1, 0, 2}), p({0, 2, 1}));
  for (const auto& s : sw.sets) CHECK(std::get<FiniteSet>(s).count() == 1);
  CHECK(verify_nonabelian(s3, sw).ok);
  CHECK(multiply(sw.g1, sw.g2) != multiply(sw.g2, sw.g1));

  auto tampered = fw;
  std::swap(tampered.sets[3], tampered.sets[4]);
  CHECK_FALSE(verify_nonabelian(f2(), tampered).ok);
  auto vacuous = fw;
  for (auto& s : vacuous.sets) s = f2().empty_set();
  CHECK_FALSE(verify_nonabelian(f2(), vacuous).ok);

  CHECK_THROWS_AS(make_nonabelian_witness(Action::finite(3, {p({1, 0, 2}), p({0, 2, 1})}), w("a"), w("b")),
                  InputError);
}

TEST_CASE("infinite order witnesses") {
  const Action z = Action::free_self(1);
  const auto out = make_infinite_order_witness(z, FreeWord::parse("a"));
  REQUIRE(out.witness);
  CHECK(out.witness->e1 == set_union(PointSet(SymbolicSet::singleton(1, FreeWord())), PointSet(SymbolicSet::cone(1, w("a")))));
  CHECK(out.witness->e2 == PointSet(SymbolicSet::cone(1, w("A"))));
  CHECK(verify_infinite_order(z, *out.witness).ok);
  for (long k = 1; k <= 20; ++k) CHECK_FALSE(power(w("a"), k).is_identity());

  const auto conj = make_infinite_order_witness(f2(), w("abA"));
  REQUIRE(conj.witness);
  CHECK(verify_infinite_order(f2(), *conj.witness).ok);

  const Action s3 = Action::finite_regular({p({1, 0, 2}), p({0, 2, 1})});
  const auto fin = make_infinite_order_witness(s3, p({1, 0, 2}));
  CHECK_FALSE(fin.witness);
  CHECK(*fin.finite_order == 2);
  CHECK(fin.reason == "element has finite order 2");

  InfiniteOrderWitness overlapping = *out.witness;
  overlapping.e2 = overlapping.e1;
  CHECK_FALSE(verify_infinite_order(z, overlapping).ok);

  CHECK_FALSE(make_infinite_order_witness(Action::trivial_free(2, 2), w("a")).witness);
  CHECK_FALSE(make_infinite_order_witness(f2(), w("e")).witness);
}

TEST_CASE("paradox pattern on the F2 first-letter partition") {
  const auto cs = compute_configurations(f2(), {{w("A"), w("B")}, first_letter()});
  const ParadoxPattern pattern{{{0, 2}, {1, 3}}, {{0, 4}, {2, 5}}};
  CHECK(pattern_check(cs, pattern).holds());
  const auto dec = pattern_decomposition(cs, pattern);
  CHECK(verify_decomposition(f2(), dec).ok());
  CHECK_FALSE(solve_feasibility(build_equations(cs)).feasible());

  const ParadoxPattern shared{{{0, 2}, {1, 3}}, {{0, 2}, {2, 5}}};
  CHECK(pattern_check(cs, shared).kind == PatternCheck::Kind::SharedBlock);
  const ParadoxPattern out_of_range{{{3, 2}}, {{0, 4}}};
  CHECK(pattern_check(cs, out_of_range).kind == PatternCheck::Kind::OutOfRange);
  const ParadoxPattern thin{{{0, 2}}, {{0, 4}, {2, 5}}};
  const auto t = pattern_check(cs, thin);
  CHECK(t.kind == PatternCheck::Kind::Uncovered);
  REQUIRE(t.counterexample);
  CHECK(cs.contains(*t.counterexample));
}

TEST_CASE("no pattern holds for a trivial action") {
  for (bool free_universe : {false, true}) {
    const Action triv = free_universe ? Action::trivial_free(2, 2) : Action::trivial_finite(3, 2);
    const Partition part = free_universe ? Partition{cone("a"), cone("A"), difference(f2().full_set(), set_union(cone("a"), cone("A")))}
                                         : Partition{pts(3, {0}), pts(3, {1}), pts(3, {2})};
    const auto cs = compute_configurations(triv, {{w("a"), w("b")}, part});
    // Each family: a nonempty set of hits on distinct blocks; 3 coordinates x 3 blocks.
    std::size_t tried = 0, holds = 0;
    for (int f1 = 1; f1 < (1 << 9); ++f1) {
      for (int f2m = 1; f2m < (1 << 9); ++f2m) {
        ParadoxPattern pat;
        for (int h = 0; h < 9; ++h) {
          if (f1 >> h & 1) pat.first.push_back({static_cast<std::size_t>(h / 3), static_cast<std::uint32_t>(h % 3 + 1)});
          if (f2m >> h & 1) pat.second.push_back({static_cast<std::size_t>(h / 3), static_cast<std::uint32_t>(h % 3 + 1)});
        }
        ++tried;
        if (pattern_check(cs, pat).holds()) ++holds;
      }
    }
    CHECK(tried == 511u * 511u);
    CHECK(holds == 0);
  }
}

TEST_CASE("bounded search finds the classical decomposition first") {
  const auto r = bounded_paradox_search(f2(), {4, 1, 1, 5000000});
  REQUIRE(r.found);
  CHECK(r.found->piece_count() == 4);
  CHECK(verify_decomposition(f2(), *r.found).ok());
  CHECK(r.found->first[0].set == cone("a"));
  CHECK(std::get<FreeWord>(r.found->first[0].translator).is_identity());
  CHECK(r.found->first[1].set == cone("A"));
  CHECK(std::get<FreeWord>(r.found->first[1].translator) == w("a"));
  check_tarski_alternative(f2(), *r.found);

  const auto wider = bounded_paradox_search(f2(), {5, 1, 2, 5000000});
  REQUIRE(wider.found);
  CHECK(verify_decomposition(f2(), *wider.found).ok());

  const auto three = bounded_paradox_search(f2(), {3, 1, 1, 5000000});
  CHECK_FALSE(three.found);
  CHECK(three.bounds.max_pieces == 3);
}

TEST_CASE("bounded search on actions without decompositions") {
  const auto fin = bounded_paradox_search(Action::finite(3, {p({1, 2, 0})}), {});
  CHECK_FALSE(fin.found);
  CHECK(fin.obstruction.find("finite") != std::string::npos);
  const auto triv = bounded_paradox_search(Action::trivial_free(2, 2), {});
  CHECK_FALSE(triv.found);
  CHECK_FALSE(triv.obstruction.empty());
  CHECK_THROWS_AS(bounded_paradox_search(f2(), {4, 1, 1, 10}), BoundExceeded);
  CHECK_THROWS_AS(bounded_paradox_search(f2(), {4, 0, 1, 10}), InputError);
}

TEST_CASE("classical decomposition satisfies the Tarski alternative") { check_tarski_alternative(f2(), classical()); }
