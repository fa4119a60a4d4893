#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tarski/action.hpp"
#include "tarski/error.hpp"

using namespace tarski;

namespace {
FreeWord w(const char* s) { return FreeWord::parse(s); }
Permutation p(std::vector<std::uint32_t> v) { return Permutation(std::move(v)); }
PointSet cone(const char* s) { return SymbolicSet::cone(2, w(s)); }
PointSet pts(std::size_t n, std::vector<std::size_t> v) { return FiniteSet(n, std::move(v)); }

Partition first_letter() {
  return {SymbolicSet::singleton(2, w("e")), cone("a"), cone("A"), cone("b"), cone("B")};
}
}  // namespace

TEST_CASE("act on points in every backend") {
  const Action f2 = Action::free_self(2);
  CHECK(std::get<FreeWord>(f2.act(w("a"), w("A"))).is_identity());
  const Action z3 = Action::finite(3, {p({1, 2, 0})});
  CHECK(std::get<std::size_t>(z3.act(p({1, 2, 0}), std::size_t{0})) == 1);
  CHECK(std::get<std::size_t>(z3.act(w("aa"), std::size_t{0})) == 2);
  const Action triv = Action::trivial_finite(4, 2);
  CHECK(std::get<std::size_t>(triv.act(w("abA"), std::size_t{3})) == 3);
  const Action triv_free = Action::trivial_free(2, 2);
  CHECK(std::get<FreeWord>(triv_free.act(w("b"), w("a"))) == w("a"));
  CHECK_THROWS_AS(z3.act(w("b"), std::size_t{0}), InputError);
  CHECK_THROWS_AS(z3.act(p({1, 0}), std::size_t{0}), InputError);
}

TEST_CASE("act on sets") {
  const Action f2 = Action::free_self(2);
  CHECK(f2.act_on_set(w("a"), cone("A")) == complement(cone("a")));
  const Action z3 = Action::finite(3, {p({1, 2, 0})});
  CHECK(z3.act_on_set(p({1, 2, 0}), pts(3, {0, 1})) == pts(3, {1, 2}));
  CHECK(f2.act_on_set(w("ab"), f2.full_set()) == f2.full_set());
  CHECK(z3.act_on_set(w("a"), z3.full_set()) == z3.full_set());
  CHECK(f2.preimage(w("a"), complement(cone("a"))) == cone("A"));
}

TEST_CASE("partition validation") {
  const Action f2 = Action::free_self(2);
  CHECK(validate_partition(f2, first_letter()).ok());
  CHECK(validate_partition(Action::finite(3, {p({1, 2, 0})}), {pts(3, {0}), pts(3, {1, 2})}).ok());
  const auto bad = validate_partition(f2, {cone("a"), cone("ab")});
  REQUIRE(bad.violations.size() == 2);
  CHECK(bad.violations[0].kind == PartitionViolation::Kind::Overlap);
  CHECK(to_string(*bad.violations[0].witness) == "ab");
  CHECK(bad.violations[1].kind == PartitionViolation::Kind::CoverGap);
  CHECK(to_string(*bad.violations[1].witness) == "e");
  const auto empty = validate_partition(f2, {f2.full_set(), f2.empty_set()});
  REQUIRE_FALSE(empty.ok());
  CHECK(empty.violations[0].kind == PartitionViolation::Kind::EmptyBlock);
  const auto wrong = validate_partition(f2, {pts(3, {0, 1, 2})});
  REQUIRE_FALSE(wrong.ok());
  CHECK(wrong.violations[0].kind == PartitionViolation::Kind::WrongUniverse);
}

TEST_CASE("pull back along an equivariant map") {
  const Action z4 = Action::finite(4, {p({1, 2, 3, 0})});
  const Action z2 = Action::finite(2, {p({1, 0})});
  const auto f = EquivariantMap::make(z4, z2, {0, 1, 0, 1}, {p({1, 0})});
  const auto pulled = pull_back_partition(f, {pts(2, {0}), pts(2, {1})});
  REQUIRE(pulled.size() == 2);
  CHECK(pulled[0] == pts(4, {0, 2}));
  CHECK(pulled[1] == pts(4, {1, 3}));
  const auto id = EquivariantMap::make(z4, z4, {0, 1, 2, 3}, {p({1, 2, 3, 0})});
  const Partition q{pts(4, {0, 3}), pts(4, {1}), pts(4, {2})};
  CHECK(pull_back_partition(id, q) == q);
  CHECK_THROWS_AS(EquivariantMap::make(z4, z2, {0, 0, 1, 1}, {p({1, 0})}), InputError);
  CHECK_THROWS_AS(EquivariantMap::make(z4, z2, {0, 0, 0, 0}, {p({0, 1})}), InputError);
}

TEST_CASE("orbit and coset actions") {
  const Action z4 = Action::finite(4, {p({1, 2, 3, 0})});
  const auto r = orbit_coset_action(z4, 0);
  CHECK(r.cosets.size() == 4);
  CHECK(r.stabilizer_order == 1);
  CHECK_FALSE(r.restricted);

  const Action s3 = Action::finite(3, {p({1, 0, 2}), p({0, 2, 1})});
  const auto s = orbit_coset_action(s3, 0);
  CHECK(s.group_order == 6);
  CHECK(s.stabilizer_order == 2);
  CHECK(s.cosets.size() == 3);
  std::vector<std::size_t> image = s.orbit_to_coset.point_map();
  std::sort(image.begin(), image.end());
  CHECK(image == std::vector<std::size_t>{0, 1, 2});

  const Action split = Action::finite(4, {p({1, 0, 3, 2})});
  const auto t = orbit_coset_action(split, 0);
  CHECK(t.restricted);
  CHECK(t.orbit.size() == 2);
  CHECK_FALSE(t.warning.empty());
}

TEST_CASE("finite regular actions") {
  const Action s3 = Action::finite_regular({p({1, 0, 2}), p({0, 2, 1})});
  CHECK(s3.degree() == 6);
  CHECK(s3.group_elements()[0].is_identity());
  // Free and transitive: only the identity fixes a point, and 0 reaches everything.
  for (const auto& g : s3.group_elements()) {
    for (std::size_t x = 0; x < 6; ++x) {
      const bool fixes = std::get<std::size_t>(s3.act(g, x)) == x;
      CHECK(fixes == g.is_identity());
    }
  }
  std::set<std::size_t> reached;
  for (const auto& g : s3.group_elements()) reached.insert(std::get<std::size_t>(s3.act(g, std::size_t{0})));
  CHECK(reached.size() == 6);
}

TEST_CASE("property: regular actions of small groups are free") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Permutation> gens{oracle::random_permutation(rng, n), oracle::random_permutation(rng, n)};
    const Action reg = Action::finite_regular(gens);
    REQUIRE(reg.degree() <= 24);
    for (std::size_t x = 0; x < reg.degree(); ++x) {
      for (const auto& g : reg.group_elements()) {
        if (!g.is_identity()) CHECK(std::get<std::size_t>(reg.act(g, x)) != x);
      }
    }
  }
}

TEST_CASE("property: action axiom on every backend") {
  std::mt19937_64 rng(32);
  const Action f2 = Action::free_self(2);
  for (int trial = 0; trial < 200; ++trial) {
    const FreeWord g = oracle::random_word(rng, 2, 5), h = oracle::random_word(rng, 2, 5),
                   x = oracle::random_word(rng, 2, 5);
    CHECK(f2.act(multiply(g, h), x) == f2.act(g, f2.act(h, x)));
    CHECK(f2.act(FreeWord(), x) == Point(x));

    const Action fin = oracle::random_finite_action(rng, 8, 3);
    const FreeWord u = oracle::random_word(rng, fin.generator_count(), 4);
    const FreeWord v = oracle::random_word(rng, fin.generator_count(), 4);
    const std::size_t y = rng() % fin.degree();
    CHECK(fin.act(multiply(u, v), y) == fin.act(u, fin.act(v, y)));
  }
}

TEST_CASE("property: translating a partition keeps it a partition") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const Action fin = oracle::random_finite_action(rng, 8, 3);
    const Partition part = oracle::random_partition(rng, fin.degree(), 4);
    REQUIRE(validate_partition(fin, part).ok());
    const FreeWord g = oracle::random_word(rng, fin.generator_count(), 4);
    Partition moved;
    for (const auto& b : part) {
      moved.push_back(fin.act_on_set(g, b));
      CHECK(std::get<FiniteSet>(moved.back()).count() == std::get<FiniteSet>(b).count());
    }
    CHECK(validate_partition(fin, moved).ok());
  }
  const Action f2 = Action::free_self(2);
  for (int trial = 0; trial < 10; ++trial) {
    const FreeWord g = oracle::random_word(rng, 2, 3);
    Partition moved;
    for (const auto& b : first_letter()) moved.push_back(f2.act_on_set(g, b));
    CHECK(validate_partition(f2, moved).ok());
  }
}

TEST_CASE("property: pulled-back partitions validate and keep their block count") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 50; ++trial) {
    const Action fin = oracle::random_finite_action(rng, 6, 2);
    const auto r = orbit_coset_action(fin, rng() % fin.degree());
    const Partition target = oracle::random_partition(rng, r.coset_action.degree(), 3);
    const auto pulled = pull_back_partition(r.regular_to_coset, target);
    CHECK(pulled.size() == target.size());
    CHECK(validate_partition(r.regular_action, pulled).ok());
  }
}
