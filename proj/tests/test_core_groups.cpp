#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tarski/error.hpp"
#include "tarski/group_element.hpp"

using namespace tarski;

namespace {
FreeWord w(const char* s) { return FreeWord::parse(s); }
Permutation p(std::vector<std::uint32_t> v) { return Permutation(std::move(v)); }

bool is_reduced(const FreeWord& x) {
  for (std::size_t i = 1; i < x.length(); ++i) {
    if (x[i] == x[i - 1].inverse()) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("reduction cancels adjacent inverse pairs") {
  CHECK(w("aA").is_identity());
  CHECK(w("abBA").is_identity());
  CHECK(w("aBbAab") == w("ab"));
  CHECK(w("e").is_identity());
  CHECK(w("e").to_string() == "e");
}

TEST_CASE("word syntax errors carry an offset") {
  CHECK_THROWS_AS(w("aX"), InputError);
  try {
    w("aX");
  } catch (const InputError& e) {
    CHECK(e.location() == "offset 1");
  }
  CHECK_THROWS_AS(w(""), InputError);
  CHECK_THROWS_AS(FreeWord::parse("c", 2), InputError);
  // 'e' is the identity, never a generator; generator five is 'f'.
  CHECK(w("f").max_generator() == 5);
}

TEST_CASE("multiply and invert on words") {
  CHECK(multiply(w("ab"), w("BA")).is_identity());
  CHECK(multiply(w("a"), w("b")) == w("ab"));
  CHECK(invert(w("ab")) == w("BA"));
  CHECK(invert(w("e")).is_identity());
  CHECK(power(w("ab"), 2) == w("abab"));
  CHECK(power(w("ab"), -1) == w("BA"));
  CHECK(power(w("ab"), 0).is_identity());
}

TEST_CASE("permutation products compose right to left") {
  CHECK(multiply(p({1, 2, 0}), p({1, 2, 0})) == p({2, 0, 1}));
  CHECK(invert(p({1, 2, 0})) == p({2, 0, 1}));
  CHECK(p({1, 2, 0}).order() == 3);
  CHECK(p({1, 0, 3, 4, 2}).order() == 6);
  CHECK_THROWS_AS(p({0, 0, 1}), InputError);
  CHECK_THROWS_AS(multiply(p({1, 0}), p({0, 2, 1})), InputError);
}

TEST_CASE("mixed universes do not multiply") {
  CHECK_THROWS_AS(multiply(GroupElement(w("a")), GroupElement(p({1, 0}))), InputError);
}

TEST_CASE("evaluate_word through a generator assignment") {
  const std::vector<Permutation> cyc{p({1, 2, 0})};
  CHECK(evaluate_word(cyc, w("e"), 3).is_identity());
  CHECK(evaluate_word(cyc, w("aa")) == p({2, 0, 1}));
  const std::vector<Permutation> swap{p({1, 0, 2})};
  CHECK(evaluate_word(swap, w("aA")).is_identity());
  CHECK_THROWS_AS(evaluate_word(cyc, w("b")), InputError);
  const std::vector<Permutation> mismatch{p({1, 0}), p({0, 2, 1})};
  CHECK_THROWS_AS(evaluate_word(mismatch, w("ab")), InputError);
}

TEST_CASE("shortlex enumeration of rank-2 words") {
  const auto words = all_words(2, 2);
  REQUIRE(words.size() == 1 + 4 + 12);
  CHECK(words[0].is_identity());
  CHECK(words[1] == w("a"));
  CHECK(words[2] == w("A"));
  CHECK(words[3] == w("b"));
  CHECK(words[4] == w("B"));
  CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("property: reduction is idempotent and yields reduced words") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw;
    const int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) raw.push_back(Letter::from_alphabet_index(letter(rng)));
    const FreeWord r = FreeWord::reduce(raw, 2);
    CHECK(is_reduced(r));
    CHECK(FreeWord::reduce(r.letters(), 2) == r);
  }
}

TEST_CASE("property: inverses on both sides") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const FreeWord x = oracle::random_word(rng, 3, 8);
    CHECK(multiply(x, invert(x)).is_identity());
    CHECK(multiply(invert(x), x).is_identity());
    const Permutation q = oracle::random_permutation(rng, 7);
    CHECK(multiply(q, invert(q)).is_identity());
    CHECK(multiply(invert(q), q).is_identity());
  }
}

TEST_CASE("property: associativity, exhaustive to length 3 in rank 2") {
  const auto words = all_words(2, 3);
  for (const auto& x : words) {
    for (const auto& y : words) {
      const FreeWord xy = multiply(x, y);
      for (const auto& z : words) CHECK_EQ(multiply(xy, z), multiply(x, multiply(y, z)));
    }
  }
}

TEST_CASE("property: associativity on random words up to length 8") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const FreeWord x = oracle::random_word(rng, 2, 8), y = oracle::random_word(rng, 2, 8),
                   z = oracle::random_word(rng, 2, 8);
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
  }
}

TEST_CASE("property: evaluation is a homomorphism") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const std::vector<Permutation> gens{oracle::random_permutation(rng, 6), oracle::random_permutation(rng, 6)};
    const FreeWord u = oracle::random_word(rng, 2, 6), v = oracle::random_word(rng, 2, 6);
    CHECK(evaluate_word(gens, multiply(u, v), 6) ==
          multiply(evaluate_word(gens, u, 6), evaluate_word(gens, v, 6)));
    CHECK(evaluate_word(gens, invert(u), 6) == invert(evaluate_word(gens, u, 6)));
  }
}
