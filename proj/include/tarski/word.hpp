#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tarski {

inline constexpr int kMaxRank = 10;

/// A signed generator: generator index in 1..kMaxRank and a sign.
///
/// Letters are totally ordered by `alphabet_index()`, which places a
/// generator directly before its inverse: a < A < b < B < ...
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, bool inverse)
      : value_(static_cast<std::int8_t>(inverse ? -generator : generator)) {}

  /// Letter with the given position in the signed alphabet (0 = a, 1 = A, ...).
  static constexpr Letter from_alphabet_index(int index) {
    return Letter(index / 2 + 1, (index & 1) != 0);
  }

  constexpr int generator() const { return value_ < 0 ? -value_ : value_; }
  constexpr bool is_inverse() const { return value_ < 0; }
  constexpr Letter inverse() const { return Letter(generator(), !is_inverse()); }
  constexpr int alphabet_index() const { return 2 * (generator() - 1) + (is_inverse() ? 1 : 0); }

  char to_char() const;

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter x, Letter y) { return x.alphabet_index() <=> y.alphabet_index(); }

 private:
  std::int8_t value_ = 1;
};

/// Character used for generator `g` (lowercase); uppercase denotes the inverse.
/// 'e' is reserved for the identity, so the alphabet is a b c d f g h i j k.
char generator_char(int generator);

/// Reduced word in a free group. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;

  /// Freely reduces `letters`. Throws InputError if a generator exceeds `max_rank`.
  static FreeWord reduce(std::span<const Letter> letters, int max_rank = kMaxRank);

  /// Parses the letter syntax ("e", "abA", ...). Non-reduced input is reduced.
  /// Throws InputError carrying the offending character offset.
  static FreeWord parse(std::string_view text, int max_rank = kMaxRank);

  static FreeWord generator(int g) { return FreeWord({Letter(g, false)}); }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  /// Largest generator index occurring in the word (0 for the identity).
  int max_generator() const;

  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  /// Shortlex order: by length, then letter by letter.
  friend std::strong_ordering operator<=>(const FreeWord& x, const FreeWord& y);

 private:
  explicit FreeWord(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  std::vector<Letter> letters_;
};

FreeWord multiply(const FreeWord& x, const FreeWord& y);
FreeWord invert(const FreeWord& x);
/// x^n for any integer n.
FreeWord power(const FreeWord& x, long n);

/// All reduced words over `rank` generators of length <= max_length, shortlex order.
std::vector<FreeWord> all_words(int rank, std::size_t max_length);

}  // namespace tarski
