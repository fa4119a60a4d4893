#include "tarski/word.hpp"

#include <algorithm>
#include <cctype>

#include "tarski/error.hpp"

namespace tarski {

namespace {

constexpr std::string_view kGeneratorChars = "abcdfghijk";

}  // namespace

char generator_char(int generator) { return kGeneratorChars.at(static_cast<std::size_t>(generator - 1)); }

char Letter::to_char() const {
  const char c = generator_char(generator());
  return is_inverse() ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c;
}

FreeWord FreeWord::reduce(std::span<const Letter> letters, int max_rank) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter l = letters[i];
    if (l.generator() < 1 || l.generator() > max_rank) {
      throw InputError("generator " + std::to_string(l.generator()) + " out of range 1.." +
                           std::to_string(max_rank),
                       "letter " + std::to_string(i));
    }
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return FreeWord(std::move(out));
}

FreeWord FreeWord::parse(std::string_view text, int max_rank) {
  if (text == "e") return FreeWord();
  if (text.empty()) throw InputError("empty word (use \"e\" for the identity)", "offset 0");
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    const auto pos = kGeneratorChars.find(static_cast<char>(std::tolower(c)));
    if (!std::isalpha(c) || pos == std::string_view::npos) {
      throw InputError(std::string("unexpected character '") + text[i] + "' in word \"" +
                           std::string(text) + "\"",
                       "offset " + std::to_string(i));
    }
    const int g = static_cast<int>(pos) + 1;
    if (g > max_rank) {
      throw InputError(std::string("generator '") + text[i] + "' exceeds rank " + std::to_string(max_rank),
                       "offset " + std::to_string(i));
    }
    letters.emplace_back(g, std::isupper(c) != 0);
  }
  return reduce(letters, max_rank);
}

int FreeWord::max_generator() const {
  int m = 0;
  for (Letter l : letters_) m = std::max(m, l.generator());
  return m;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l.to_char());
  return s;
}

std::strong_ordering operator<=>(const FreeWord& x, const FreeWord& y) {
  if (auto c = x.length() <=> y.length(); c != 0) return c;
  return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(), y.letters_.begin(),
                                                y.letters_.end());
}

FreeWord multiply(const FreeWord& x, const FreeWord& y) {
  std::vector<Letter> letters(x.letters().begin(), x.letters().end());
  letters.insert(letters.end(), y.letters().begin(), y.letters().end());
  return FreeWord::reduce(letters);
}

FreeWord invert(const FreeWord& x) {
  std::vector<Letter> letters;
  letters.reserve(x.length());
  for (auto it = x.letters().rbegin(); it != x.letters().rend(); ++it) letters.push_back(it->inverse());
  return FreeWord::reduce(letters);
}

FreeWord power(const FreeWord& x, long n) {
  const FreeWord base = n < 0 ? invert(x) : x;
  FreeWord result;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) result = multiply(result, base);
  return result;
}

std::vector<FreeWord> all_words(int rank, std::size_t max_length) {
  std::vector<FreeWord> out{FreeWord()};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t w = layer_begin; w < layer_end; ++w) {
      for (int a = 0; a < 2 * rank; ++a) {
        const Letter l = Letter::from_alphabet_index(a);
        const FreeWord& prefix = out[w];
        if (!prefix.is_identity() && prefix[prefix.length() - 1] == l.inverse()) continue;
        std::vector<Letter> letters(prefix.letters().begin(), prefix.letters().end());
        letters.push_back(l);
        out.push_back(FreeWord::reduce(letters));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace tarski
