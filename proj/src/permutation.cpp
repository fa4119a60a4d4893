#include "tarski/permutation.hpp"

#include <numeric>

#include "tarski/error.hpp"

namespace tarski {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t p = 0; p < images_.size(); ++p) {
    const auto q = images_[p];
    if (q >= images_.size() || seen[q]) {
      throw InputError("image list is not a bijection of 0.." + std::to_string(images_.size() - 1),
                       "index " + std::to_string(p));
    }
    seen[q] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0U);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (images_[p] != p) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (seen[p]) continue;
    std::uint64_t len = 0;
    for (std::size_t q = p; !seen[q]; q = images_[q]) {
      seen[q] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (p) s += ',';
    s += std::to_string(images_[p]);
  }
  return s + "]";
}

Permutation multiply(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) {
    throw InputError("permutation degrees differ (" + std::to_string(x.degree()) + " vs " +
                     std::to_string(y.degree()) + ")");
  }
  std::vector<std::uint32_t> images(x.degree());
  for (std::size_t p = 0; p < images.size(); ++p) images[p] = x(y(p));
  return Permutation(std::move(images));
}

Permutation invert(const Permutation& x) {
  std::vector<std::uint32_t> images(x.degree());
  for (std::size_t p = 0; p < images.size(); ++p) images[x(p)] = static_cast<std::uint32_t>(p);
  return Permutation(std::move(images));
}

Permutation evaluate_word(std::span<const Permutation> assignment, const FreeWord& w, std::size_t degree) {
  for (const auto& perm : assignment) {
    if (perm.degree() != degree) {
      throw InputError("generator assignment mixes degrees " + std::to_string(perm.degree()) + " and " +
                       std::to_string(degree));
    }
  }
  Permutation result = Permutation::identity(degree);
  for (Letter l : w.letters()) {
    if (static_cast<std::size_t>(l.generator()) > assignment.size()) {
      throw InputError(std::string("generator '") + generator_char(l.generator()) + "' has no assigned permutation");
    }
    const Permutation& g = assignment[l.generator() - 1];
    result = multiply(result, l.is_inverse() ? invert(g) : g);
  }
  return result;
}

Permutation evaluate_word(std::span<const Permutation> assignment, const FreeWord& w) {
  if (assignment.empty()) {
    if (!w.is_identity()) throw InputError("word " + w.to_string() + " evaluated under an empty assignment");
    return Permutation::identity(0);
  }
  return evaluate_word(assignment, w, assignment.front().degree());
}

}  // namespace tarski
