#include "tarski/group_element.hpp"

#include "tarski/error.hpp"

namespace tarski {

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (x.index() != y.index()) throw InputError("cannot multiply a free word with a permutation");
  if (const auto* w = std::get_if<FreeWord>(&x)) return multiply(*w, std::get<FreeWord>(y));
  return multiply(std::get<Permutation>(x), std::get<Permutation>(y));
}

GroupElement invert(const GroupElement& x) {
  return std::visit([](const auto& v) -> GroupElement { return invert(v); }, x);
}

bool is_identity(const GroupElement& x) {
  return std::visit([](const auto& v) { return v.is_identity(); }, x);
}

std::string to_string(const GroupElement& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

}  // namespace tarski
