#pragma once

#include <string>
#include <variant>

#include "tarski/permutation.hpp"
#include "tarski/word.hpp"

namespace tarski {

/// An element of one of the two element universes.
using GroupElement = std::variant<FreeWord, Permutation>;

/// Throws InputError when the universes (or permutation degrees) differ.
GroupElement multiply(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);
bool is_identity(const GroupElement& x);
std::string to_string(const GroupElement& x);

}  // namespace tarski
