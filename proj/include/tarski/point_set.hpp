#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "tarski/finite_set.hpp"
#include "tarski/symbolic_set.hpp"
#include "tarski/word.hpp"

namespace tarski {

/// A point of X: an index for finite universes, a reduced word for free-word universes.
using Point = std::variant<std::size_t, FreeWord>;

/// A subset of X in whichever representation the universe uses.
using PointSet = std::variant<FiniteSet, SymbolicSet>;

std::string to_string(const Point& p);

// Boolean algebra on PointSet. Mixing representations throws InputError.
PointSet set_union(const PointSet& s, const PointSet& t);
PointSet intersection(const PointSet& s, const PointSet& t);
PointSet difference(const PointSet& s, const PointSet& t);
PointSet complement(const PointSet& s);

bool is_empty(const PointSet& s);
bool contains(const PointSet& s, const Point& p);
/// Least point (shortlex-least word for symbolic sets).
std::optional<Point> least_member(const PointSet& s);
bool is_subset(const PointSet& s, const PointSet& t);
bool same_universe(const PointSet& s, const PointSet& t);

}  // namespace tarski
