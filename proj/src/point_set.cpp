#include "tarski/point_set.hpp"

#include "tarski/error.hpp"

namespace tarski {

namespace {

template <typename FiniteOp, typename SymbolicOp>
PointSet binary(const PointSet& s, const PointSet& t, FiniteOp fop, SymbolicOp sop) {
  if (s.index() != t.index()) throw InputError("cannot combine a finite set with a symbolic set");
  if (const auto* f = std::get_if<FiniteSet>(&s)) return fop(*f, std::get<FiniteSet>(t));
  return sop(std::get<SymbolicSet>(s), std::get<SymbolicSet>(t));
}

}  // namespace

std::string to_string(const Point& p) {
  if (const auto* i = std::get_if<std::size_t>(&p)) return std::to_string(*i);
  return std::get<FreeWord>(p).to_string();
}

PointSet set_union(const PointSet& s, const PointSet& t) {
  return binary(
      s, t, [](const FiniteSet& x, const FiniteSet& y) { return x | y; },
      [](const SymbolicSet& x, const SymbolicSet& y) { return set_union(x, y); });
}

PointSet intersection(const PointSet& s, const PointSet& t) {
  return binary(
      s, t, [](const FiniteSet& x, const FiniteSet& y) { return x & y; },
      [](const SymbolicSet& x, const SymbolicSet& y) { return intersection(x, y); });
}

PointSet difference(const PointSet& s, const PointSet& t) {
  return binary(
      s, t, [](const FiniteSet& x, const FiniteSet& y) { return x - y; },
      [](const SymbolicSet& x, const SymbolicSet& y) { return difference(x, y); });
}

PointSet complement(const PointSet& s) {
  if (const auto* f = std::get_if<FiniteSet>(&s)) return f->complement();
  return complement(std::get<SymbolicSet>(s));
}

bool is_empty(const PointSet& s) {
  return std::visit([](const auto& v) { return v.is_empty(); }, s);
}

bool contains(const PointSet& s, const Point& p) {
  if (const auto* f = std::get_if<FiniteSet>(&s)) {
    const auto* i = std::get_if<std::size_t>(&p);
    return i && f->contains(*i);
  }
  const auto* w = std::get_if<FreeWord>(&p);
  return w && std::get<SymbolicSet>(s).contains(*w);
}

std::optional<Point> least_member(const PointSet& s) {
  if (const auto* f = std::get_if<FiniteSet>(&s)) {
    if (auto p = f->least_member()) return Point(*p);
    return std::nullopt;
  }
  if (auto w = std::get<SymbolicSet>(s).least_member()) return Point(*w);
  return std::nullopt;
}

bool is_subset(const PointSet& s, const PointSet& t) { return is_empty(difference(s, t)); }

bool same_universe(const PointSet& s, const PointSet& t) {
  if (s.index() != t.index()) return false;
  if (const auto* f = std::get_if<FiniteSet>(&s)) return f->degree() == std::get<FiniteSet>(t).degree();
  return std::get<SymbolicSet>(s).rank() == std::get<SymbolicSet>(t).rank();
}

}  // namespace tarski
