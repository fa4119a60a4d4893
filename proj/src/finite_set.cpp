#include "tarski/finite_set.hpp"

#include "tarski/error.hpp"

namespace tarski {

FiniteSet::FiniteSet(std::size_t degree, const std::vector<std::size_t>& points) : bits_(degree) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= degree) {
      throw InputError("point " + std::to_string(points[i]) + " outside 0.." + std::to_string(degree - 1),
                       "index " + std::to_string(i));
    }
    bits_.set(points[i]);
  }
}

FiniteSet FiniteSet::full(std::size_t degree) {
  FiniteSet s(degree);
  s.bits_.set();
  return s;
}

std::optional<std::size_t> FiniteSet::least_member() const {
  const auto p = bits_.find_first();
  if (p == boost::dynamic_bitset<>::npos) return std::nullopt;
  return p;
}

std::vector<std::size_t> FiniteSet::points() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto p = bits_.find_first(); p != boost::dynamic_bitset<>::npos; p = bits_.find_next(p)) out.push_back(p);
  return out;
}

namespace {

void check_degrees(const FiniteSet& s, const FiniteSet& t) {
  if (s.degree() != t.degree()) {
    throw InputError("finite sets over different degrees (" + std::to_string(s.degree()) + " vs " +
                     std::to_string(t.degree()) + ")");
  }
}

}  // namespace

FiniteSet operator|(const FiniteSet& s, const FiniteSet& t) {
  check_degrees(s, t);
  FiniteSet r = s;
  r.bits_ |= t.bits_;
  return r;
}

FiniteSet operator&(const FiniteSet& s, const FiniteSet& t) {
  check_degrees(s, t);
  FiniteSet r = s;
  r.bits_ &= t.bits_;
  return r;
}

FiniteSet operator-(const FiniteSet& s, const FiniteSet& t) {
  check_degrees(s, t);
  FiniteSet r = s;
  r.bits_ -= t.bits_;
  return r;
}

FiniteSet FiniteSet::complement() const {
  FiniteSet r = *this;
  r.bits_.flip();
  return r;
}

FiniteSet image(const Permutation& g, const FiniteSet& s) {
  if (g.degree() != s.degree()) {
    throw InputError("permutation of degree " + std::to_string(g.degree()) + " applied to a set over degree " +
                     std::to_string(s.degree()));
  }
  FiniteSet r(s.degree());
  for (auto p : s.points()) r.insert(g(p));
  return r;
}

}  // namespace tarski
