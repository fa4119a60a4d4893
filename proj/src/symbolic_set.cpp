#include "tarski/symbolic_set.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "tarski/error.hpp"

namespace tarski {

namespace {

using Automaton = SymbolicSet::Automaton;

void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw InputError("rank " + std::to_string(rank) + " outside 1.." + std::to_string(kMaxRank));
  }
}

void check_word(int rank, const FreeWord& w) {
  if (w.max_generator() > rank) {
    throw InputError("word " + w.to_string() + " uses a generator beyond rank " + std::to_string(rank));
  }
}

// Reduced words of the given rank: state 0 = start, 1 + i = "last letter had
// alphabet index i", final state = dead.
Automaton reduced_words(int rank) {
  Automaton u;
  u.alphabet = 2 * rank;
  const auto dead = static_cast<std::uint32_t>(u.alphabet + 1);
  const std::size_t states = u.alphabet + 2;
  u.next.assign(states * u.alphabet, dead);
  u.accepting.assign(states, 1);
  u.accepting[dead] = 0;
  for (int a = 0; a < u.alphabet; ++a) u.next[a] = 1 + a;
  for (int last = 0; last < u.alphabet; ++last) {
    for (int a = 0; a < u.alphabet; ++a) {
      if (a != (last ^ 1)) u.next[(1 + last) * u.alphabet + a] = 1 + a;
    }
  }
  return u;
}

template <typename AcceptFn>
Automaton product(const Automaton& x, const Automaton& y, AcceptFn accept) {
  Automaton out;
  out.alphabet = x.alphabet;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;
  auto id_of = [&](std::uint32_t s, std::uint32_t t) {
    auto [it, inserted] = ids.try_emplace({s, t}, static_cast<std::uint32_t>(queue.size()));
    if (inserted) queue.emplace_back(s, t);
    return it->second;
  };
  id_of(x.start, y.start);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [s, t] = queue[i];
    out.accepting.push_back(accept(x.accepting[s] != 0, y.accepting[t] != 0) ? 1 : 0);
    for (int a = 0; a < out.alphabet; ++a) out.next.push_back(id_of(x.step(s, a), y.step(t, a)));
  }
  return out;
}

// Moore partition refinement followed by breadth-first renumbering. The
// input must be complete; unreachable states are dropped.
Automaton minimize(const Automaton& dfa) {
  const int k = dfa.alphabet;
  const std::size_t n = dfa.accepting.size();
  std::vector<std::uint32_t> cls(n);
  for (std::size_t s = 0; s < n; ++s) cls[s] = dfa.accepting[s];
  std::size_t class_count = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signatures;
    std::vector<std::uint32_t> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[s]);
      for (int a = 0; a < k; ++a) sig.push_back(cls[dfa.step(static_cast<std::uint32_t>(s), a)]);
      refined[s] = signatures.try_emplace(std::move(sig), static_cast<std::uint32_t>(signatures.size())).first->second;
    }
    const bool stable = signatures.size() == class_count;
    class_count = signatures.size();
    cls = std::move(refined);
    if (stable) break;
  }

  // Representative state per class, then BFS renumbering from the start class.
  std::vector<std::uint32_t> rep(class_count, UINT32_MAX);
  for (std::size_t s = 0; s < n; ++s) {
    if (rep[cls[s]] == UINT32_MAX) rep[cls[s]] = static_cast<std::uint32_t>(s);
  }
  std::vector<std::uint32_t> order_of(class_count, UINT32_MAX);
  std::vector<std::uint32_t> bfs{cls[dfa.start]};
  order_of[cls[dfa.start]] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (int a = 0; a < k; ++a) {
      const auto c = cls[dfa.step(rep[bfs[i]], a)];
      if (order_of[c] == UINT32_MAX) {
        order_of[c] = static_cast<std::uint32_t>(bfs.size());
        bfs.push_back(c);
      }
    }
  }
  Automaton out;
  out.alphabet = k;
  out.start = 0;
  out.accepting.resize(bfs.size());
  out.next.resize(bfs.size() * k);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    const auto s = rep[bfs[i]];
    out.accepting[i] = dfa.accepting[s];
    for (int a = 0; a < k; ++a) out.next[i * k + a] = order_of[cls[dfa.step(s, a)]];
  }
  return out;
}

// Epsilon-free NFA; determinised by subset construction.
struct Nfa {
  int alphabet = 0;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> edges;  // per state: (letter, target)
  std::vector<std::uint8_t> accepting;

  std::uint32_t add_state(bool accept = false) {
    edges.emplace_back();
    accepting.push_back(accept ? 1 : 0);
    return static_cast<std::uint32_t>(edges.size() - 1);
  }
  // Appends a path spelling `w` from `from`; returns its endpoint.
  std::uint32_t add_path(std::uint32_t from, std::span<const Letter> w) {
    for (Letter l : w) {
      const auto to = add_state();
      edges[from].emplace_back(l.alphabet_index(), to);
      from = to;
    }
    return from;
  }
};

Automaton determinize(const Nfa& nfa) {
  Automaton out;
  out.alphabet = nfa.alphabet;
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> subsets;
  auto id_of = [&](std::vector<std::uint32_t> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    auto [it, inserted] = ids.try_emplace(subset, static_cast<std::uint32_t>(subsets.size()));
    if (inserted) subsets.push_back(std::move(subset));
    return it->second;
  };
  id_of({0});
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    std::vector<std::vector<std::uint32_t>> targets(nfa.alphabet);
    bool accept = false;
    for (auto s : subsets[i]) {
      accept = accept || nfa.accepting[s] != 0;
      for (auto [a, t] : nfa.edges[s]) targets[a].push_back(t);
    }
    out.accepting.push_back(accept ? 1 : 0);
    for (int a = 0; a < nfa.alphabet; ++a) out.next.push_back(id_of(std::move(targets[a])));
  }
  return out;
}

// One-letter left translation: result accepts u iff reduce(x u) is accepted.
Automaton translate_letter(const Automaton& dfa, Letter x) {
  const int k = dfa.alphabet;
  const int xi = x.alphabet_index();
  Automaton out = dfa;
  const auto fresh = static_cast<std::uint32_t>(dfa.accepting.size());
  const auto after_inverse = dfa.step(dfa.start, xi ^ 1);
  out.accepting.push_back(dfa.accepting[after_inverse]);
  for (int a = 0; a < k; ++a) out.next.push_back(a == xi ? dfa.start : dfa.step(after_inverse, a));
  out.start = fresh;
  return out;
}

void check_same_rank(const SymbolicSet& s, const SymbolicSet& t) {
  if (s.rank() != t.rank()) {
    throw InputError("rank mismatch: " + std::to_string(s.rank()) + " vs " + std::to_string(t.rank()));
  }
}

}  // namespace

SymbolicSet SymbolicSet::from_automaton(int rank, const Automaton& dfa) {
  check_rank(rank);
  if (dfa.alphabet != 2 * rank) throw InputError("automaton alphabet does not match rank");
  const Automaton restricted = product(dfa, reduced_words(rank), [](bool x, bool y) { return x && y; });
  Automaton m = minimize(restricted);
  SymbolicSet s;
  s.rank_ = rank;
  s.next_ = std::move(m.next);
  s.accepting_ = std::move(m.accepting);
  return s;
}

SymbolicSet::Automaton SymbolicSet::automaton() const {
  return Automaton{2 * rank_, 0, next_, accepting_};
}

SymbolicSet SymbolicSet::empty(int rank) {
  check_rank(rank);
  Nfa nfa{2 * rank, {}, {}};
  nfa.add_state();
  return from_automaton(rank, determinize(nfa));
}

SymbolicSet SymbolicSet::full(int rank) { return cone(rank, FreeWord()); }

SymbolicSet SymbolicSet::cone(int rank, const FreeWord& prefix) {
  check_rank(rank);
  check_word(rank, prefix);
  Nfa nfa{2 * rank, {}, {}};
  const auto end = nfa.add_path(nfa.add_state(), prefix.letters());
  nfa.accepting[end] = 1;
  for (int a = 0; a < nfa.alphabet; ++a) nfa.edges[end].emplace_back(a, end);
  return from_automaton(rank, determinize(nfa));
}

SymbolicSet SymbolicSet::singleton(int rank, const FreeWord& w) {
  check_rank(rank);
  check_word(rank, w);
  Nfa nfa{2 * rank, {}, {}};
  const auto end = nfa.add_path(nfa.add_state(), w.letters());
  nfa.accepting[end] = 1;
  return from_automaton(rank, determinize(nfa));
}

SymbolicSet SymbolicSet::positive_powers(int rank, const FreeWord& a) {
  check_rank(rank);
  check_word(rank, a);
  if (a.is_identity()) return singleton(rank, a);
  // a = u c u^-1 with c cyclically reduced, so a^n = u c^n u^-1 is reduced as written.
  const auto letters = a.letters();
  std::size_t t = 0;
  while (2 * (t + 1) < letters.size() && letters[t] == letters[letters.size() - 1 - t].inverse()) ++t;
  const auto u = letters.subspan(0, t);
  const auto c = letters.subspan(t, letters.size() - 2 * t);
  const auto u_inv = letters.subspan(letters.size() - t);

  Nfa nfa{2 * rank, {}, {}};
  const auto cycle_start = nfa.add_path(nfa.add_state(), u);
  const auto first = nfa.add_path(cycle_start, c.subspan(0, 1));
  const auto cycle_end = nfa.add_path(first, c.subspan(1));
  nfa.edges[cycle_end].emplace_back(c[0].alphabet_index(), first);
  const auto end = nfa.add_path(cycle_end, u_inv);
  nfa.accepting[end] = 1;
  return from_automaton(rank, determinize(nfa));
}

bool SymbolicSet::contains(const FreeWord& w) const {
  if (w.max_generator() > rank_) return false;
  const int k = 2 * rank_;
  std::uint32_t s = 0;
  for (Letter l : w.letters()) s = next_[s * k + l.alphabet_index()];
  return accepting_[s] != 0;
}

bool SymbolicSet::is_empty() const {
  return std::none_of(accepting_.begin(), accepting_.end(), [](auto a) { return a != 0; });
}

bool SymbolicSet::is_full() const { return *this == full(rank_); }

std::optional<FreeWord> SymbolicSet::least_member() const {
  // BFS in letter order reaches each state first along its shortlex-least word.
  const int k = 2 * rank_;
  const std::size_t n = accepting_.size();
  std::vector<std::uint32_t> parent(n, UINT32_MAX);
  std::vector<int> via(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    if (accepting_[s]) {
      std::vector<Letter> letters;
      for (auto q = s; q != 0; q = parent[q]) letters.push_back(Letter::from_alphabet_index(via[q]));
      std::reverse(letters.begin(), letters.end());
      return FreeWord::reduce(letters, rank_);
    }
    for (int a = 0; a < k; ++a) {
      const auto t = next_[s * k + a];
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = s;
        via[t] = a;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

std::vector<FreeWord> SymbolicSet::enumerate_up_to(std::size_t max_length) const {
  const int k = 2 * rank_;
  // States from which some accepting state is reachable; prunes dead branches.
  const std::size_t n = accepting_.size();
  std::vector<bool> live(n, false);
  for (std::size_t s = 0; s < n; ++s) live[s] = accepting_[s] != 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < n; ++s) {
      if (live[s]) continue;
      for (int a = 0; a < k; ++a) {
        if (live[next_[s * k + a]]) {
          live[s] = true;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<FreeWord> out;
  std::vector<Letter> path;
  auto visit = [&](auto&& self, std::uint32_t s) -> void {
    if (accepting_[s]) out.push_back(FreeWord::reduce(path, rank_));
    if (path.size() == max_length) return;
    for (int a = 0; a < k; ++a) {
      const auto t = next_[s * k + a];
      if (!live[t]) continue;
      path.push_back(Letter::from_alphabet_index(a));
      self(self, t);
      path.pop_back();
    }
  };
  if (live[0]) visit(visit, 0);
  std::sort(out.begin(), out.end());
  return out;
}

SymbolicSet combine(SetOp op, std::span<const SymbolicSet> operands) {
  switch (op) {
    case SetOp::Complement:
      if (operands.size() != 1) throw InputError("complement takes exactly one operand");
      return complement(operands[0]);
    case SetOp::Difference:
      if (operands.size() != 2) throw InputError("difference takes exactly two operands");
      return difference(operands[0], operands[1]);
    case SetOp::Union:
    case SetOp::Intersection: {
      if (operands.empty()) throw InputError("union/intersection needs at least one operand");
      SymbolicSet acc = operands[0];
      for (const auto& s : operands.subspan(1)) {
        acc = op == SetOp::Union ? set_union(acc, s) : intersection(acc, s);
      }
      return acc;
    }
  }
  throw InputError("unknown set operation");
}

SymbolicSet set_union(const SymbolicSet& s, const SymbolicSet& t) {
  check_same_rank(s, t);
  return SymbolicSet::from_automaton(s.rank(),
                                     product(s.automaton(), t.automaton(), [](bool x, bool y) { return x || y; }));
}

SymbolicSet intersection(const SymbolicSet& s, const SymbolicSet& t) {
  check_same_rank(s, t);
  return SymbolicSet::from_automaton(s.rank(),
                                     product(s.automaton(), t.automaton(), [](bool x, bool y) { return x && y; }));
}

SymbolicSet difference(const SymbolicSet& s, const SymbolicSet& t) {
  check_same_rank(s, t);
  return SymbolicSet::from_automaton(s.rank(),
                                     product(s.automaton(), t.automaton(), [](bool x, bool y) { return x && !y; }));
}

SymbolicSet complement(const SymbolicSet& s) {
  auto dfa = s.automaton();
  for (auto& a : dfa.accepting) a = a ? 0 : 1;
  return SymbolicSet::from_automaton(s.rank(), dfa);
}

SymbolicSet translate(const FreeWord& g, const SymbolicSet& s) {
  check_word(s.rank(), g);
  SymbolicSet result = s;
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
    result = SymbolicSet::from_automaton(s.rank(), translate_letter(result.automaton(), *it));
  }
  return result;
}

SetRelation compare(const SymbolicSet& s, const SymbolicSet& t) {
  check_same_rank(s, t);
  SetRelation r;
  r.equal = s == t;
  r.empty = s.is_empty();
  r.subset_witness = difference(s, t).least_member();
  r.subset = !r.subset_witness.has_value();
  r.overlap_witness = intersection(s, t).least_member();
  r.disjoint = !r.overlap_witness.has_value();
  return r;
}

}  // namespace tarski
