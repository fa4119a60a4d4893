#include "tarski/equations.hpp"

#include <algorithm>

#include "tarski/error.hpp"

namespace tarski {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const bool ok = slash == std::string_view::npos
                      ? valid_integer(text, true)
                      : valid_integer(text.substr(0, slash), true) && valid_integer(text.substr(slash + 1), false);
  if (!ok) throw InputError("malformed rational \"" + std::string(text) + "\"");
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational q;
  if (slash != std::string_view::npos && mpz_class(s.substr(s.find('/') + 1)) == 0) {
    throw InputError("zero denominator in \"" + std::string(text) + "\"");
  }
  q.set_str(s, 10);
  q.canonicalize();
  return q;
}

std::string RowLabel::describe() const {
  if (kind == Kind::Normalization) return "normalization";
  return "balance(j=" + std::to_string(coordinate) + ", i=" + std::to_string(block) + ")";
}

LinearSystem build_equations(const ConfigurationSet& cs) {
  LinearSystem sys;
  sys.variables = cs.configurations();
  const std::size_t n = cs.tuple_length();
  const std::size_t m = cs.block_count();
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::uint32_t i = 1; i <= m; ++i) {
      std::vector<Rational> row(sys.cols());
      for (std::size_t v = 0; v < sys.cols(); ++v) {
        const auto& c = sys.variables[v];
        row[v] = (c[j] == i ? 1 : 0) - (c[0] == i ? 1 : 0);
      }
      sys.labels.push_back({RowLabel::Kind::Balance, j, i});
      sys.coefficients.push_back(std::move(row));
      sys.rhs.emplace_back(0);
    }
  }
  sys.labels.push_back({RowLabel::Kind::Normalization, 0, 0});
  sys.coefficients.emplace_back(sys.cols(), Rational(1));
  sys.rhs.emplace_back(1);
  return sys;
}

namespace {

FeasibilityResult phase_one(const LinearSystem& system) {
  const std::size_t m = system.rows();
  const std::size_t nv = system.cols();
  const std::size_t width = nv + m;  // structural columns, then one artificial per row

  // Tableau rows [A | I | b] with b >= 0 (rows with negative rhs are negated).
  std::vector<int> sign(m, 1);
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width + 1));
  for (std::size_t r = 0; r < m; ++r) {
    if (system.rhs[r] < 0) sign[r] = -1;
    for (std::size_t c = 0; c < nv; ++c) t[r][c] = sign[r] * system.coefficients[r][c];
    t[r][nv + r] = 1;
    t[r][width] = sign[r] * system.rhs[r];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = nv + r;

  // Phase-one cost: 1 on artificials. Reduced costs d_c = cost_c − Σ_r cost_{basis[r]} t[r][c].
  auto cost = [&](std::size_t c) { return c >= nv ? 1 : 0; };
  std::vector<Rational> reduced(width + 1);
  auto recompute_reduced = [&] {
    for (std::size_t c = 0; c <= width; ++c) {
      Rational d = c < width ? Rational(cost(c)) : Rational(0);
      for (std::size_t r = 0; r < m; ++r) {
        if (cost(basis[r]) != 0) d -= t[r][c];
      }
      reduced[c] = d;
    }
  };
  recompute_reduced();

  FeasibilityResult result;
  for (;;) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = width;
    for (std::size_t c = 0; c < width; ++c) {
      if (reduced[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;
    // Ratio test; ties broken by the lowest basic variable index.
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][width] / t[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    // Phase one is bounded below by 0, so a ratio always exists.
    if (leave == m) throw std::logic_error("phase-one simplex found an unbounded direction");

    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational factor = t[r][enter];
      for (std::size_t c = 0; c <= width; ++c) t[r][c] -= factor * t[leave][c];
    }
    const Rational rfactor = reduced[enter];
    for (std::size_t c = 0; c <= width; ++c) reduced[c] -= rfactor * t[leave][c];
    basis[leave] = enter;
    ++result.pivots;
  }

  Rational objective = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] >= nv) objective += t[r][width];
  }

  if (objective == 0) {
    result.status = FeasibilityResult::Status::Feasible;
    result.solution.assign(nv, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < nv) result.solution[basis[r]] = t[r][width];
    }
    return result;
  }

  // Dual values y_r = 1 − (reduced cost of artificial r); optimality gives
  // y^T A <= 0 and y^T b = objective > 0. Undo the row negations.
  result.status = FeasibilityResult::Status::Infeasible;
  std::vector<Rational> y(m);
  for (std::size_t r = 0; r < m; ++r) y[r] = sign[r] * (1 - reduced[nv + r]);

  // Scale to coprime integers; positive scaling keeps the constant positive.
  mpz_class lcm = 1;
  for (const auto& v : y) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& v : y) {
    const mpz_class num = v.get_num() * (lcm / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  for (auto& v : y) {
    v = Rational(mpz_class(v.get_num() * (lcm / v.get_den()) / g));
  }
  result.certificate = std::move(y);
  return result;
}

}  // namespace

FeasibilityResult solve_feasibility(const LinearSystem& system) {
  FeasibilityResult result = phase_one(system);
  if (!result.feasible() || system.rows() == 0) return result;
  const bool homogeneous_balance =
      system.labels.back().kind == RowLabel::Kind::Normalization &&
      std::all_of(system.rhs.begin(), system.rhs.end() - 1, [](const Rational& q) { return q == 0; });
  if (!homogeneous_balance) return result;

  // A vertex can leave variables at zero that some solution makes positive.
  // For each such f_j, solve the balance rows with f_j = 1 in place of the
  // normalization, rescale, and average everything found. The average is a
  // solution whose support is as large as possible.
  const std::size_t nv = system.cols();
  std::vector<bool> covered(nv);
  std::vector<std::vector<Rational>> found{result.solution};
  for (std::size_t c = 0; c < nv; ++c) covered[c] = result.solution[c] > 0;
  LinearSystem probe = system;
  for (std::size_t j = 0; j < nv; ++j) {
    if (covered[j]) continue;
    std::fill(probe.coefficients.back().begin(), probe.coefficients.back().end(), Rational(0));
    probe.coefficients.back()[j] = 1;
    const auto p = phase_one(probe);
    result.pivots += p.pivots;
    if (!p.feasible()) continue;
    Rational total = 0;
    for (const auto& v : p.solution) total += v;
    std::vector<Rational> g = p.solution;
    for (std::size_t c = 0; c < nv; ++c) {
      g[c] /= total;
      if (g[c] > 0) covered[c] = true;
    }
    found.push_back(std::move(g));
  }
  if (found.size() == 1) return result;
  std::vector<Rational> average(nv, Rational(0));
  for (const auto& g : found) {
    for (std::size_t c = 0; c < nv; ++c) average[c] += g[c];
  }
  for (auto& v : average) v /= static_cast<long>(found.size());
  if (verify_solution(system, average).ok()) result.solution = std::move(average);
  return result;
}

SolutionCheck verify_solution(const LinearSystem& system, std::span<const Rational> f) {
  if (f.size() != system.cols()) {
    return {SolutionCheck::Kind::LengthMismatch, 0,
            "expected " + std::to_string(system.cols()) + " values, got " + std::to_string(f.size())};
  }
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] < 0) {
      return {SolutionCheck::Kind::Negative, v,
              "nonnegativity: f" + to_string(system.variables[v]) + " = " + to_string(f[v])};
    }
  }
  for (std::size_t r = 0; r < system.rows(); ++r) {
    Rational lhs = 0;
    for (std::size_t v = 0; v < f.size(); ++v) lhs += system.coefficients[r][v] * f[v];
    if (lhs != system.rhs[r]) {
      return {SolutionCheck::Kind::RowViolated, r,
              system.labels[r].describe() + ": " + to_string(lhs) + " != " + to_string(system.rhs[r])};
    }
  }
  return {};
}

CertificateCheck verify_certificate(const LinearSystem& system, std::span<const Rational> multipliers) {
  if (multipliers.size() != system.rows()) {
    return {false, "expected " + std::to_string(system.rows()) + " multipliers, got " +
                       std::to_string(multipliers.size())};
  }
  for (std::size_t v = 0; v < system.cols(); ++v) {
    Rational combined = 0;
    for (std::size_t r = 0; r < system.rows(); ++r) combined += multipliers[r] * system.coefficients[r][v];
    if (combined > 0) {
      return {false, "combined coefficient of f" + to_string(system.variables[v]) + " is " + to_string(combined) +
                         " > 0"};
    }
  }
  Rational constant = 0;
  for (std::size_t r = 0; r < system.rows(); ++r) constant += multipliers[r] * system.rhs[r];
  if (constant <= 0) return {false, "combined constant " + to_string(constant) + " is not positive"};
  return {true, {}};
}

std::vector<Rational> counting_solution(const ConfigurationSet& cs) {
  if (!cs.action().is_finite()) throw InputError("counting solutions need a finite universe");
  const auto total = static_cast<unsigned long>(cs.action().degree());
  std::vector<Rational> f;
  f.reserve(cs.size());
  for (const auto& cell : cs.base_cells()) {
    f.emplace_back(static_cast<unsigned long>(std::get<FiniteSet>(cell).count()), total);
    f.back().canonicalize();
  }
  return f;
}

}  // namespace tarski
