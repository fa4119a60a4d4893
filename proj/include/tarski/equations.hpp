#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "tarski/config.hpp"

namespace tarski {

/// Arbitrary-precision rational in lowest terms.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
/// Parses "p/q" or "p"; throws InputError otherwise (including q = 0).
Rational parse_rational(std::string_view text);

struct RowLabel {
  enum class Kind { Balance, Normalization };
  Kind kind = Kind::Balance;
  std::size_t coordinate = 0;  // j in 1..n
  std::uint32_t block = 0;     // i in 1..m

  std::string describe() const;
};

/// Configuration equations over the realized configurations:
/// for each (j, i): Σ{f_C : C_j = i} − Σ{f_C : C_0 = i} = 0, then Σ f_C = 1,
/// with f ≥ 0 implicit.
struct LinearSystem {
  std::vector<Configuration> variables;
  std::vector<RowLabel> labels;
  std::vector<std::vector<Rational>> coefficients;
  std::vector<Rational> rhs;

  std::size_t rows() const { return coefficients.size(); }
  std::size_t cols() const { return variables.size(); }
};

LinearSystem build_equations(const ConfigurationSet& cs);

struct FeasibilityResult {
  enum class Status { Feasible, Infeasible };
  Status status = Status::Feasible;
  std::vector<Rational> solution;     // Feasible: one value per variable
  std::vector<Rational> certificate;  // Infeasible: one integer multiplier per row, gcd 1
  std::size_t pivots = 0;

  bool feasible() const { return status == Status::Feasible; }
};

/// Phase-one simplex over exact rationals with Bland's rule. Deterministic.
/// A feasible answer is the average of vertex solutions chosen so that every
/// variable positive in some solution is positive in the answer.
FeasibilityResult solve_feasibility(const LinearSystem& system);

struct SolutionCheck {
  enum class Kind { Ok, LengthMismatch, Negative, RowViolated };
  Kind kind = Kind::Ok;
  std::size_t index = 0;  // variable (Negative) or row (RowViolated)
  std::string detail;

  bool ok() const { return kind == Kind::Ok; }
};

SolutionCheck verify_solution(const LinearSystem& system, std::span<const Rational> f);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Accepts iff y^T A <= 0 componentwise and y^T b > 0, which rules out any
/// f >= 0 with A f = b.
CertificateCheck verify_certificate(const LinearSystem& system, std::span<const Rational> multipliers);

/// f_C = |x_0(C)| / |X| on a finite universe.
std::vector<Rational> counting_solution(const ConfigurationSet& cs);

}  // namespace tarski
