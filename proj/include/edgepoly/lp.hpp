#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace edgepoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Linear program in equality form: minimize c.x subject to A x = b, x >= 0,
/// over exact rationals. Without an objective it is a feasibility problem.
class RationalLP {
 public:
  explicit RationalLP(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_rows() const { return rows_.size(); }

  void add_row(std::vector<Rational> coeffs, Rational rhs);
  void set_objective(std::vector<Rational> costs);

  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<Rational>& rhs() const { return rhs_; }
  const std::optional<std::vector<Rational>>& objective() const { return objective_; }

 private:
  std::size_t num_vars_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::optional<std::vector<Rational>> objective_;
};

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> point;  // empty unless a feasible point was found
  Rational value;               // objective at point (0 for feasibility)
};

/// Two-phase primal simplex with Bland's rule.
LpSolution solve(const RationalLP& lp);

/// Phase one only; stops as soon as a feasible basis appears.
bool is_feasible(const RationalLP& lp);

}  // namespace edgepoly
