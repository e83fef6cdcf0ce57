#include "edgepoly/lp.hpp"

#include <utility>

#include "edgepoly/errors.hpp"

namespace edgepoly {

void RationalLP::add_row(std::vector<Rational> coeffs, Rational rhs) {
  if (coeffs.size() != num_vars_) throw ContractError("LP row has wrong width");
  rows_.push_back(std::move(coeffs));
  rhs_.push_back(std::move(rhs));
}

void RationalLP::set_objective(std::vector<Rational> costs) {
  if (costs.size() != num_vars_) throw ContractError("LP objective has wrong width");
  objective_ = std::move(costs);
}

namespace {

// Dense tableau. Columns: structural variables, then one artificial per row,
// then the right-hand side. The last row holds reduced costs, with the
// negated objective value in the rhs slot.
class Tableau {
 public:
  explicit Tableau(const RationalLP& lp)
      : m_(lp.num_rows()), n_(lp.num_vars()), width_(n_ + m_ + 1),
        cells_((m_ + 1) * width_), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sgn(lp.rhs()[i]) < 0;
      for (std::size_t j = 0; j < n_; ++j) {
        at(i, j) = flip ? Rational(-lp.rows()[i][j]) : lp.rows()[i][j];
      }
      at(i, n_ + i) = 1;
      at(i, width_ - 1) = flip ? Rational(-lp.rhs()[i]) : lp.rhs()[i];
      basis_[i] = n_ + i;
    }
    // Phase-one costs: sum of artificials, priced out against the basis.
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cost(j) -= at(i, j);
      cost(width_ - 1) -= at(i, width_ - 1);
    }
  }

  Rational& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  Rational& cost(std::size_t j) { return cells_[m_ * width_ + j]; }
  Rational objective_value() { return -cost(width_ - 1); }

  // Runs simplex iterations over columns [0, limit). Returns false when
  // unbounded. With stop_at_zero, returns as soon as the objective hits 0.
  bool optimize(std::size_t limit, bool stop_at_zero) {
    while (true) {
      if (stop_at_zero && sgn(cost(width_ - 1)) == 0) return true;
      std::size_t entering = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(cost(j)) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == limit) return true;
      std::size_t leaving = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(at(i, entering)) <= 0) continue;
        Rational ratio = at(i, width_ - 1) / at(i, entering);
        if (leaving == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == m_) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / at(r, c);
    for (std::size_t j = 0; j < width_; ++j)
      if (sgn(at(r, j)) != 0) at(r, j) *= inv;
    Rational factor;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      Rational& lead = cells_[i * width_ + c];
      if (sgn(lead) == 0) continue;
      factor = lead;
      for (std::size_t j = 0; j < width_; ++j) {
        const Rational& src = at(r, j);
        if (sgn(src) != 0) cells_[i * width_ + j] -= factor * src;
      }
    }
    basis_[r] = c;
  }

  // After a successful phase one, pivots artificials out of the basis where
  // possible and installs the phase-two costs.
  void start_phase_two(const std::vector<Rational>& costs) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(at(i, j)) != 0) {
          pivot(i, j);
          break;
        }
      }
      // A row left with an artificial basic is redundant; its artificial
      // stays at zero because phase two never lets it enter.
    }
    for (std::size_t j = 0; j < width_; ++j) cost(j) = 0;
    for (std::size_t j = 0; j < n_; ++j) cost(j) = costs[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t b = basis_[i];
      if (b >= n_ || sgn(costs[b]) == 0) continue;
      const Rational factor = costs[b];
      for (std::size_t j = 0; j < width_; ++j)
        if (sgn(at(i, j)) != 0) cost(j) -= factor * at(i, j);
    }
  }

  std::vector<Rational> point() {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = at(i, width_ - 1);
    return x;
  }

  std::size_t structural() const { return n_; }

 private:
  std::size_t m_, n_, width_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

bool is_feasible(const RationalLP& lp) {
  Tableau t(lp);
  t.optimize(lp.num_vars(), /*stop_at_zero=*/true);
  return sgn(t.objective_value()) == 0;
}

LpSolution solve(const RationalLP& lp) {
  Tableau t(lp);
  t.optimize(lp.num_vars(), /*stop_at_zero=*/true);
  LpSolution out;
  if (sgn(t.objective_value()) != 0) return out;
  if (!lp.objective()) {
    out.status = LpStatus::Optimal;
    out.point = t.point();
    out.value = 0;
    return out;
  }
  t.start_phase_two(*lp.objective());
  if (!t.optimize(lp.num_vars(), /*stop_at_zero=*/false)) {
    out.status = LpStatus::Unbounded;
    out.point = t.point();
    return out;
  }
  out.status = LpStatus::Optimal;
  out.point = t.point();
  out.value = 0;
  for (std::size_t j = 0; j < lp.num_vars(); ++j)
    out.value += (*lp.objective())[j] * out.point[j];
  return out;
}

}  // namespace edgepoly
