#include "edgepoly/lattice.hpp"

#include <utility>

namespace edgepoly {

namespace {

// Extended gcd step on two rows so that column col of `a` becomes gcd and
// of `b` becomes 0. The 2x2 transform is unimodular.
void combine(IntVector& a, IntVector& b, std::size_t col) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[col].get_mpz_t(),
             b[col].get_mpz_t());
  const Integer a_div = a[col] / g;
  const Integer b_div = b[col] / g;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Integer new_a = s * a[j] + t * b[j];
    Integer new_b = a_div * b[j] - b_div * a[j];
    a[j] = std::move(new_a);
    b[j] = std::move(new_b);
  }
}

// Echelonizes the first `width` columns of `rows` in place using unimodular
// row operations; returns the number of nonzero (pivot) rows, which come
// first. Extra columns beyond `width` ride along.
std::size_t echelonize(IntMatrix& rows, std::size_t width) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    std::size_t first = rows.size();
    for (std::size_t i = pivot_row; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) != 0) {
        first = i;
        break;
      }
    }
    if (first == rows.size()) continue;
    std::swap(rows[pivot_row], rows[first]);
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][col]) != 0) combine(rows[pivot_row], rows[i], col);
    }
    if (sgn(rows[pivot_row][col]) < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(),
                 rows[pivot_row][col].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        rows[i][j] -= q * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t width) {
  const std::size_t rank = echelonize(rows, width);
  rows.resize(rank);
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t width) {
  // Rows of [a^T | I]: after echelonizing the a^T block, the identity parts
  // of the zero rows form a basis of the kernel.
  const std::size_t m = a.size();
  IntMatrix aug(width, IntVector(m + width));
  for (std::size_t j = 0; j < width; ++j) {
    for (std::size_t i = 0; i < m; ++i) aug[j][i] = a[i][j];
    aug[j][m + j] = 1;
  }
  const std::size_t rank = echelonize(aug, m);
  IntMatrix kernel;
  for (std::size_t r = rank; r < width; ++r)
    kernel.emplace_back(aug[r].begin() + static_cast<std::ptrdiff_t>(m), aug[r].end());
  return hermite_normal_form(std::move(kernel), width);
}

IntMatrix saturation(const IntMatrix& rows, std::size_t width) {
  const IntMatrix normals = integer_kernel(rows, width);
  if (normals.empty()) {
    IntMatrix identity(width, IntVector(width));
    for (std::size_t i = 0; i < width; ++i) identity[i][i] = 1;
    return identity;
  }
  return integer_kernel(normals, width);
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b, std::size_t width) {
  return hermite_normal_form(a, width) == hermite_normal_form(b, width);
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (sgn(g) == 0 || g == 1) return v;
  for (auto& x : v) x /= g;
  return v;
}

std::size_t rational_rank(const IntMatrix& rows, std::size_t width) {
  IntMatrix copy = rows;
  return echelonize(copy, width);
}

}  // namespace edgepoly
