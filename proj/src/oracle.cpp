#include "edgepoly/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "edgepoly/errors.hpp"

namespace edgepoly {

namespace {

std::size_t ambient_dim(std::span<const LatticePoint> points) {
  if (points.empty()) throw ContractError("oracle needs at least one point");
  const std::size_t d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d) throw ContractError("points have mixed dimensions");
  if (d > kOracleMaxAmbientDim) {
    throw SizeError("oracle limited to ambient dimension " +
                    std::to_string(kOracleMaxAmbientDim) + ", got " + std::to_string(d));
  }
  return d;
}

// w lies on the closed segment [u, v].
bool on_segment(const LatticePoint& u, const LatticePoint& v, const LatticePoint& w) {
  // w - u = t (v - u) with 0 <= t <= 1; compare via cross products.
  long num = 0, den = 0;  // t = num / den, fixed by the first nonzero coord
  for (std::size_t k = 0; k < u.dim(); ++k) {
    const long a = w[k] - u[k];
    const long b = v[k] - u[k];
    if (b == 0) {
      if (a != 0) return false;
      continue;
    }
    if (den == 0) {
      num = a;
      den = b;
    } else if (a * den != num * b) {
      return false;
    }
  }
  if (den == 0) return true;  // u == v == w
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return num >= 0 && num <= den;
}

}  // namespace

bool oracle_is_vertex(std::span<const LatticePoint> points, std::size_t idx) {
  const std::size_t d = ambient_dim(points);
  if (idx >= points.size()) throw ContractError("point index out of range");
  const std::size_t n = points.size();
  if (n == 1) return true;
  // lambda >= 0 over the other points, sum lambda = 1, sum lambda p = target.
  RationalLP lp(n - 1);
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> row;
    row.reserve(n - 1);
    for (std::size_t w = 0; w < n; ++w)
      if (w != idx) row.emplace_back(points[w][k]);
    lp.add_row(std::move(row), points[idx][k]);
  }
  lp.add_row(std::vector<Rational>(n - 1, Rational(1)), 1);
  return !is_feasible(lp);
}

namespace {

bool edge_lp(std::span<const LatticePoint> points, std::size_t i, std::size_t j,
             std::size_t d) {
  const LatticePoint& u = points[i];
  const LatticePoint& v = points[j];
  std::vector<std::size_t> others;
  for (std::size_t w = 0; w < points.size(); ++w) {
    if (w == i || w == j) continue;
    if (!on_segment(u, v, points[w])) others.push_back(w);
  }
  // Variables: c+ (d), c- (d), one surplus per other point.
  // c.(u - v) = 0 and c.(u - w) - s_w = 1, i.e. c.u >= c.w + 1.
  const std::size_t cols = 2 * d + others.size();
  RationalLP lp(cols);
  {
    std::vector<Rational> row(cols);
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = u[k] - v[k];
      row[d + k] = v[k] - u[k];
    }
    lp.add_row(std::move(row), 0);
  }
  for (std::size_t r = 0; r < others.size(); ++r) {
    const LatticePoint& w = points[others[r]];
    std::vector<Rational> row(cols);
    for (std::size_t k = 0; k < d; ++k) {
      row[k] = u[k] - w[k];
      row[d + k] = w[k] - u[k];
    }
    row[2 * d + r] = -1;
    lp.add_row(std::move(row), 1);
  }
  return is_feasible(lp);
}

}  // namespace

bool oracle_is_edge(std::span<const LatticePoint> points, std::size_t i, std::size_t j) {
  const std::size_t d = ambient_dim(points);
  if (i >= points.size() || j >= points.size() || i == j) {
    throw ContractError("oracle_is_edge needs two distinct point indices");
  }
  if (!oracle_is_vertex(points, i) || !oracle_is_vertex(points, j)) {
    throw ContractError("oracle_is_edge called on a non-vertex point");
  }
  return edge_lp(points, i, j, d);
}

int oracle_dim(std::span<const LatticePoint> points) {
  const std::size_t d = ambient_dim(points);
  IntMatrix diffs;
  for (std::size_t w = 1; w < points.size(); ++w) {
    IntVector row(d);
    for (std::size_t k = 0; k < d; ++k) row[k] = points[w][k] - points[0][k];
    diffs.push_back(std::move(row));
  }
  return static_cast<int>(rational_rank(diffs, d));
}

std::size_t HullSkeleton::num_vertices() const {
  return static_cast<std::size_t>(std::count(is_vertex.begin(), is_vertex.end(), true));
}

bool HullSkeleton::is_simple() const {
  for (std::size_t v = 0; v < is_vertex.size(); ++v) {
    if (is_vertex[v] && neighbors[v].size() != static_cast<std::size_t>(dim)) return false;
  }
  return true;
}

HullSkeleton hull_skeleton(std::span<const LatticePoint> points) {
  const std::size_t d = ambient_dim(points);
  HullSkeleton s;
  s.dim = oracle_dim(points);
  s.is_vertex.resize(points.size());
  s.neighbors.resize(points.size());
  for (std::size_t v = 0; v < points.size(); ++v) s.is_vertex[v] = oracle_is_vertex(points, v);
  for (std::size_t a = 0; a < points.size(); ++a) {
    if (!s.is_vertex[a]) continue;
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (!s.is_vertex[b]) continue;
      if (edge_lp(points, a, b, d)) {
        s.neighbors[a].push_back(b);
        s.neighbors[b].push_back(a);
      }
    }
  }
  for (auto& list : s.neighbors) std::sort(list.begin(), list.end());
  return s;
}

bool oracle_is_simple(std::span<const LatticePoint> points) {
  return hull_skeleton(points).is_simple();
}

EdgeDirectionMatrix edge_directions(std::span<const LatticePoint> points,
                                    const HullSkeleton& skeleton, std::size_t v) {
  if (v >= points.size() || !skeleton.is_vertex[v]) {
    throw ContractError("edge_directions needs a vertex");
  }
  const std::size_t d = points[v].dim();
  EdgeDirectionMatrix m;
  for (std::size_t w : skeleton.neighbors[v]) {
    IntVector dir(d);
    for (std::size_t k = 0; k < d; ++k) dir[k] = points[w][k] - points[v][k];
    m.rows.push_back(primitive(std::move(dir)));
  }
  return m;
}

bool oracle_is_smooth(std::span<const LatticePoint> points, SmoothLattice lattice) {
  return oracle_is_smooth(points, hull_skeleton(points), lattice);
}

bool oracle_is_smooth(std::span<const LatticePoint> points, const HullSkeleton& skeleton,
                      SmoothLattice lattice) {
  const std::size_t d = ambient_dim(points);
  if (!skeleton.is_simple()) throw ContractError("smoothness is defined for simple polytopes");
  for (std::size_t v = 0; v < points.size(); ++v) {
    if (!skeleton.is_vertex[v]) continue;
    IntMatrix span_rows;
    for (const auto& p : points) {
      IntVector row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = p[k] - points[v][k];
      span_rows.push_back(std::move(row));
    }
    const IntMatrix ambient = lattice == SmoothLattice::Saturated
                                  ? saturation(span_rows, d)
                                  : hermite_normal_form(std::move(span_rows), d);
    const EdgeDirectionMatrix dirs = edge_directions(points, skeleton, v);
    if (!same_lattice(dirs.rows, ambient, d)) return false;
  }
  return true;
}

namespace {

void check_level_points(std::span<const LatticePoint> points, long m, std::size_t d) {
  if (m < 0) throw ContractError("dilation factor must be nonnegative");
  if (m > kOracleMaxDilation) {
    throw SizeError("oracle limited to dilation " + std::to_string(kOracleMaxDilation) +
                    ", got " + std::to_string(m));
  }
  long level = 0;
  for (std::size_t k = 0; k < d; ++k) level += points.front()[k];
  for (const auto& p : points) {
    long s = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (p[k] < 0) throw ContractError("count_lattice_points needs nonnegative points");
      s += p[k];
    }
    if (s != level || s <= 0) {
      throw ContractError("count_lattice_points needs points on one level x_1+...+x_d = s > 0");
    }
  }
}

// Calls visit(x) for every nonnegative x with coordinate sum `total` and
// support inside the coordinates some point uses.
template <typename Visit>
void for_each_candidate(std::span<const LatticePoint> points, std::size_t d, long total,
                        Visit&& visit) {
  std::vector<bool> covered(d, false);
  for (const auto& p : points)
    for (std::size_t k = 0; k < d; ++k)
      if (p[k] > 0) covered[k] = true;
  std::vector<int> x(d, 0);
  std::function<void(std::size_t, long)> place = [&](std::size_t k, long remaining) {
    if (k + 1 == d) {
      if (remaining > 0 && !covered[k]) return;
      x[k] = static_cast<int>(remaining);
      visit(x);
      return;
    }
    for (long value = 0; value <= remaining; ++value) {
      if (value > 0 && !covered[k]) break;
      x[k] = static_cast<int>(value);
      place(k + 1, remaining - value);
    }
    x[k] = 0;
  };
  place(0, total);
}

long coordinate_sum(const LatticePoint& p) {
  long s = 0;
  for (std::size_t k = 0; k < p.dim(); ++k) s += p[k];
  return s;
}

Integer dot(const IntVector& c, const std::vector<int>& x) {
  Integer s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += c[k] * x[k];
  return s;
}

Integer dot(const IntVector& c, const LatticePoint& p) {
  Integer s = 0;
  for (std::size_t k = 0; k < p.dim(); ++k) s += c[k] * p[k];
  return s;
}

}  // namespace

HalfSpaces hull_inequalities(std::span<const LatticePoint> points) {
  const std::size_t d = ambient_dim(points);
  HalfSpaces out;
  IntMatrix diffs;
  for (const auto& p : points) {
    IntVector row(d);
    for (std::size_t k = 0; k < d; ++k) row[k] = p[k] - points.front()[k];
    diffs.push_back(std::move(row));
  }
  for (IntVector& y : integer_kernel(diffs, d)) {
    Integer value = dot(y, points.front());
    out.equations.push_back({std::move(y), std::move(value)});
  }
  const int dim = oracle_dim(points);
  if (dim == 0) return out;

  std::vector<std::size_t> vertices;
  for (std::size_t k = 0; k < points.size(); ++k)
    if (oracle_is_vertex(points, k)) vertices.push_back(k);

  // Every facet passes through dim affinely independent vertices; try each
  // such subset and keep the hyperplanes with all vertices on one side.
  std::set<std::pair<IntVector, Integer>> seen;
  std::vector<std::size_t> pick(static_cast<std::size_t>(dim));
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t slot, std::size_t from) {
    if (slot == pick.size()) {
      const LatticePoint& base = points[vertices[pick[0]]];
      IntMatrix rows;
      for (std::size_t t = 1; t < pick.size(); ++t) {
        IntVector row(d);
        for (std::size_t k = 0; k < d; ++k) row[k] = points[vertices[pick[t]]][k] - base[k];
        rows.push_back(std::move(row));
      }
      if (rational_rank(rows, d) + 1 != pick.size()) return;
      for (IntVector c : integer_kernel(rows, d)) {
        const Integer b = dot(c, base);
        bool above = false, below = false;
        for (std::size_t v : vertices) {
          const Integer value = dot(c, points[v]);
          above = above || value > b;
          below = below || value < b;
        }
        if (above == below) continue;  // constant on P, or cuts through it
        if (below) {
          for (auto& entry : c) entry = -entry;
          seen.insert({std::move(c), -b});
        } else {
          seen.insert({std::move(c), b});
        }
        break;
      }
      return;
    }
    for (std::size_t k = from; k + (pick.size() - slot) <= vertices.size(); ++k) {
      pick[slot] = k;
      choose(slot + 1, k + 1);
    }
  };
  choose(0, 0);
  for (auto& [c, b] : seen) out.inequalities.push_back({c, b});
  return out;
}

Integer count_lattice_points(std::span<const LatticePoint> points, long m) {
  const std::size_t d = ambient_dim(points);
  check_level_points(points, m, d);
  if (m == 0) return 1;
  return count_lattice_points(points, hull_inequalities(points), m);
}

Integer count_lattice_points(std::span<const LatticePoint> points, const HalfSpaces& h, long m) {
  const std::size_t d = ambient_dim(points);
  check_level_points(points, m, d);
  if (m == 0) return 1;
  Integer count = 0;
  for_each_candidate(points, d, coordinate_sum(points.front()) * m, [&](const std::vector<int>& x) {
    for (const auto& [c, b] : h.equations)
      if (dot(c, x) != b * m) return;
    for (const auto& [c, b] : h.inequalities)
      if (dot(c, x) < b * m) return;
    ++count;
  });
  return count;
}

Integer count_lattice_points_lp(std::span<const LatticePoint> points, long m) {
  const std::size_t d = ambient_dim(points);
  check_level_points(points, m, d);
  if (m == 0) return 1;
  const std::size_t n = points.size();
  Integer count = 0;
  for_each_candidate(points, d, coordinate_sum(points.front()) * m, [&](const std::vector<int>& x) {
    RationalLP lp(n);
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Rational> row(n);
      for (std::size_t w = 0; w < n; ++w) row[w] = points[w][k];
      lp.add_row(std::move(row), x[k]);
    }
    lp.add_row(std::vector<Rational>(n, Rational(1)), m);
    if (is_feasible(lp)) ++count;
  });
  return count;
}

}  // namespace edgepoly
