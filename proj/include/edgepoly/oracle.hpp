#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "edgepoly/lattice.hpp"
#include "edgepoly/lp.hpp"
#include "edgepoly/point.hpp"

namespace edgepoly {

// Geometric ground truth for conv(points), computed from coordinates alone
// with exact rational LPs and integer normal forms. Nothing here knows about
// graphs.

inline constexpr std::size_t kOracleMaxAmbientDim = 12;
inline constexpr long kOracleMaxDilation = 8;

/// points[idx] is not in the convex hull of the other points.
bool oracle_is_vertex(std::span<const LatticePoint> points, std::size_t idx);

/// conv{points[i], points[j]} is an edge of the hull. Throws ContractError
/// unless both are vertices.
bool oracle_is_edge(std::span<const LatticePoint> points, std::size_t i, std::size_t j);

/// Dimension of the affine hull.
int oracle_dim(std::span<const LatticePoint> points);

/// Vertex/edge structure of the hull, computed once.
struct HullSkeleton {
  int dim = 0;
  std::vector<bool> is_vertex;                // per input point
  std::vector<std::vector<std::size_t>> neighbors;  // per vertex, sorted
  std::size_t num_vertices() const;
  bool is_simplex() const { return num_vertices() == static_cast<std::size_t>(dim) + 1; }
  bool is_simple() const;
};
HullSkeleton hull_skeleton(std::span<const LatticePoint> points);

bool oracle_is_simple(std::span<const LatticePoint> points);

/// Rows are the primitive edge directions at vertex points[v].
struct EdgeDirectionMatrix {
  IntMatrix rows;
};
EdgeDirectionMatrix edge_directions(std::span<const LatticePoint> points,
                                    const HullSkeleton& skeleton, std::size_t v);

/// Lattice the edge directions at a vertex v must form a basis of.
enum class SmoothLattice {
  /// Z^d intersected with the linear span of (points - v).
  Saturated,
  /// The lattice generated by (points - v) themselves. Coincides with
  /// Saturated whenever the points generate Z^d within their affine span.
  Generated,
};

/// At every vertex the primitive edge directions form a basis of the chosen
/// lattice. Throws ContractError if the hull is not simple.
bool oracle_is_smooth(std::span<const LatticePoint> points,
                      SmoothLattice lattice = SmoothLattice::Saturated);
bool oracle_is_smooth(std::span<const LatticePoint> points, const HullSkeleton& skeleton,
                      SmoothLattice lattice = SmoothLattice::Saturated);

/// c.x = value on the affine hull, c.x >= value on the polytope.
struct AffineConstraint {
  IntVector c;
  Integer value;
};
struct HalfSpaces {
  std::vector<AffineConstraint> equations;
  std::vector<AffineConstraint> inequalities;  // one per facet
};
/// Facet description of the hull by brute force over affinely independent
/// vertex subsets.
HalfSpaces hull_inequalities(std::span<const LatticePoint> points);

/// Number of integer points in the m-th dilate of the hull. All points must
/// share one positive coordinate sum s; candidates are the nonnegative
/// vectors of coordinate sum s*m, tested against hull_inequalities.
Integer count_lattice_points(std::span<const LatticePoint> points, long m);
/// Same, reusing a facet description of the same points across dilations.
Integer count_lattice_points(std::span<const LatticePoint> points, const HalfSpaces& h, long m);
/// Same count, testing each candidate by exact LP membership instead. Slow;
/// kept as a reference for the facet-based count.
Integer count_lattice_points_lp(std::span<const LatticePoint> points, long m);

}  // namespace edgepoly
