#pragma once

#include <cstddef>
#include <vector>

#include "edgepoly/lp.hpp"

namespace edgepoly {

/// Integer matrix as a list of rows. A lattice is represented by a list of
/// generating rows.
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite normal form of the lattice spanned by the rows: zero
/// rows dropped, positive pivots, entries above each pivot reduced into
/// [0, pivot). Unique per lattice, so two generator sets span the same
/// lattice iff their normal forms are equal.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t width);

/// Basis of {x in Z^width : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t width);

/// Basis of Z^width intersected with the rational span of the rows.
IntMatrix saturation(const IntMatrix& rows, std::size_t width);

bool same_lattice(const IntMatrix& a, const IntMatrix& b, std::size_t width);

/// Divides out the gcd of the entries; the zero vector is returned as is.
IntVector primitive(IntVector v);

/// Rank over the rationals.
std::size_t rational_rank(const IntMatrix& rows, std::size_t width);

}  // namespace edgepoly
