#pragma once

#include "b3cryst/matrix.hpp"

#include <optional>
#include <vector>

namespace b3cryst {

/// Smith normal form U*A*V = D with U, V unimodular and the diagonal of D a
/// divisibility chain d1 | d2 | ... (nonnegative, trailing zeros).
struct SmithForm {
  IntMatrix u;  // rows x rows
  IntMatrix d;  // rows x cols, diagonal
  IntMatrix v;  // cols x cols
  int rank = 0;
  std::vector<Int> diagonal() const;
  /// Invariant factors > 1 (the conventional presentation drops units).
  std::vector<Int> torsion_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Integer basis of {x : A x = 0}, as matrix columns. The basis spans the
/// saturated kernel lattice, i.e. every integer solution is an integer
/// combination of the columns.
IntMatrix integer_kernel(const IntMatrix& a);

/// One integer solution of A x = b, if any exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

}  // namespace b3cryst
