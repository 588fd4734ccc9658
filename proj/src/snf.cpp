#include "b3cryst/snf.hpp"

#include "b3cryst/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace b3cryst {

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  const int n = std::min(d.rows(), d.cols());
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

std::vector<Int> SmithForm::torsion_factors() const {
  std::vector<Int> out;
  for (const Int& x : diagonal())
    if (x > 1) out.push_back(x);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s;
  const int rows = a.rows(), cols = a.cols();
  s.u = IntMatrix::identity(rows);
  s.d = a;
  s.v = IntMatrix::identity(cols);
  IntMatrix& d = s.d;

  int t = 0;
  const int tmax = std::min(rows, cols);
  while (t < tmax) {
    // Pivot: smallest nonzero |entry| of the trailing block, scanning rows
    // before columns so ties break to the topmost, then leftmost entry.
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (d.at(i, j) == 0) continue;
        Int v = abs(d.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero

    d.swap_rows(t, pi);
    s.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    s.v.swap_cols(t, pj);

    bool dirty = false;
    for (int i = t + 1; i < rows; ++i) {
      if (d.at(i, t) == 0) continue;
      const Int q = d.at(i, t) / d.at(t, t);
      d.row_axpy(i, t, q);
      s.u.row_axpy(i, t, q);
      if (d.at(i, t) != 0) dirty = true;  // remainder left; re-pivot on it
    }
    for (int j = t + 1; j < cols; ++j) {
      if (d.at(t, j) == 0) continue;
      const Int q = d.at(t, j) / d.at(t, t);
      d.col_axpy(j, t, q);
      s.v.col_axpy(j, t, q);
      if (d.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;

    // Divisibility fix: fold a row containing a non-multiple into row t and
    // restart the pivot search on the smaller entry it produces.
    bool fixed = false;
    for (int i = t + 1; i < rows && !fixed; ++i)
      for (int j = t + 1; j < cols && !fixed; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          d.row_axpy(t, i, Int(-1));
          s.u.row_axpy(t, i, Int(-1));
          fixed = true;
        }
    if (fixed) continue;

    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  const int cols = a.cols();
  const int k = cols - s.rank;
  IntMatrix basis(cols, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < cols; ++i) basis.at(i, j) = s.v.at(i, s.rank + j);
  return basis;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw precondition_error("right-hand side length mismatch");
  const SmithForm s = smith_normal_form(a);
  // UAVy = Ub with x = Vy: solvable iff Ub is componentwise divisible by diag(D).
  std::vector<Int> ub(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    Int acc = 0;
    for (int j = 0; j < a.rows(); ++j) acc += s.u.at(i, j) * b[j];
    ub[i] = acc;
  }
  std::vector<Int> y(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const Int di = (i < std::min(a.rows(), a.cols())) ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    }
  }
  std::vector<Int> x(a.cols());
  for (int i = 0; i < a.cols(); ++i) {
    Int acc = 0;
    for (int j = 0; j < a.cols(); ++j) acc += s.v.at(i, j) * y[j];
    x[i] = acc;
  }
  return x;
}

}  // namespace b3cryst
