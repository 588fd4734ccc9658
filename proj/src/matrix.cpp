#include "b3cryst/matrix.hpp"

#include "b3cryst/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <utility>

namespace b3cryst {

using Rational = boost::multiprecision::cpp_rational;

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> init) {
  rows_ = static_cast<int>(init.size());
  cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : init) {
    if (static_cast<int>(row.size()) != cols_)
      throw precondition_error("ragged matrix initializer");
    for (const auto& x : row) a_.push_back(x);
  }
}

IntMatrix IntMatrix::identity(int d) {
  IntMatrix m(d, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw precondition_error("matrix dimension mismatch in product");
  IntMatrix r(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw precondition_error("matrix dimension mismatch in difference");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - rhs.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw precondition_error("determinant of non-square matrix");
  const int d = rows_;
  if (d == 0) return 1;
  // Bareiss fraction-free elimination: all divisions below are exact.
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < d; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(d - 1, d - 1) : -m.at(d - 1, d - 1);
}

IntMatrix IntMatrix::inverse_unimodular() const {
  if (rows_ != cols_) throw precondition_error("inverse of non-square matrix");
  const int d = rows_;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(2 * d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m[i][j] = Rational(at(i, j));
    m[i][d + i] = 1;
  }
  for (int c = 0; c < d; ++c) {
    int p = -1;
    for (int r = c; r < d; ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) throw precondition_error("matrix is singular");
    std::swap(m[c], m[p]);
    const Rational pivot = m[c][c];
    for (int j = 0; j < 2 * d; ++j) m[c][j] /= pivot;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (int j = 0; j < 2 * d; ++j) m[r][j] -= f * m[c][j];
    }
  }
  IntMatrix inv(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Rational& x = m[i][d + j];
      if (denominator(x) != 1)
        throw precondition_error("matrix inverse is not integral (determinant not +-1)");
      inv.at(i, j) = numerator(x);
    }
  return inv;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::row_axpy(int i, int k, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < cols_; ++c) at(i, c) -= q * at(k, c);
}

void IntMatrix::col_axpy(int j, int k, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < rows_; ++r) at(r, j) -= q * at(r, k);
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]";
  }
  return os.str();
}

ModMatrix::ModMatrix(std::uint64_t modulus, int dim)
    : modulus_(modulus), dim_(dim), a_(static_cast<size_t>(dim) * dim) {
  if (modulus < 2) throw precondition_error("modulus must be >= 2");
}

ModMatrix ModMatrix::identity(std::uint64_t modulus, int dim) {
  ModMatrix m(modulus, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1 % modulus;
  return m;
}

ModMatrix ModMatrix::reduce(const IntMatrix& m, std::uint64_t modulus) {
  if (m.rows() != m.cols()) throw precondition_error("residue matrices are square");
  ModMatrix r(modulus, m.rows());
  const Int mod(modulus);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Int v = m.at(i, j) % mod;
      if (v < 0) v += mod;
      r.at(i, j) = v.convert_to<std::uint64_t>();
    }
  return r;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  if (modulus_ != rhs.modulus_ || dim_ != rhs.dim_)
    throw precondition_error("residue matrix mismatch in product");
  ModMatrix r(modulus_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      unsigned __int128 acc = 0;
      for (int k = 0; k < dim_; ++k)
        acc += static_cast<unsigned __int128>(at(i, k)) * rhs.at(k, j);
      r.at(i, j) = static_cast<std::uint64_t>(acc % modulus_);
    }
  return r;
}

bool ModMatrix::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (at(i, j) != (i == j ? 1 % modulus_ : 0)) return false;
  return true;
}

std::string ModMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < dim_; ++i) {
    os << (i ? "\n[" : "[");
    for (int j = 0; j < dim_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]";
  }
  return os.str();
}

}  // namespace b3cryst
