#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace b3cryst {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over arbitrary-precision integers. All arithmetic is exact;
/// entries of representation images grow exponentially in word length, so
/// fixed-width integers are never used here.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> init);

  static IntMatrix identity(int d);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& rhs) const = default;

  IntMatrix transposed() const;

  bool is_identity() const;
  bool is_zero() const;

  /// Exact determinant (fraction-free Bareiss elimination). Square only.
  Int det() const;

  /// Exact inverse; requires det = +-1 so that the inverse is integral.
  IntMatrix inverse_unimodular() const;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  /// row i -= q * row k
  void row_axpy(int i, int k, const Int& q);
  /// col j -= q * col k
  void col_axpy(int j, int k, const Int& q);
  void negate_row(int i);

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> a_;
};

/// Square matrix over Z/m with entries kept reduced to [0, m). Products are
/// accumulated in 128-bit so any modulus below 2^63 is safe.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::uint64_t modulus, int dim);

  static ModMatrix identity(std::uint64_t modulus, int dim);
  /// Entry-wise reduction of an exact matrix (negative entries wrap into [0, m)).
  static ModMatrix reduce(const IntMatrix& m, std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  int dim() const { return dim_; }

  std::uint64_t& at(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  std::uint64_t at(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

  ModMatrix operator*(const ModMatrix& rhs) const;
  bool operator==(const ModMatrix& rhs) const = default;

  bool is_identity() const;

  /// Row-major entry sequence; lexicographic order on this is the canonical
  /// element order used for deduplication and coset representatives.
  const std::vector<std::uint64_t>& encoding() const { return a_; }
  bool operator<(const ModMatrix& rhs) const { return a_ < rhs.a_; }

  std::string to_string() const;

 private:
  std::uint64_t modulus_ = 0;
  int dim_ = 0;
  std::vector<std::uint64_t> a_;
};

}  // namespace b3cryst
