#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

using IntVector = std::vector<Integer>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  bool is_symmetric() const;
  // Rows listed in `keep`, in that order.
  IntMatrix select_rows(std::span<const std::size_t> keep) const;
  IntVector column(std::size_t j) const;
  IntVector apply(std::span<const Integer> x) const;  // M x

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string str() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Fraction-free (Bareiss) determinant. Requires a square matrix.
Integer determinant(const IntMatrix& m);

// left * m * right = diag(factors), left/right unimodular, factors nonnegative,
// each dividing the next, zeros last. factors has min(rows, cols) entries.
struct SmithForm {
  IntVector factors;
  IntMatrix left;
  IntMatrix right;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Factors different from 1: the torsion orders followed by zeros (free part).
// For a square presentation matrix this describes the cokernel.
IntVector cokernel_invariants(const IntMatrix& m);

// Integer lattice spanned by the columns of a matrix, with a cached Smith form
// for repeated membership queries.
class ColumnLattice {
 public:
  explicit ColumnLattice(const IntMatrix& generators);
  std::size_t ambient_dimension() const { return snf_.left.rows(); }
  // Some integral x with generators * x = b, if one exists.
  std::optional<IntVector> solve(std::span<const Integer> b) const;
  bool contains(std::span<const Integer> b) const { return solve(b).has_value(); }

 private:
  IntMatrix generators_;
  SmithForm snf_;
};

// Unique rational solution of m x = b. Throws DomainError if m is singular.
std::vector<Rational> solve_rational(const IntMatrix& m, std::span<const Integer> b);
// x^T m^{-1} x
Rational inverse_quadratic_form(const IntMatrix& m, std::span<const Integer> x);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};

// Sylvester inertia of a symmetric matrix by congruence diagonalization over Q.
Inertia inertia(const IntMatrix& symmetric);

}  // namespace seifert
