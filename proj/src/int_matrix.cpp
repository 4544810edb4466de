#include "seifert/int_matrix.hpp"

#include <algorithm>

#include "seifert/error.hpp"

namespace seifert {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> keep) const {
  IntMatrix out(keep.size(), cols_);
  for (std::size_t r = 0; r < keep.size(); ++r) {
    for (std::size_t j = 0; j < cols_; ++j) out(r, j) = (*this)(keep[r], j);
  }
  return out;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw DomainError("dimension mismatch in matrix-vector product");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::string IntMatrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? " " : "") + (*this)(i, j).get_str();
  }
  return out + "]";
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("dimension mismatch in matrix product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t diag = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < diag; ++t) {
    bool exhausted = false;
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) {
        exhausted = true;
        break;
      }
      a.swap_rows(t, pr);
      left.swap_rows(t, pr);
      a.swap_cols(t, pc);
      right.swap_cols(t, pc);

      bool cleared = true;
      const Integer pivot = a(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), pivot.get_mpz_t());
        a.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
        if (a(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), pivot.get_mpz_t());
        a.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
        if (a(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // The pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and reduce again.
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == rows) break;
      a.add_row_multiple(t, bad_row, 1);
      left.add_row_multiple(t, bad_row, 1);
    }
    if (exhausted) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }
  SmithForm out;
  out.rank = t;
  out.factors.resize(diag);
  for (std::size_t i = 0; i < diag; ++i) out.factors[i] = a(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

IntVector cokernel_invariants(const IntMatrix& m) {
  const SmithForm snf = smith_normal_form(m);
  IntVector out;
  for (const auto& d : snf.factors) {
    if (d != 1) out.push_back(d);
  }
  // Rows beyond the diagonal contribute free summands.
  for (std::size_t i = snf.factors.size(); i < m.rows(); ++i) out.emplace_back(0);
  return out;
}

ColumnLattice::ColumnLattice(const IntMatrix& generators)
    : generators_(generators), snf_(smith_normal_form(generators)) {}

std::optional<IntVector> ColumnLattice::solve(std::span<const Integer> b) const {
  if (b.size() != generators_.rows()) throw DomainError("dimension mismatch in lattice membership");
  const IntVector c = snf_.left.apply(b);
  IntVector y(generators_.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf_.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), snf_.factors[i].get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), snf_.factors[i].get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.right.apply(y);
}

std::vector<Rational> solve_rational(const IntMatrix& m, std::span<const Integer> b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw DomainError("solve_rational needs a square system");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n] = Rational(b[i]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == Rational(0)) ++p;
    if (p == n) throw DomainError("singular matrix in rational solve");
    std::swap(a[k], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == Rational(0)) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

Rational inverse_quadratic_form(const IntMatrix& m, std::span<const Integer> x) {
  const std::vector<Rational> y = solve_rational(m, x);
  Rational sum;
  for (std::size_t i = 0; i < x.size(); ++i) sum += Rational(x[i]) * y[i];
  return sum;
}

Inertia inertia(const IntMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw DomainError("inertia needs a symmetric matrix");
  const std::size_t n = symmetric.rows();
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s[i][j] = Rational(symmetric(i, j));
  }
  auto swap_both = [&](std::size_t a, std::size_t b) {
    std::swap(s[a], s[b]);
    for (auto& row : s) std::swap(row[a], row[b]);
  };
  auto add_both = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) s[dst][j] += f * s[src][j];
    for (std::size_t i = 0; i < n; ++i) s[i][dst] += f * s[i][src];
  };
  const Rational zero;
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k][k] == zero) {
      std::size_t j = k + 1;
      while (j < n && s[j][j] == zero) ++j;
      if (j < n) {
        swap_both(k, j);
      } else {
        // Every remaining diagonal entry vanishes: use an off-diagonal one.
        j = k + 1;
        while (j < n && s[k][j] == zero) ++j;
        if (j == n) {
          ++out.zero;
          continue;
        }
        add_both(k, j, Rational(1));  // new s[k][k] = 2 s[k][j]
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (s[i][k] == zero) continue;
      add_both(i, k, -(s[i][k] / s[k][k]));
    }
    (s[k][k] > zero ? out.positive : out.negative) += 1;
  }
  return out;
}

}  // namespace seifert
