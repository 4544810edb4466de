#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "seifert/error.hpp"
#include "seifert/int_matrix.hpp"

using namespace seifert;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

IntMatrix random_matrix(std::size_t r, std::size_t c, long range) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(-range, range);
  }
  return m;
}

oracle::Mat as_oracle(const IntMatrix& m) {
  oracle::Mat out(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  }
  return out;
}

Rational as_rational(const oracle::Frac& f) {
  return Rational(Integer(static_cast<long>(f.n)), Integer(static_cast<long>(f.d)));
}

// gcd of all k x k minors, by cofactor expansion.
Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  auto first = [](std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  };
  auto next = [](std::vector<std::size_t>& v, std::size_t n) {
    for (std::size_t i = v.size(); i-- > 0;) {
      if (v[i] < n - v.size() + i) {
        ++v[i];
        for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = v[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  first(rows);
  do {
    first(cols);
    do {
      oracle::Mat sub(k, std::vector<long>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rows[i], cols[j]).get_si();
      }
      g = gcd(g, Integer(static_cast<long>(oracle::det_cofactor(sub))));
    } while (next(cols, m.cols()));
  } while (next(rows, m.rows()));
  return g;
}

}  // namespace

TEST(IntMatrix, ProductAndTranspose) {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a * IntMatrix::identity(2), a);
  EXPECT_THROW(a * IntMatrix(3, 1), DomainError);
  EXPECT_THROW((IntMatrix{{1, 2}, {3}}), DomainError);
}

TEST(Determinant, MatchesCofactorExpansion) {
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 7));
    const IntMatrix m = random_matrix(n, n, 9);
    ASSERT_EQ(determinant(m), Integer(static_cast<long>(oracle::det_cofactor(as_oracle(m))))) << m.str();
  }
  EXPECT_THROW(determinant(IntMatrix(2, 3)), DomainError);
}

TEST(SmithForm, Example) {
  const SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.factors, (IntVector{1, 6}));
  EXPECT_EQ(cokernel_invariants(IntMatrix{{2, 0}, {0, 3}}), (IntVector{6}));
  EXPECT_EQ(cokernel_invariants(IntMatrix{{2, 0}, {0, 0}}), (IntVector{2, 0}));
}

TEST(SmithForm, PropertyOnRandomMatrices) {
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform(1, 8));
    const std::size_t c = static_cast<std::size_t>(uniform(1, 8));
    IntMatrix m = random_matrix(r, c, 9);
    if (trial % 5 == 0 && r > 1) {
      // Force rank deficiency.
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);
    }
    const SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.factors.size(), std::min(r, c));
    ASSERT_EQ(abs(determinant(s.left)), 1);
    ASSERT_EQ(abs(determinant(s.right)), 1);
    const IntMatrix d = s.left * m * s.right;
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        ASSERT_EQ(d(i, j), i == j ? s.factors[i] : Integer(0)) << m.str();
      }
    }
    std::size_t rank = 0;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      ASSERT_GE(s.factors[i], 0);
      if (s.factors[i] != 0) ++rank;
      if (i + 1 < s.factors.size() && s.factors[i] != 0) {
        ASSERT_EQ(s.factors[i + 1] % s.factors[i], 0) << m.str();
      }
      if (i > 0 && s.factors[i - 1] == 0) ASSERT_EQ(s.factors[i], 0);
    }
    ASSERT_EQ(s.rank, rank);
  }
}

TEST(SmithForm, DeterminantalDivisors) {
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform(2, 4));
    const std::size_t c = static_cast<std::size_t>(uniform(2, 4));
    const IntMatrix m = random_matrix(r, c, 6);
    const SmithForm s = smith_normal_form(m);
    Integer product = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      product *= s.factors[k - 1];
      ASSERT_EQ(determinantal_divisor(m, k), product) << m.str();
    }
  }
}

TEST(ColumnLattice, MembershipMatchesCramer) {
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 5));
    const IntMatrix g = random_matrix(n, n, 5);
    if (determinant(g) == 0) continue;
    std::vector<long> b(n);
    IntVector bi(n);
    for (std::size_t i = 0; i < n; ++i) bi[i] = b[i] = uniform(-12, 12);
    bool integral = true;
    for (const auto& x : oracle::cramer(as_oracle(g), b)) integral = integral && x.d == 1;
    const ColumnLattice lattice(g);
    const auto x = lattice.solve(bi);
    ASSERT_EQ(x.has_value(), integral) << g.str();
    if (x) ASSERT_EQ(g.apply(*x), bi);
  }
}

TEST(ColumnLattice, RectangularGenerators) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = static_cast<std::size_t>(uniform(1, 6));
    const std::size_t c = static_cast<std::size_t>(uniform(1, 6));
    const IntMatrix g = random_matrix(r, c, 7);
    IntVector coeffs(c);
    for (auto& v : coeffs) v = uniform(-5, 5);
    const IntVector b = g.apply(coeffs);
    const ColumnLattice lattice(g);
    const auto x = lattice.solve(b);
    ASSERT_TRUE(x.has_value()) << g.str();
    ASSERT_EQ(g.apply(*x), b);
  }
  const ColumnLattice even(IntMatrix{{2, 0}, {0, 2}});
  EXPECT_FALSE(even.contains(IntVector{1, 0}));
  EXPECT_TRUE(even.contains(IntVector{4, -2}));
  EXPECT_THROW(even.contains(IntVector{1}), DomainError);
}

TEST(RationalSolve, MatchesCramerAndBorderedDeterminant) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 6));
    IntMatrix m = random_matrix(n, n, 6);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
    }
    if (determinant(m) == 0) {
      EXPECT_THROW(solve_rational(m, IntVector(n, 1)), DomainError);
      continue;
    }
    std::vector<long> b(n);
    IntVector bi(n);
    for (std::size_t i = 0; i < n; ++i) bi[i] = b[i] = uniform(-8, 8);
    const auto x = solve_rational(m, bi);
    const auto expected = oracle::cramer(as_oracle(m), b);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(x[i], as_rational(expected[i]));
    ASSERT_EQ(inverse_quadratic_form(m, bi), as_rational(oracle::inverse_form(as_oracle(m), b)));
  }
}

TEST(Inertia, SylvesterLawOfInertia) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 6));
    IntMatrix d(n, n);
    Inertia expected;
    for (std::size_t i = 0; i < n; ++i) {
      d(i, i) = uniform(-3, 3);
      if (d(i, i) > 0) ++expected.positive;
      else if (d(i, i) < 0) ++expected.negative;
      else ++expected.zero;
    }
    IntMatrix p = random_matrix(n, n, 3);
    if (determinant(p) == 0) continue;
    const IntMatrix q = p.transpose() * d * p;
    const Inertia got = inertia(q);
    ASSERT_EQ(got.positive, expected.positive) << q.str();
    ASSERT_EQ(got.negative, expected.negative) << q.str();
    ASSERT_EQ(got.zero, expected.zero) << q.str();
  }
}

TEST(Inertia, NegativeDefiniteMatchesLeadingMinors) {
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 6));
    IntMatrix m = random_matrix(n, n, 2);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = uniform(-6, 0);
      for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
    }
    const Inertia in = inertia(m);
    ASSERT_EQ(in.negative == n, oracle::negative_definite(as_oracle(m))) << m.str();
  }
  EXPECT_EQ(inertia(IntMatrix{{0, 1}, {1, 0}}).signature(), 0);
  EXPECT_THROW(inertia(IntMatrix{{0, 1}, {2, 0}}), DomainError);
}
