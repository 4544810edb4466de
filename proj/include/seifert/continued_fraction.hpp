#pragma once

#include <span>
#include <string>
#include <vector>

#include "seifert/rational.hpp"

namespace seifert {

// Negative continued fraction [a0, ..., ak] with every a_j >= 2, read as
//   -a0 - 1/(-a1 - 1/(... - 1/(-ak))).
// Coefficients past the end are *not* stored; consumers that need the
// "a_j = 2 for j > k" convention use coefficient_or_two().
class ContinuedFraction {
 public:
  // Throws DomainError if the list is empty or has an entry < 2.
  explicit ContinuedFraction(std::vector<Integer> coefficients);

  const std::vector<Integer>& coefficients() const { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }
  // Index of the last coefficient (k).
  std::size_t last_index() const { return coefficients_.size() - 1; }
  const Integer& operator[](std::size_t j) const { return coefficients_.at(j); }
  Integer coefficient_or_two(std::size_t j) const;
  ContinuedFraction reversed() const;

  std::string str() const;  // "[a0,a1,...]"

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<Integer> coefficients_;
};

// Minimal expansion of x < -1 by the ceiling algorithm. Throws DomainError for x >= -1.
ContinuedFraction negative_expansion(const Rational& x);

// Exact value of the expansion.
Rational evaluate(const ContinuedFraction& cf);

// Evaluates an arbitrary chain -c0 - 1/(-c1 - ...) whose entries may be 1
// (as in the truncated lists [a_k, ..., a_j - 1] describing layer slopes).
// Throws DomainError if the list is empty or a partial denominator vanishes.
Rational evaluate_chain(std::span<const Integer> entries);

// Columns of the gluing matrix A = [[alpha, alpha'], [-beta, -beta']] with
// beta*alpha' - alpha*beta' = 1 and 0 < alpha' < alpha.
struct GluingData {
  Integer alpha;
  Integer beta;
  Integer alpha_prime;
  Integer beta_prime;

  friend bool operator==(const GluingData&, const GluingData&) = default;
};

// Unique completion of (alpha, beta). Throws DomainError when alpha < 2 or
// gcd(alpha, |beta|) != 1.
GluingData gluing_data(const Integer& alpha, const Integer& beta);

}  // namespace seifert
