#include "seifert/continued_fraction.hpp"

#include <algorithm>

#include "seifert/error.hpp"

namespace seifert {

ContinuedFraction::ContinuedFraction(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("empty continued fraction");
  for (const auto& a : coefficients_) {
    if (a < 2) throw DomainError("continued fraction coefficient " + a.get_str() + " < 2");
  }
}

Integer ContinuedFraction::coefficient_or_two(std::size_t j) const {
  return j < coefficients_.size() ? coefficients_[j] : Integer(2);
}

ContinuedFraction ContinuedFraction::reversed() const {
  std::vector<Integer> r(coefficients_.rbegin(), coefficients_.rend());
  return ContinuedFraction(std::move(r));
}

std::string ContinuedFraction::str() const {
  std::string out = "[";
  for (std::size_t j = 0; j < coefficients_.size(); ++j) {
    if (j) out += ",";
    out += coefficients_[j].get_str();
  }
  return out + "]";
}

// Ceiling algorithm. Write x = -n/d with n > d > 0. Then a = ceil(n/d) >= 2 and
// x + a = (a*d - n)/d lies in [0, 1). If it is zero we stop; otherwise the
// remainder -1/(x + a) = -d/(a*d - n) is again < -1 and has denominator
// a*d - n < d. Denominators strictly decrease, so the loop terminates after at
// most d steps.
ContinuedFraction negative_expansion(const Rational& x) {
  if (x >= Rational(-1)) throw DomainError("negative expansion needs x < -1, got " + x.str());
  std::vector<Integer> out;
  Rational rest = x;
  for (;;) {
    const Integer a = (-rest).ceil();
    out.push_back(a);
    const Rational remainder = rest + Rational(a);
    if (remainder.num() == 0) break;
    rest = -remainder.reciprocal();
  }
  return ContinuedFraction(std::move(out));
}

Rational evaluate_chain(std::span<const Integer> entries) {
  if (entries.empty()) throw DomainError("empty chain");
  Rational value(-entries.back());
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    if (value.num() == 0) throw DomainError("vanishing partial denominator in chain");
    value = Rational(-*it) - value.reciprocal();
  }
  return value;
}

Rational evaluate(const ContinuedFraction& cf) { return evaluate_chain(cf.coefficients()); }

GluingData gluing_data(const Integer& alpha, const Integer& beta) {
  if (alpha < 2) throw DomainError("gluing data needs alpha >= 2, got " + alpha.get_str());
  if (gcd(alpha, beta) != 1) {
    throw DomainError("gluing data needs gcd(alpha, beta) = 1, got (" + alpha.get_str() + ", " +
                      beta.get_str() + ")");
  }
  // alpha' is the inverse of beta modulo alpha, taken in (0, alpha).
  Integer alpha_prime;
  mpz_invert(alpha_prime.get_mpz_t(), beta.get_mpz_t(), alpha.get_mpz_t());
  if (alpha_prime < 0) alpha_prime += alpha;
  Integer numerator = beta * alpha_prime - 1;
  Integer beta_prime;
  mpz_divexact(beta_prime.get_mpz_t(), numerator.get_mpz_t(), alpha.get_mpz_t());
  GluingData g{alpha, beta, alpha_prime, beta_prime};
  if (g.beta * g.alpha_prime - g.alpha * g.beta_prime != 1) {
    throw ConsistencyError("gluing determinant is not 1");
  }
  return g;
}

}  // namespace seifert
