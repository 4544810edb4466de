#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seifert {

using Integer = mpz_class;

// Exact rational number, always held in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  // Accepts "p/q" or "p" (optional leading sign, no whitespace).
  static Rational parse(std::string_view text);

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }

  bool is_integer() const { return den() == 1; }
  Integer floor() const;
  Integer ceil() const;
  Rational reciprocal() const;

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;
  // Truncated decimal approximation with `digits` fractional digits, computed
  // with integer arithmetic only. For display; never fed back into computation.
  std::string approximate_decimal(int digits = 6) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

// Parses a decimal integer; throws DomainError on malformed input.
Integer parse_integer(std::string_view text);

// gcd(|a|, |b|)
Integer gcd(const Integer& a, const Integer& b);

// Narrowing conversion; throws DomainError if the value does not fit.
long to_long(const Integer& value);

}  // namespace seifert
