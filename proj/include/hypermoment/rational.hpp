#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace hypermoment {

using Integer = mpz_class;

/// Arbitrary-precision exact rational. Always canonical: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, enforced on every construction path.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design, ints are rationals
  Rational(const Integer& n) : q_(n) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  /// Parses "p/q" (optional sign on p) or a bare integer "p".
  /// Throws InvalidParameter on malformed input or q = 0.
  static Rational parse(const std::string& text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// True when the value is an integer <= 0 (the Pochhammer termination test).
  bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

  /// For non-positive integers, the value as a C long (|value| must fit).
  long as_long() const;

  Rational abs() const;
  /// Integer power; negative exponents invert (base must be nonzero).
  Rational pow(long e) const;

  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// Underlying GMP value (canonical form maintained).
  const mpq_class& mpq() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hypermoment
