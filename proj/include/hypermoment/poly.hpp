#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "hypermoment/bigfloat.hpp"
#include "hypermoment/rational.hpp"

namespace hypermoment {

/// Dense univariate polynomial over Rational, coefficients ascending.
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& v) { return Poly({v}); }
  /// The monomial v * X^k.
  static Poly monomial(const Rational& v, std::size_t k);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of X^k (zero beyond the degree).
  const Rational& coeff(std::size_t k) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  BigFloat eval(const BigFloat& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Human-readable form like "1 - 2*X + X^3" with the given variable name.
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace hypermoment
