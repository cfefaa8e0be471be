#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "hypermoment/rational.hpp"

namespace hypermoment {

/// Arbitrary-precision binary float at an explicit per-value precision.
///
/// Error contract: an operation with rounding mode MPFR_RNDN is correctly
/// rounded, so its result differs from the exact value by at most half an
/// ulp at the result precision. Directed variants (*_up) round away from
/// zero / toward +inf and are used for tail-bound arithmetic, which must
/// only ever overestimate.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(f_, prec); mpfr_set_zero(f_, 1); }
  BigFloat(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(f_, prec);
    mpfr_set_q(f_, q.mpq().get_mpq_t(), rnd);
  }
  BigFloat(const BigFloat& o) { mpfr_init2(f_, mpfr_get_prec(o.f_)); mpfr_set(f_, o.f_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(f_, 2); mpfr_swap(f_, o.f_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(f_, mpfr_get_prec(o.f_)); mpfr_set(f_, o.f_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(f_, o.f_); return *this; }
  ~BigFloat() { mpfr_clear(f_); }

  static BigFloat from_long(long v, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si(r.f_, v, MPFR_RNDN);
    return r;
  }
  static BigFloat from_decimal(const char* text, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_str(r.f_, text, 10, MPFR_RNDN);
    return r;
  }
  /// Exact power of two, 2^e.
  static BigFloat pow2(long e, mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_set_si_2exp(r.f_, 1, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(f_); }
  int sign() const { return mpfr_sgn(f_); }
  bool is_zero() const { return mpfr_zero_p(f_) != 0; }

  BigFloat abs() const { BigFloat r(prec()); mpfr_abs(r.f_, f_, MPFR_RNDN); return r; }
  BigFloat neg() const { BigFloat r(prec()); mpfr_neg(r.f_, f_, MPFR_RNDN); return r; }
  BigFloat exp() const { BigFloat r(prec()); mpfr_exp(r.f_, f_, MPFR_RNDN); return r; }
  /// x^e for rational e, computed as exp(e*log(x)); x must be positive.
  BigFloat pow(const Rational& e) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binop(mpfr_add, a, b, MPFR_RNDN); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binop(mpfr_sub, a, b, MPFR_RNDN); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binop(mpfr_mul, a, b, MPFR_RNDN); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binop(mpfr_div, a, b, MPFR_RNDN); }

  /// Upward-rounded bound arithmetic.
  static BigFloat add_up(const BigFloat& a, const BigFloat& b) { return binop(mpfr_add, a, b, MPFR_RNDU); }
  static BigFloat mul_up(const BigFloat& a, const BigFloat& b) { return binop(mpfr_mul, a, b, MPFR_RNDU); }
  static BigFloat div_up(const BigFloat& a, const BigFloat& b) { return binop(mpfr_div, a, b, MPFR_RNDU); }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) == 0; }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) >= 0; }

  double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }
  /// Scientific-notation decimal string with enough digits to round-trip
  /// the stored precision (or the requested digit count).
  std::string to_string(int digits = 0) const;

  mpfr_srcptr raw() const { return f_; }
  mpfr_ptr raw() { return f_; }

 private:
  using mpfr_binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat binop(mpfr_binop op, const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
    BigFloat r(std::max(a.prec(), b.prec()));
    op(r.f_, a.f_, b.f_, rnd);
    return r;
  }
  mpfr_t f_;
};

}  // namespace hypermoment
