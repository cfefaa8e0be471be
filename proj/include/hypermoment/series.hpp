#pragma once

#include <optional>
#include <vector>

#include "hypermoment/bigfloat.hpp"
#include "hypermoment/rational.hpp"

namespace hypermoment {

/// Rectangular complex number with exact rational parts. Real values are
/// represented with im = 0 and lose nothing.
struct RationalComplex {
  Rational re;
  Rational im;

  RationalComplex() = default;
  RationalComplex(Rational r) : re(std::move(r)) {}  // NOLINT: reals embed
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_real() const { return im.is_zero(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Rational norm2() const { return re * re + im * im; }
  /// |re| + |im|; an upper bound on the modulus, exact for real values.
  Rational l1() const { return re.abs() + im.abs(); }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b);
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// A numeric series evaluation: a correctly rounded approximation together
/// with a rigorous absolute bound on |true value - approx|. For terminating
/// series the exact rational value is carried alongside and tail_bound
/// reduces to the (usually zero) final rounding error.
struct SeriesValue {
  BigFloat approx;
  BigFloat tail_bound;
  long terms_used = 0;
  std::optional<Rational> exact;
};

SeriesValue sv_from_rational(const Rational& q, mpfr_prec_t prec);
SeriesValue sv_zero(mpfr_prec_t prec);
SeriesValue sv_add(const SeriesValue& a, const SeriesValue& b);
SeriesValue sv_sub(const SeriesValue& a, const SeriesValue& b);
SeriesValue sv_mul(const SeriesValue& a, const SeriesValue& b);
/// a / b; requires |b.approx| > b.tail_bound (the divisor excludes zero).
SeriesValue sv_div(const SeriesValue& a, const SeriesValue& b);
/// value * r for exact rational r.
SeriesValue sv_scale(const SeriesValue& v, const Rational& r);

/// |a.approx - b.approx|, rounded up.
BigFloat sv_delta(const SeriesValue& a, const SeriesValue& b);
/// True when the two approximations agree within the sum of their bounds.
bool sv_within_bounds(const SeriesValue& a, const SeriesValue& b);

/// Complex-valued analogue used by the Stieltjes transforms at complex z.
struct ComplexSeriesValue {
  BigFloat re;
  BigFloat im;
  BigFloat tail_bound;  // bound on the modulus of the total error
  long terms_used = 0;
  std::optional<RationalComplex> exact;
};

/// Generalized hypergeometric series sum_x (tops)_x / (bottoms)_x * c^x / x!
/// evaluated with a rigorous tail bound.
///
/// Domain: the series must terminate (some top a non-positive integer, or
/// c = 0), or satisfy p < q+1, or p = q+1 with |c| < 1. Otherwise
/// DivergentSeries is thrown. A bottom parameter whose Pochhammer factor
/// vanishes before termination raises InvalidParameter.
SeriesValue pfq_eval(const std::vector<Rational>& tops,
                     const std::vector<Rational>& bottoms, const Rational& c,
                     mpfr_prec_t precision_bits);

/// sum_x x^n * (tops)_x / (bottoms)_x * c^x / x!  (n-th power-weighted sum;
/// with tops/bottoms/c describing a weight this is its n-th raw moment).
SeriesValue pfq_power_sum(const std::vector<Rational>& tops,
                          const std::vector<Rational>& bottoms, const Rational& c,
                          unsigned n, mpfr_prec_t precision_bits);

/// sum_x (tops)_x / (bottoms)_x * c^x / x! / (z - x) for real z off the
/// support {0, 1, 2, ...}.
SeriesValue pfq_stieltjes_sum(const std::vector<Rational>& tops,
                              const std::vector<Rational>& bottoms, const Rational& c,
                              const Rational& z, mpfr_prec_t precision_bits);

/// pfq_eval with complex parameters (used for the hypergeometric form of the
/// Stieltjes transform at complex z).
ComplexSeriesValue pfq_eval_complex(const std::vector<RationalComplex>& tops,
                                    const std::vector<RationalComplex>& bottoms,
                                    const RationalComplex& c, mpfr_prec_t precision_bits);

/// Direct Stieltjes sum at complex z.
ComplexSeriesValue pfq_stieltjes_sum_complex(const std::vector<Rational>& tops,
                                             const std::vector<Rational>& bottoms,
                                             const Rational& c, const RationalComplex& z,
                                             mpfr_prec_t precision_bits);

/// Truncation data shared by Taylor-slice computations over a weight
/// rho(x) = (tops)_x/(bottoms)_x c^x/x!: a cutoff X and, for each n <= max_power,
/// a rigorous bound on sum_{x > X} |rho(x)| (scale x)^n / n!. For terminating
/// weights the cutoff is the support end and all tails are zero.
struct WeightTailData {
  long cutoff = 0;
  std::vector<Rational> tails;
};

WeightTailData weight_power_tails(const std::vector<Rational>& tops,
                                  const std::vector<Rational>& bottoms,
                                  const Rational& c, const Rational& scale_abs,
                                  unsigned max_power, mpfr_prec_t precision_bits);

/// Smallest rational u with u*u >= v (within ~2^-64 relative slack); v >= 0.
Rational sqrt_upper(const Rational& v);

}  // namespace hypermoment
