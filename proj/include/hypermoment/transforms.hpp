#pragma once

#include <optional>

#include "hypermoment/moments.hpp"
#include "hypermoment/poly.hpp"
#include "hypermoment/series.hpp"
#include "hypermoment/weight.hpp"

namespace hypermoment {

/// Finite view of a formal power series around 0: coefficient n carries its
/// own rigorous error bound (SeriesValue), ascending powers of w.
struct TaylorSlice {
  std::vector<SeriesValue> coeffs;
  unsigned order() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

struct CheckResult {
  bool ok = false;
  BigFloat max_deviation;
};

/// Slice of the exponential generating function sum_n mu_n(c) w^n / n!,
/// coefficients computed by direct moment summation.
TaylorSlice egf_moments(const WeightSpec& spec, unsigned order,
                        mpfr_prec_t precision_bits);

/// w-Taylor slice of mu_0(c e^{a w}), computed by expanding e^{a w} to the
/// requested order and re-expanding the mu_0 series through truncated
/// polynomial powers. Independent of the moment recurrences.
TaylorSlice composite_egf_slice(const WeightSpec& spec, const Rational& scale_a,
                                unsigned order, mpfr_prec_t precision_bits);

/// Verifies that the slice of mu_0(c e^{(lambda+tau c) w}) matches
/// sum_n (P_n(c) . mu(c)) w^n / n! coefficient by coefficient.
CheckResult egf_compose_check(const WeightSpec& spec, unsigned order,
                              mpfr_prec_t precision_bits);

/// Stieltjes transform in hypergeometric form:
/// (1/z) pFq[-z, alphas; 1-z, betas+1; c]. z must avoid {0, 1, 2, ...}.
SeriesValue stieltjes_eval(const WeightSpec& spec, const Rational& z,
                           mpfr_prec_t precision_bits);
ComplexSeriesValue stieltjes_eval(const WeightSpec& spec, const RationalComplex& z,
                                  mpfr_prec_t precision_bits);

/// Stieltjes transform by direct summation sum_x rho(x) / (z - x).
SeriesValue stieltjes_oracle(const WeightSpec& spec, const Rational& z,
                             mpfr_prec_t precision_bits);
ComplexSeriesValue stieltjes_oracle(const WeightSpec& spec, const RationalComplex& z,
                                    mpfr_prec_t precision_bits);

enum class StieltjesFamily { GenCharlier, GenMeixner };

struct UVPair {
  SeriesValue U;
  SeriesValue V;
};

/// Closed-form Stieltjes transforms (U, V) of the polynomial vectors for the
/// generalized Charlier weight (parameters beta, c).
UVPair gen_charlier_uv(const Rational& beta, const Rational& c, const Rational& z,
                       mpfr_prec_t precision_bits);
/// Same for the generalized Meixner weight (parameters alpha, beta, c).
UVPair gen_meixner_uv(const Rational& alpha, const Rational& beta, const Rational& c,
                      const Rational& z, mpfr_prec_t precision_bits);

/// Checks U mu_0 + V mu_1 = (1/z) pFq[-z, alphas; 1-z, betas+1; c] for the
/// two families with closed-form (U, V). alpha is ignored for GenCharlier.
CheckResult stieltjes_P_identity(StieltjesFamily family,
                                 const std::optional<Rational>& alpha,
                                 const Rational& beta, const Rational& c,
                                 const Rational& z, mpfr_prec_t precision_bits);

/// Truncated exponential slice sum_{j<=order} (scale w)^j / j! as a Poly in w.
Poly exp_slice(const Rational& scale, unsigned order);
Poly truncated_mul(const Poly& a, const Poly& b, unsigned order);
Poly truncated_pow(const Poly& base, unsigned e, unsigned order);

}  // namespace hypermoment
