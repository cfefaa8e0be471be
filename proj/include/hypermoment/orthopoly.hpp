#pragma once

#include <vector>

#include "hypermoment/series.hpp"
#include "hypermoment/weight.hpp"

namespace hypermoment {

/// Hankel determinants Delta_0 ... Delta_n of the moment matrix (mu_{i+j}),
/// with positivity decided only when the error interval excludes zero.
struct HankelReport {
  std::vector<SeriesValue> dets;
  std::vector<bool> positive;
};

/// Monic polynomial in x; coefficient n is exactly 1, lower coefficients
/// carry their propagated error bounds (exact for terminating weights).
struct MonicPoly {
  std::vector<SeriesValue> coeffs;
  unsigned degree() const { return static_cast<unsigned>(coeffs.size()) - 1; }
};

/// Needs moments mu_0 ... mu_{2n} (2n+1 values); throws InsufficientMoments.
HankelReport hankel_dets(const std::vector<SeriesValue>& moments, unsigned n);

/// Convenience overload computing the moments by direct summation. Specs
/// flagged with nonstandard parameters (some beta <= -1) get no positivity
/// verdicts: the weight need not be positive, so every flag stays false.
HankelReport hankel_dets(const WeightSpec& spec, unsigned n,
                         mpfr_prec_t precision_bits);

/// Monic orthogonal polynomial of degree n for the weight's moment
/// functional, from the Hankel linear system (equivalent to the bordered
/// determinant). Throws SingularHankel when a pivot cannot be separated
/// from zero.
MonicPoly monic_orthogonal(const WeightSpec& spec, unsigned n,
                           mpfr_prec_t precision_bits);

/// L(Pi_n * Pi_m) evaluated by expanding the product against the moments;
/// the n = m value is the normalization constant K_n.
SeriesValue orthogonality_check(const WeightSpec& spec, unsigned n, unsigned m,
                                mpfr_prec_t precision_bits);

}  // namespace hypermoment
