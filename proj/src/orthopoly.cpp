#include "hypermoment/orthopoly.hpp"

#include "hypermoment/errors.hpp"
#include "hypermoment/moments.hpp"

namespace hypermoment {

namespace {

// Cofactor-expansion determinant over value-with-bound entries; the sizes
// here stay small (n <= 8 or so), so O(k!) is fine and avoids division.
SeriesValue det_recursive(const std::vector<std::vector<SeriesValue>>& m,
                          std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t k = cols.size();
  const mpfr_prec_t prec = m[0][0].approx.prec();
  if (row == m.size()) return sv_from_rational(Rational(1), prec);
  SeriesValue acc = sv_zero(prec);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t col = cols[i];
    std::vector<std::size_t> rest;
    rest.reserve(k - 1);
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) rest.push_back(cols[j]);
    SeriesValue sub = det_recursive(m, rest, row + 1);
    SeriesValue term = sv_mul(m[row][col], sub);
    if (i % 2 == 1) term = sv_sub(sv_zero(prec), term);
    acc = sv_add(acc, term);
  }
  return acc;
}

SeriesValue hankel_det(const std::vector<SeriesValue>& moments, unsigned k) {
  std::vector<std::vector<SeriesValue>> m(k + 1, std::vector<SeriesValue>(k + 1));
  for (unsigned i = 0; i <= k; ++i)
    for (unsigned j = 0; j <= k; ++j) m[i][j] = moments[i + j];
  std::vector<std::size_t> cols(k + 1);
  for (std::size_t i = 0; i <= k; ++i) cols[i] = i;
  return det_recursive(m, cols, 0);
}

std::vector<SeriesValue> collect_moments(const WeightSpec& spec, unsigned count,
                                         mpfr_prec_t prec) {
  std::vector<SeriesValue> ms;
  ms.reserve(count);
  for (unsigned k = 0; k < count; ++k)
    ms.push_back(moment_oracle(spec, k, prec).value);
  return ms;
}

bool interval_positive(const SeriesValue& v) {
  return v.approx > v.tail_bound;
}

bool interval_contains_zero(const SeriesValue& v) {
  return !(v.approx.abs() > v.tail_bound);
}

}  // namespace

HankelReport hankel_dets(const std::vector<SeriesValue>& moments, unsigned n) {
  if (moments.size() < 2 * static_cast<std::size_t>(n) + 1)
    throw InsufficientMoments("hankel_dets: need 2n+1 moments, got " +
                              std::to_string(moments.size()));
  HankelReport report;
  report.dets.reserve(n + 1);
  report.positive.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    SeriesValue d = hankel_det(moments, k);
    report.positive.push_back(interval_positive(d));
    report.dets.push_back(std::move(d));
  }
  return report;
}

HankelReport hankel_dets(const WeightSpec& spec, unsigned n,
                         mpfr_prec_t precision_bits) {
  HankelReport report =
      hankel_dets(collect_moments(spec, 2 * n + 1, precision_bits), n);
  if (spec.nonstandard_parameters())
    report.positive.assign(report.positive.size(), false);
  return report;
}

MonicPoly monic_orthogonal(const WeightSpec& spec, unsigned n,
                           mpfr_prec_t precision_bits) {
  MonicPoly poly;
  if (n == 0) {
    poly.coeffs = {sv_from_rational(Rational(1), precision_bits)};
    return poly;
  }
  // Solve sum_i a_i mu_{i+j} = -mu_{n+j}, j = 0..n-1, for the lower
  // coefficients of x^n + sum a_i x^i.
  const std::vector<SeriesValue> ms = collect_moments(spec, 2 * n, precision_bits);
  std::vector<std::vector<SeriesValue>> a(n, std::vector<SeriesValue>(n + 1));
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) a[j][i] = ms[i + j];
    a[j][n] = sv_sub(sv_zero(precision_bits), ms[n + j]);
  }
  // Gaussian elimination with partial pivoting on |approx|.
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    for (unsigned r = col + 1; r < n; ++r)
      if (a[r][col].approx.abs() > a[pivot][col].approx.abs()) pivot = r;
    std::swap(a[col], a[pivot]);
    if (interval_contains_zero(a[col][col]))
      throw SingularHankel("moment system pivot cannot be separated from zero");
    for (unsigned r = 0; r < n; ++r) {
      if (r == col) continue;
      const SeriesValue factor = sv_div(a[r][col], a[col][col]);
      for (unsigned k = col; k <= n; ++k)
        a[r][k] = sv_sub(a[r][k], sv_mul(factor, a[col][k]));
    }
  }
  poly.coeffs.assign(n + 1, sv_zero(precision_bits));
  for (unsigned i = 0; i < n; ++i) poly.coeffs[i] = sv_div(a[i][n], a[i][i]);
  poly.coeffs[n] = sv_from_rational(Rational(1), precision_bits);
  return poly;
}

SeriesValue orthogonality_check(const WeightSpec& spec, unsigned n, unsigned m,
                                mpfr_prec_t precision_bits) {
  const MonicPoly pn = monic_orthogonal(spec, n, precision_bits);
  const MonicPoly pm = monic_orthogonal(spec, m, precision_bits);
  const std::vector<SeriesValue> ms =
      collect_moments(spec, n + m + 1, precision_bits);
  // convolution of the coefficient lists against the moments
  SeriesValue acc = sv_zero(precision_bits);
  for (std::size_t i = 0; i < pn.coeffs.size(); ++i)
    for (std::size_t j = 0; j < pm.coeffs.size(); ++j)
      acc = sv_add(acc, sv_mul(sv_mul(pn.coeffs[i], pm.coeffs[j]), ms[i + j]));
  return acc;
}

}  // namespace hypermoment
