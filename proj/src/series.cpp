#include "hypermoment/series.hpp"

#include <algorithm>
#include <utility>

#include "hypermoment/combinatorics.hpp"
#include "hypermoment/errors.hpp"

namespace hypermoment {

RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
  const Rational n2 = b.norm2();
  if (n2.is_zero()) throw InvalidParameter("complex division by zero");
  return {(a.re * b.re + a.im * b.im) / n2, (a.im * b.re - a.re * b.im) / n2};
}

Rational sqrt_upper(const Rational& v) {
  if (v.sign() < 0) throw InvalidParameter("sqrt_upper of a negative value");
  if (v.is_zero()) return Rational(0);
  // ceil(v * 2^128), integer sqrt, +1: (isqrt(t)+1)^2 >= t+1 > v*2^128.
  Integer scaled = v.num() << 128;
  Integer t;
  mpz_cdiv_q(t.get_mpz_t(), scaled.get_mpz_t(), v.den().get_mpz_t());
  Integer s;
  mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
  s += 1;
  return Rational(s, Integer(1) << 64);
}

namespace {

// >= one ulp of v; zero results of exact operations get zero slack.
BigFloat rounding_slack(const BigFloat& v) {
  if (v.is_zero()) return BigFloat(8);
  return BigFloat::pow2(mpfr_get_exp(v.raw()) - v.prec() + 1, 32);
}

Rational exact_conversion_error(const Rational& q, const BigFloat& approx) {
  mpq_class back;
  mpfr_get_q(back.get_mpq_t(), approx.raw());
  return (q - Rational(back.get_num(), back.get_den())).abs();
}

}  // namespace

SeriesValue sv_from_rational(const Rational& q, mpfr_prec_t prec) {
  SeriesValue v;
  v.approx = BigFloat(q, prec);
  v.tail_bound = BigFloat(exact_conversion_error(q, v.approx), 64, MPFR_RNDU);
  v.exact = q;
  return v;
}

SeriesValue sv_zero(mpfr_prec_t prec) { return sv_from_rational(Rational(0), prec); }

SeriesValue sv_add(const SeriesValue& a, const SeriesValue& b) {
  const mpfr_prec_t prec = std::max(a.approx.prec(), b.approx.prec());
  if (a.exact && b.exact) {
    SeriesValue r = sv_from_rational(*a.exact + *b.exact, prec);
    r.terms_used = a.terms_used + b.terms_used;
    return r;
  }
  SeriesValue r;
  r.approx = a.approx + b.approx;
  r.tail_bound = BigFloat::add_up(BigFloat::add_up(a.tail_bound, b.tail_bound),
                                  rounding_slack(r.approx));
  r.terms_used = a.terms_used + b.terms_used;
  return r;
}

SeriesValue sv_sub(const SeriesValue& a, const SeriesValue& b) {
  SeriesValue nb = b;
  nb.approx = b.approx.neg();
  if (b.exact) nb.exact = -*b.exact;
  return sv_add(a, nb);
}

SeriesValue sv_mul(const SeriesValue& a, const SeriesValue& b) {
  const mpfr_prec_t prec = std::max(a.approx.prec(), b.approx.prec());
  if (a.exact && b.exact) {
    SeriesValue r = sv_from_rational(*a.exact * *b.exact, prec);
    r.terms_used = a.terms_used + b.terms_used;
    return r;
  }
  SeriesValue r;
  r.approx = a.approx * b.approx;
  // |xy - uv| <= |u| Ev + |v| Eu + Eu Ev for |x-u| <= Eu, |y-v| <= Ev
  BigFloat bound = BigFloat::mul_up(a.approx.abs(), b.tail_bound);
  bound = BigFloat::add_up(bound, BigFloat::mul_up(b.approx.abs(), a.tail_bound));
  bound = BigFloat::add_up(bound, BigFloat::mul_up(a.tail_bound, b.tail_bound));
  r.tail_bound = BigFloat::add_up(bound, rounding_slack(r.approx));
  r.terms_used = a.terms_used + b.terms_used;
  return r;
}

SeriesValue sv_div(const SeriesValue& a, const SeriesValue& b) {
  const mpfr_prec_t prec = std::max(a.approx.prec(), b.approx.prec());
  if (a.exact && b.exact && !b.exact->is_zero()) {
    SeriesValue r = sv_from_rational(*a.exact / *b.exact, prec);
    r.terms_used = a.terms_used + b.terms_used;
    return r;
  }
  const BigFloat babs = b.approx.abs();
  if (!(babs > b.tail_bound))
    throw InvalidParameter("sv_div: divisor interval contains zero");
  SeriesValue r;
  r.approx = a.approx / b.approx;
  // |x/y - u/v| <= (|v| Ex + |u| Ey) / (|v| (|v| - Ey)); denominator rounded down
  BigFloat num = BigFloat::add_up(BigFloat::mul_up(babs, a.tail_bound),
                                  BigFloat::mul_up(a.approx.abs(), b.tail_bound));
  BigFloat diff(prec);
  mpfr_sub(diff.raw(), babs.raw(), b.tail_bound.raw(), MPFR_RNDD);
  BigFloat den(prec);
  mpfr_mul(den.raw(), babs.raw(), diff.raw(), MPFR_RNDD);
  r.tail_bound = BigFloat::add_up(BigFloat::div_up(num, den), rounding_slack(r.approx));
  r.terms_used = a.terms_used + b.terms_used;
  return r;
}

SeriesValue sv_scale(const SeriesValue& v, const Rational& r) {
  SeriesValue factor = sv_from_rational(r, v.approx.prec());
  factor.terms_used = 0;
  return sv_mul(v, factor);
}

BigFloat sv_delta(const SeriesValue& a, const SeriesValue& b) {
  BigFloat d(std::max(a.approx.prec(), b.approx.prec()) + 32);
  mpfr_sub(d.raw(), a.approx.raw(), b.approx.raw(), MPFR_RNDA);
  return d.abs();
}

bool sv_within_bounds(const SeriesValue& a, const SeriesValue& b) {
  return sv_delta(a, b) <= BigFloat::add_up(a.tail_bound, b.tail_bound);
}

// ---------------------------------------------------------------------------
// Core summation engine.
//
// Every series handled here has terms
//     t_x = (tops)_x / (bottoms)_x * c^x / x! * x^power [* 1/(z - x)]
// with exact rational (or rational-complex) data, so partial sums are exact
// and the only approximation is the truncation tail plus one final rounding.
//
// Tail rule: let R(m) be a non-increasing rational upper bound on
// sup_{k >= m} |t_{k+1}/t_k|. Once R(m) <= r < 1, the tail from index m
// onward is at most |t_m| / (1 - R(m)). R(m) is assembled from monotone
// per-factor bounds: each top |a+k| <= k + A and each bottom |b+k| >= k + B
// (A = a, B = b exactly for real parameters once the factors are positive);
// (k+A)/(k+B) is monotone in k with limit 1, unmatched bottoms contribute
// 1/(k+B) -> 0, the x^power factor contributes ((k+1)/k)^power -> 1, and the
// 1/(z-x) factor contributes at most 1 once k >= Re z. With r held at 1/2
// whenever the limit of R allows, the bound is 2|t_m|; for a limiting ratio
// |c| > 1/2 (only when p = q+1) r = (1+|c|)/2 is used instead.
// ---------------------------------------------------------------------------

namespace {

constexpr long kMaxTerms = 2000000;

struct TermSeries {
  std::vector<RationalComplex> top;
  std::vector<RationalComplex> bottom;
  RationalComplex c;
  unsigned power = 0;
  std::optional<RationalComplex> z;
};

struct RawSum {
  RationalComplex partial;
  Rational tail;  // exact bound on the modulus of the omitted tail
  long terms = 0;
  bool exact = false;
};

struct SeriesClass {
  bool terminating = false;
  long support_end = 0;
};

// Largest x with (a)_x != 0 when a is a real non-positive integer; -1 if the
// parameter list forces no termination.
long pochhammer_support(const std::vector<RationalComplex>& params) {
  long best = -1;
  for (const auto& p : params) {
    if (!p.is_real() || !p.re.is_nonpositive_integer()) continue;
    long n = (-p.re).as_long();
    if (best < 0 || n < best) best = n;
  }
  return best;
}

SeriesClass classify_series(const TermSeries& s) {
  SeriesClass cls;
  const long top_n = pochhammer_support(s.top);
  if (s.c.is_zero()) {
    cls.terminating = true;
    cls.support_end = 0;
  } else if (top_n >= 0) {
    cls.terminating = true;
    cls.support_end = top_n;
  }
  const long bot_n = pochhammer_support(s.bottom);
  if (bot_n >= 0 && (!cls.terminating || cls.support_end > bot_n))
    throw InvalidParameter(
        "bottom Pochhammer factor vanishes before the series terminates");
  if (s.z) {
    const auto& z = *s.z;
    if (z.is_real() && z.re.is_integer() && z.re.sign() >= 0) {
      const bool on_support =
          !cls.terminating ||
          (z.re.num().fits_slong_p() && z.re.num().get_si() <= cls.support_end);
      if (on_support) throw InvalidParameter("z lies on the support of the weight");
    }
  }
  if (!cls.terminating) {
    const std::size_t p = s.top.size();
    const std::size_t q1 = s.bottom.size() + 1;
    if (p > q1)
      throw DivergentSeries("series diverges: p > q+1 with no terminating parameter");
    if (p == q1 && s.c.norm2() >= Rational(1))
      throw DivergentSeries("series diverges: p = q+1 requires |c| < 1");
  }
  return cls;
}

Rational ceil_rational(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return Rational(q);
}

Rational mod_upper_of(const RationalComplex& v) {
  return v.is_real() ? v.re.abs() : sqrt_upper(v.norm2());
}

struct RatioBound {
  Rational cmod;
  std::vector<std::pair<Rational, Rational>> pairs;  // (top offset A, bottom offset B)
  std::vector<Rational> unpaired_bottom;
  unsigned power = 0;
  long safe_start = 1;

  // Upper bound on sup_{k >= m} |t_{k+1}/t_k|, non-increasing in m.
  Rational eval(long m) const {
    Rational r = cmod;
    const Rational k(m);
    for (const auto& [A, B] : pairs) {
      const Rational num = k + A;
      const Rational den = k + B;
      if (num > den) r = r * num / den;  // factors <= 1 are bounded by 1
    }
    for (const auto& B : unpaired_bottom) r = r / (k + B);
    if (power > 0) r = r * (Rational(m + 1) / Rational(m)).pow(power);
    return r;
  }
};

RatioBound build_ratio_bound(const TermSeries& s) {
  RatioBound rb;
  rb.cmod = mod_upper_of(s.c);
  rb.power = s.power;
  long safe = 1;
  std::vector<Rational> tops;
  std::vector<Rational> bottoms;
  for (const auto& a : s.top) {
    if (a.is_real()) {
      tops.push_back(a.re);
      if (a.re.sign() < 0) {
        const Rational lim = ceil_rational(-a.re);
        safe = std::max(safe, lim.as_long());
      }
    } else {
      tops.push_back(sqrt_upper(a.norm2()));
    }
  }
  auto add_bottom = [&](const RationalComplex& b) {
    if (b.is_real()) {
      bottoms.push_back(b.re);
      if (b.re.sign() <= 0) safe = std::max(safe, (ceil_rational(-b.re) + Rational(1)).as_long());
    } else {
      const Rational m = sqrt_upper(b.norm2());
      bottoms.push_back(-m);
      safe = std::max(safe, (ceil_rational(m) + Rational(1)).as_long());
    }
  };
  for (const auto& b : s.bottom) add_bottom(b);
  add_bottom(RationalComplex(Rational(1)));  // the 1/(x+1) factorial step
  if (s.z) {
    const Rational lim = ceil_rational(s.z->re);
    if (lim.sign() > 0) safe = std::max(safe, lim.as_long());
  }
  std::sort(tops.rbegin(), tops.rend());
  std::sort(bottoms.rbegin(), bottoms.rend());
  for (std::size_t i = 0; i < tops.size(); ++i) rb.pairs.emplace_back(tops[i], bottoms[i]);
  for (std::size_t j = tops.size(); j < bottoms.size(); ++j)
    rb.unpaired_bottom.push_back(bottoms[j]);
  rb.safe_start = safe;
  return rb;
}

Integer int_pow(long base, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

RawSum sum_series(const TermSeries& s, mpfr_prec_t prec) {
  const SeriesClass cls = classify_series(s);
  RatioBound rb;
  Rational r_target;
  if (!cls.terminating) {
    rb = build_ratio_bound(s);
    const bool balanced = s.top.size() == s.bottom.size() + 1;
    r_target = Rational(1, 2);
    if (balanced) {
      if (rb.cmod >= Rational(1))
        throw DivergentSeries("series too close to the boundary of convergence");
      r_target = std::max(r_target, (Rational(1) + rb.cmod) / Rational(2));
    }
  }
  const Rational target_scale(Integer(1), Integer(1) << (prec + 16));

  RawSum out;
  Rational abs_partial(0);
  RationalComplex base{Rational(1)};  // (tops)_x/(bottoms)_x * c^x/x! at x = 0

  for (long x = 0;; ++x) {
    RationalComplex term = base;
    if (s.power > 0)
      term = (x == 0) ? RationalComplex{} : term * RationalComplex(Rational(int_pow(x, s.power)));
    if (s.z) term = term / (*s.z - RationalComplex(Rational(x)));
    out.partial = out.partial + term;
    abs_partial += term.l1();
    out.terms += 1;

    if (cls.terminating && x == cls.support_end) {
      out.exact = true;
      break;
    }

    // advance the base factor to x+1
    RationalComplex num{Rational(1)};
    bool top_zero = false;
    for (const auto& a : s.top) {
      const RationalComplex f = a + RationalComplex(Rational(x));
      if (f.is_zero()) top_zero = true;
      num = num * f;
    }
    if (top_zero) {  // all later terms vanish
      out.exact = true;
      break;
    }
    RationalComplex den{Rational(x + 1)};
    for (const auto& b : s.bottom) den = den * (b + RationalComplex(Rational(x)));
    if (den.is_zero())
      throw InvalidParameter("bottom Pochhammer factor vanished during summation");
    base = base * s.c * num / den;

    if (!cls.terminating && x + 1 >= rb.safe_start) {
      const Rational R = rb.eval(x + 1);
      if (R <= r_target) {
        RationalComplex next = base;
        if (s.power > 0) next = next * RationalComplex(Rational(int_pow(x + 1, s.power)));
        if (s.z) next = next / (*s.z - RationalComplex(Rational(x + 1)));
        const Rational tail = next.l1() / (Rational(1) - R);
        if (tail <= target_scale * std::max(Rational(1), abs_partial)) {
          out.tail = tail;
          break;
        }
      }
    }
    if (out.terms >= kMaxTerms)
      throw Error("series did not meet its tail target within the term budget");
  }
  return out;
}

SeriesValue finalize_real(const RawSum& rs, mpfr_prec_t prec) {
  SeriesValue v;
  v.approx = BigFloat(rs.partial.re, prec);
  const Rational conv = exact_conversion_error(rs.partial.re, v.approx);
  v.tail_bound = BigFloat(rs.tail + conv, 64, MPFR_RNDU);
  v.terms_used = rs.terms;
  if (rs.exact) v.exact = rs.partial.re;
  return v;
}

ComplexSeriesValue finalize_complex(const RawSum& rs, mpfr_prec_t prec) {
  ComplexSeriesValue v;
  v.re = BigFloat(rs.partial.re, prec);
  v.im = BigFloat(rs.partial.im, prec);
  const Rational conv = exact_conversion_error(rs.partial.re, v.re) +
                        exact_conversion_error(rs.partial.im, v.im);
  v.tail_bound = BigFloat(rs.tail + conv, 64, MPFR_RNDU);
  v.terms_used = rs.terms;
  if (rs.exact) v.exact = rs.partial;
  return v;
}

std::vector<RationalComplex> lift(const std::vector<Rational>& v) {
  std::vector<RationalComplex> out;
  out.reserve(v.size());
  for (const auto& r : v) out.emplace_back(r);
  return out;
}

}  // namespace

SeriesValue pfq_eval(const std::vector<Rational>& tops,
                     const std::vector<Rational>& bottoms, const Rational& c,
                     mpfr_prec_t precision_bits) {
  TermSeries s{lift(tops), lift(bottoms), RationalComplex(c), 0, std::nullopt};
  return finalize_real(sum_series(s, precision_bits), precision_bits);
}

SeriesValue pfq_power_sum(const std::vector<Rational>& tops,
                          const std::vector<Rational>& bottoms, const Rational& c,
                          unsigned n, mpfr_prec_t precision_bits) {
  TermSeries s{lift(tops), lift(bottoms), RationalComplex(c), n, std::nullopt};
  return finalize_real(sum_series(s, precision_bits), precision_bits);
}

SeriesValue pfq_stieltjes_sum(const std::vector<Rational>& tops,
                              const std::vector<Rational>& bottoms, const Rational& c,
                              const Rational& z, mpfr_prec_t precision_bits) {
  TermSeries s{lift(tops), lift(bottoms), RationalComplex(c), 0, RationalComplex(z)};
  return finalize_real(sum_series(s, precision_bits), precision_bits);
}

ComplexSeriesValue pfq_eval_complex(const std::vector<RationalComplex>& tops,
                                    const std::vector<RationalComplex>& bottoms,
                                    const RationalComplex& c, mpfr_prec_t precision_bits) {
  TermSeries s{tops, bottoms, c, 0, std::nullopt};
  return finalize_complex(sum_series(s, precision_bits), precision_bits);
}

ComplexSeriesValue pfq_stieltjes_sum_complex(const std::vector<Rational>& tops,
                                             const std::vector<Rational>& bottoms,
                                             const Rational& c, const RationalComplex& z,
                                             mpfr_prec_t precision_bits) {
  TermSeries s{lift(tops), lift(bottoms), RationalComplex(c), 0, z};
  return finalize_complex(sum_series(s, precision_bits), precision_bits);
}

WeightTailData weight_power_tails(const std::vector<Rational>& tops,
                                  const std::vector<Rational>& bottoms,
                                  const Rational& c, const Rational& scale_abs,
                                  unsigned max_power, mpfr_prec_t precision_bits) {
  TermSeries s{lift(tops), lift(bottoms), RationalComplex(c), max_power, std::nullopt};
  const SeriesClass cls = classify_series(s);
  WeightTailData data;
  data.tails.assign(max_power + 1, Rational(0));
  if (cls.terminating) {
    data.cutoff = cls.support_end;
    return data;
  }

  const RatioBound rb = build_ratio_bound(s);
  Rational r_target(1, 2);
  if (s.top.size() == s.bottom.size() + 1) {
    if (rb.cmod >= Rational(1))
      throw DivergentSeries("series too close to the boundary of convergence");
    r_target = std::max(r_target, (Rational(1) + rb.cmod) / Rational(2));
  }
  const Rational target(Integer(1), Integer(1) << (precision_bits + 16));

  Rational rho(1);  // |rho(x)| tracked exactly via the term ratio
  long terms = 0;
  for (long x = 0;; ++x) {
    Rational num(1);
    for (const auto& a : s.top) num *= a.re + Rational(x);
    Rational den(x + 1);
    for (const auto& b : s.bottom) den *= b.re + Rational(x);
    rho = rho * c * num / den;  // rho(x+1)
    if (x + 1 >= rb.safe_start) {
      const Rational R = rb.eval(x + 1);
      if (R <= r_target) {
        // The ratio bound for power max_power dominates every lower power,
        // so one geometric sum serves all of them.
        std::vector<Rational> tails(max_power + 1);
        Rational worst(0);
        for (unsigned n = 0; n <= max_power; ++n) {
          tails[n] = rho.abs() * (scale_abs * Rational(x + 1)).pow(n) /
                     Rational(factorial(n)) / (Rational(1) - R);
          worst = std::max(worst, tails[n]);
        }
        if (worst <= target) {
          data.cutoff = x;
          data.tails = std::move(tails);
          return data;
        }
      }
    }
    if (++terms >= kMaxTerms)
      throw Error("series did not meet its tail target within the term budget");
  }
}

}  // namespace hypermoment
