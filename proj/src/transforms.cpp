#include "hypermoment/transforms.hpp"

#include "hypermoment/combinatorics.hpp"
#include "hypermoment/errors.hpp"

namespace hypermoment {

Poly exp_slice(const Rational& scale, unsigned order) {
  std::vector<Rational> c(order + 1);
  Rational term(1);
  c[0] = term;
  for (unsigned j = 1; j <= order; ++j) {
    term = term * scale / Rational(static_cast<long>(j));
    c[j] = term;
  }
  return Poly(std::move(c));
}

Poly truncated_mul(const Poly& a, const Poly& b, unsigned order) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(order + 1, Rational(0));
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size() && i <= order; ++i)
    for (std::size_t j = 0; j < bc.size() && i + j <= order; ++j)
      c[i + j] += ac[i] * bc[j];
  return Poly(std::move(c));
}

Poly truncated_pow(const Poly& base, unsigned e, unsigned order) {
  Poly acc = Poly::constant(Rational(1));
  for (unsigned i = 0; i < e; ++i) acc = truncated_mul(acc, base, order);
  return acc;
}

TaylorSlice egf_moments(const WeightSpec& spec, unsigned order,
                        mpfr_prec_t precision_bits) {
  TaylorSlice slice;
  slice.coeffs.reserve(order + 1);
  Rational inv_fact(1);
  for (unsigned n = 0; n <= order; ++n) {
    if (n > 0) inv_fact /= Rational(static_cast<long>(n));
    slice.coeffs.push_back(
        sv_scale(moment_oracle(spec, n, precision_bits).value, inv_fact));
  }
  return slice;
}

TaylorSlice composite_egf_slice(const WeightSpec& spec, const Rational& scale_a,
                                unsigned order, mpfr_prec_t precision_bits) {
  const WeightTailData tail_data =
      weight_power_tails(spec.alphas, spec.bottoms(), spec.c, scale_a.abs(),
                         order, precision_bits);

  // Accumulate sum_{x <= cutoff} rho(x) * E(w)^x (mod w^{order+1}) with
  // E = exp slice of scale_a * w; coefficient n of the full composite differs
  // from this partial sum by at most tails[n].
  const Poly e_slice = exp_slice(scale_a, order);
  const std::vector<Rational> bottoms = spec.bottoms();
  Poly e_pow = Poly::constant(Rational(1));
  std::vector<Rational> partial(order + 1, Rational(0));
  Rational rho(1);
  for (long x = 0;; ++x) {
    for (unsigned n = 0; n <= order; ++n) partial[n] += rho * e_pow.coeff(n);
    if (x == tail_data.cutoff) break;
    Rational num(1);
    for (const auto& a : spec.alphas) num *= a + Rational(x);
    Rational den(x + 1);
    for (const auto& b : bottoms) den *= b + Rational(x);
    rho = rho * spec.c * num / den;
    e_pow = truncated_mul(e_pow, e_slice, order);
  }

  const bool exact = spec.terminating();
  TaylorSlice slice;
  slice.coeffs.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    SeriesValue v = sv_from_rational(partial[n], precision_bits);
    if (!exact) {
      v.exact.reset();
      v.tail_bound = BigFloat::add_up(
          v.tail_bound, BigFloat(tail_data.tails[n], 64, MPFR_RNDU));
    }
    v.terms_used = tail_data.cutoff + 1;
    slice.coeffs.push_back(std::move(v));
  }
  return slice;
}

CheckResult egf_compose_check(const WeightSpec& spec, unsigned order,
                              mpfr_prec_t precision_bits) {
  const RegimeClass regime = classify(spec);
  const TaylorSlice lhs = composite_egf_slice(
      spec, regime.prefactor_at(spec.c), order, precision_bits);

  const MomentBase base = base_moments(spec, precision_bits);
  const auto vectors = poly_vectors(spec, order);

  CheckResult result;
  result.ok = true;
  result.max_deviation = BigFloat(64);
  Rational inv_fact(1);
  for (unsigned n = 0; n <= order; ++n) {
    if (n > 0) inv_fact /= Rational(static_cast<long>(n));
    SeriesValue rhs = sv_zero(precision_bits);
    for (std::size_t i = 0; i < base.values.size(); ++i)
      rhs = sv_add(rhs, sv_scale(base.values[i], vectors[n].entries[i].eval(spec.c)));
    rhs = sv_scale(rhs, inv_fact);
    const BigFloat dev = sv_delta(lhs.coeffs[n], rhs);
    if (dev > result.max_deviation) result.max_deviation = dev;
    if (!sv_within_bounds(lhs.coeffs[n], rhs)) result.ok = false;
  }
  return result;
}

namespace {

void require_off_support(const Rational& z) {
  if (z.is_integer() && z.sign() >= 0)
    throw InvalidParameter("z = " + z.to_string() + " lies in {0, 1, 2, ...}");
}

std::vector<Rational> stieltjes_tops(const WeightSpec& spec, const Rational& z) {
  std::vector<Rational> tops{-z};
  tops.insert(tops.end(), spec.alphas.begin(), spec.alphas.end());
  return tops;
}

std::vector<Rational> stieltjes_bottoms(const WeightSpec& spec, const Rational& z) {
  std::vector<Rational> bottoms{Rational(1) - z};
  const auto bs = spec.bottoms();
  bottoms.insert(bottoms.end(), bs.begin(), bs.end());
  return bottoms;
}

}  // namespace

SeriesValue stieltjes_eval(const WeightSpec& spec, const Rational& z,
                           mpfr_prec_t precision_bits) {
  require_off_support(z);
  SeriesValue f = pfq_eval(stieltjes_tops(spec, z), stieltjes_bottoms(spec, z),
                           spec.c, precision_bits);
  return sv_scale(f, Rational(1) / z);
}

ComplexSeriesValue stieltjes_eval(const WeightSpec& spec, const RationalComplex& z,
                                  mpfr_prec_t precision_bits) {
  if (z.is_real()) require_off_support(z.re);
  std::vector<RationalComplex> tops{RationalComplex(Rational(0)) - z};
  for (const auto& a : spec.alphas) tops.emplace_back(a);
  std::vector<RationalComplex> bottoms{RationalComplex(Rational(1)) - z};
  for (const auto& b : spec.bottoms()) bottoms.emplace_back(b);
  ComplexSeriesValue f =
      pfq_eval_complex(tops, bottoms, RationalComplex(spec.c), precision_bits);
  // multiply by 1/z exactly, then refresh the float views
  const RationalComplex inv = RationalComplex(Rational(1)) / z;
  const Rational inv_mod = sqrt_upper(inv.norm2());
  ComplexSeriesValue out;
  if (f.exact) {
    const RationalComplex v = *f.exact * inv;
    out.re = BigFloat(v.re, precision_bits);
    out.im = BigFloat(v.im, precision_bits);
    out.tail_bound = BigFloat(64);
    out.exact = v;
  } else {
    const BigFloat ire(inv.re, precision_bits);
    const BigFloat iim(inv.im, precision_bits);
    out.re = f.re * ire - f.im * iim;
    out.im = f.re * iim + f.im * ire;
    out.tail_bound = BigFloat::mul_up(f.tail_bound, BigFloat(inv_mod, 64, MPFR_RNDU));
    // rounding slop of the four products, folded in coarsely
    out.tail_bound = BigFloat::add_up(
        out.tail_bound, BigFloat::mul_up(BigFloat::add_up(out.re.abs(), out.im.abs()),
                                         BigFloat::pow2(-precision_bits + 3, 32)));
  }
  out.terms_used = f.terms_used;
  return out;
}

SeriesValue stieltjes_oracle(const WeightSpec& spec, const Rational& z,
                             mpfr_prec_t precision_bits) {
  require_off_support(z);
  return pfq_stieltjes_sum(spec.alphas, spec.bottoms(), spec.c, z, precision_bits);
}

ComplexSeriesValue stieltjes_oracle(const WeightSpec& spec, const RationalComplex& z,
                                    mpfr_prec_t precision_bits) {
  if (z.is_real()) require_off_support(z.re);
  return pfq_stieltjes_sum_complex(spec.alphas, spec.bottoms(), spec.c, z,
                                   precision_bits);
}

UVPair gen_charlier_uv(const Rational& beta, const Rational& c, const Rational& z,
                       mpfr_prec_t precision_bits) {
  UVPair uv;
  uv.U = sv_scale(pfq_eval({Rational(1)}, {Rational(1) - z, -beta - z}, c,
                           precision_bits),
                  Rational(1) / z);
  uv.V = sv_scale(pfq_eval({Rational(1)}, {Rational(1) - z, Rational(1) - beta - z},
                           c, precision_bits),
                  Rational(1) / (z * (z + beta)));
  return uv;
}

UVPair gen_meixner_uv(const Rational& alpha, const Rational& beta, const Rational& c,
                      const Rational& z, mpfr_prec_t precision_bits) {
  UVPair uv;
  const SeriesValue f_u =
      pfq_eval({Rational(1), -alpha - z}, {Rational(1) - z, -beta - z}, -c,
               precision_bits);
  uv.U = sv_add(sv_from_rational(Rational(1) / (z + alpha), precision_bits),
                sv_scale(f_u, alpha / (z * (z + alpha))));
  const SeriesValue f_v =
      pfq_eval({Rational(1), Rational(1) - alpha - z},
               {Rational(1) - z, Rational(1) - beta - z}, -c, precision_bits);
  uv.V = sv_scale(f_v, Rational(1) / (z * (z + beta)));
  return uv;
}

CheckResult stieltjes_P_identity(StieltjesFamily family,
                                 const std::optional<Rational>& alpha,
                                 const Rational& beta, const Rational& c,
                                 const Rational& z, mpfr_prec_t precision_bits) {
  require_off_support(z);
  UVPair uv;
  SeriesValue mu0, mu1;
  WeightSpec spec;
  if (family == StieltjesFamily::GenCharlier) {
    uv = gen_charlier_uv(beta, c, z, precision_bits);
    spec = WeightSpec{{}, {beta}, c};
  } else {
    if (!alpha) throw InvalidParameter("generalized Meixner identity needs alpha");
    uv = gen_meixner_uv(*alpha, beta, c, z, precision_bits);
    spec = WeightSpec{{*alpha}, {beta}, c};
  }
  const MomentBase base = base_moments(spec, precision_bits);
  mu0 = base.values[0];
  mu1 = base.values[1];

  const SeriesValue lhs = sv_add(sv_mul(uv.U, mu0), sv_mul(uv.V, mu1));
  const SeriesValue rhs = stieltjes_eval(spec, z, precision_bits);

  CheckResult result;
  result.max_deviation = sv_delta(lhs, rhs);
  result.ok = sv_within_bounds(lhs, rhs);
  return result;
}

}  // namespace hypermoment
