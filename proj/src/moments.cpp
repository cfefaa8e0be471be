#include "hypermoment/moments.hpp"

#include "hypermoment/combinatorics.hpp"
#include "hypermoment/errors.hpp"

namespace hypermoment {

std::string to_string(MomentRoute route) {
  switch (route) {
    case MomentRoute::proposition: return "proposition";
    case MomentRoute::stirling: return "stirling";
    case MomentRoute::oracle: return "oracle";
  }
  return "?";
}

std::vector<PolyVector> poly_vectors(const WeightSpec& spec, unsigned n_max) {
  const RegimeClass regime = classify(spec);
  const SigmaCoeffs sig = sigma_coeffs(spec);
  const std::size_t dim = regime.xi + 1;
  const Poly pref = regime.prefactor();                        // lambda + tau c
  const Poly c_pref = Poly({Rational(0), Rational(1)}) * pref; // c (lambda + tau c)

  std::vector<PolyVector> out;
  out.reserve(n_max + 1);
  PolyVector current;
  current.entries.assign(dim, Poly());
  current.entries[0] = Poly::constant(Rational(1));
  current.n = 0;
  out.push_back(current);

  for (unsigned n = 0; n < n_max; ++n) {
    PolyVector next;
    next.n = n + 1;
    next.entries.assign(dim, Poly());
    // n tau c, the shift from d/dc acting through the prefactor power
    const Poly shift({Rational(0), Rational(static_cast<long>(n) * regime.tau)});
    for (std::size_t i = 0; i < dim; ++i) {
      Poly e = c_pref * current.entries[i].derivative();
      if (i >= 1) e = e + pref * current.entries[i - 1];   // subdiagonal of M^T
      e = e + sig.sigmas[i] * current.entries[dim - 1];    // last column of M^T
      e = e - shift * current.entries[i];
      next.entries[i] = std::move(e);
    }
    out.push_back(next);
    current = std::move(next);
  }
  return out;
}

namespace {

SeriesValue stirling_moment_value(const WeightSpec& spec, unsigned n,
                                  mpfr_prec_t prec) {
  SeriesValue acc = sv_zero(prec);
  for (unsigned k = (n == 0 ? 0 : 1); k <= n; ++k) {
    const Rational s = stirling2(n, k);
    if (s.is_zero()) continue;
    acc = sv_add(acc, sv_scale(generalized_moment(spec, k, prec), s));
  }
  return acc;
}

}  // namespace

MomentBase base_moments(const WeightSpec& spec, mpfr_prec_t precision_bits) {
  const RegimeClass regime = classify(spec);
  MomentBase base;
  base.spec = spec;
  base.values.reserve(regime.xi + 1);
  for (unsigned k = 0; k <= regime.xi; ++k)
    base.values.push_back(stirling_moment_value(spec, k, precision_bits));
  return base;
}

SeriesValue generalized_moment(const WeightSpec& spec, unsigned k,
                               mpfr_prec_t precision_bits) {
  const Rational top = pochhammer_all(spec.alphas, k);
  if (top.is_zero()) return sv_zero(precision_bits);  // support ends below k
  const std::vector<Rational> bots = spec.bottoms();
  const Rational bottom = pochhammer_all(bots, k);
  if (bottom.is_zero())
    throw InvalidParameter("generalized moment undefined: (beta+1)_k vanishes");
  std::vector<Rational> shifted_top = spec.alphas;
  for (auto& a : shifted_top) a += Rational(static_cast<long>(k));
  std::vector<Rational> shifted_bottom = bots;
  for (auto& b : shifted_bottom) b += Rational(static_cast<long>(k));
  const Rational prefactor = top / bottom * spec.c.pow(static_cast<long>(k));
  return sv_scale(pfq_eval(shifted_top, shifted_bottom, spec.c, precision_bits),
                  prefactor);
}

MomentResult moment(const WeightSpec& spec, unsigned n, mpfr_prec_t precision_bits) {
  const RegimeClass regime = classify(spec);
  const Rational pref = regime.prefactor_at(spec.c);
  if (pref.is_zero() && n >= 1)
    throw SingularPrefactor("lambda + c*tau = 0 for " + spec.to_string() +
                            "; use the stirling or oracle route");
  const MomentBase base = base_moments(spec, precision_bits);
  const PolyVector pn = poly_vectors(spec, n).back();
  SeriesValue acc = sv_zero(precision_bits);
  for (std::size_t i = 0; i < pn.entries.size(); ++i)
    acc = sv_add(acc, sv_scale(base.values[i], pn.entries[i].eval(spec.c)));
  if (n >= 1) acc = sv_scale(acc, pref.pow(-static_cast<long>(n)));
  return MomentResult{n, std::move(acc), MomentRoute::proposition};
}

MomentResult moment_stirling(const WeightSpec& spec, unsigned n,
                             mpfr_prec_t precision_bits) {
  return MomentResult{n, stirling_moment_value(spec, n, precision_bits),
                      MomentRoute::stirling};
}

MomentResult moment_oracle(const WeightSpec& spec, unsigned n,
                           mpfr_prec_t precision_bits) {
  SeriesValue v = pfq_power_sum(spec.alphas, spec.bottoms(), spec.c, n, precision_bits);
  return MomentResult{n, std::move(v), MomentRoute::oracle};
}

}  // namespace hypermoment
