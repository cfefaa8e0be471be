#include "hypermoment/weight.hpp"

#include <sstream>

#include "hypermoment/combinatorics.hpp"
#include "hypermoment/errors.hpp"

namespace hypermoment {

namespace {

// Largest x with (a)_x != 0 over real non-positive-integer entries; -1 if none.
long terminating_index(const std::vector<Rational>& params) {
  long best = -1;
  for (const auto& a : params) {
    if (!a.is_nonpositive_integer()) continue;
    long n = (-a).as_long();
    if (best < 0 || n < best) best = n;
  }
  return best;
}

}  // namespace

Convergence WeightSpec::convergence() const {
  if (c.is_zero() || terminating_index(alphas) >= 0) return Convergence::Terminating;
  if (p() < q() + 1) return Convergence::Entire;
  if (p() == q() + 1 && c.abs() < Rational(1)) return Convergence::Disk;
  return Convergence::Divergent;
}

long WeightSpec::support_end() const {
  if (c.is_zero()) return 0;
  const long n = terminating_index(alphas);
  if (n < 0) throw InvalidParameter("support_end on a non-terminating weight");
  return n;
}

bool WeightSpec::nonstandard_parameters() const {
  for (const auto& b : betas)
    if (b <= Rational(-1)) return true;
  return false;
}

std::vector<Rational> WeightSpec::bottoms() const {
  std::vector<Rational> bs;
  bs.reserve(betas.size());
  for (const auto& b : betas) bs.push_back(b + Rational(1));
  return bs;
}

std::string WeightSpec::to_string() const {
  std::ostringstream os;
  os << "rho(x; alpha=[";
  for (std::size_t i = 0; i < alphas.size(); ++i)
    os << (i ? "," : "") << alphas[i].to_string();
  os << "], beta=[";
  for (std::size_t i = 0; i < betas.size(); ++i)
    os << (i ? "," : "") << betas[i].to_string();
  os << "], c=" << c.to_string() << ")";
  return os.str();
}

Poly RegimeClass::prefactor() const {
  return Poly({Rational(lambda), Rational(tau)});
}

Rational RegimeClass::prefactor_at(const Rational& c) const {
  return Rational(lambda) + c * Rational(tau);
}

RegimeClass classify(const WeightSpec& spec) {
  RegimeClass r;
  const std::size_t p = spec.p();
  const std::size_t q1 = spec.q() + 1;
  if (q1 > p) {
    r.lambda = 1;
    r.tau = 0;
  } else if (q1 == p) {
    r.lambda = 1;
    r.tau = -1;
  } else {
    r.lambda = 0;
    r.tau = 1;
  }
  r.xi = static_cast<unsigned>(std::max<long>(static_cast<long>(p) - 1,
                                              static_cast<long>(spec.q())));
  return r;
}

PearsonPair pearson(const WeightSpec& spec) {
  PearsonPair pp;
  Poly phi({Rational(0), Rational(1)});  // x
  for (const auto& b : spec.betas) phi = phi * Poly({b, Rational(1)});
  Poly eta = Poly::constant(spec.c);
  for (const auto& a : spec.alphas) eta = eta * Poly({a, Rational(1)});
  const long s = std::max(phi.degree() - 2, (phi - eta).degree() - 1);
  pp.phi = std::move(phi);
  pp.eta = std::move(eta);
  pp.class_s = s > 0 ? static_cast<unsigned>(s) : 0;
  return pp;
}

Rational weight_at(const WeightSpec& spec, unsigned x) {
  const long term_end = spec.c.is_zero() ? 0 : terminating_index(spec.alphas);
  Rational value(1);
  for (unsigned m = 0; m < x; ++m) {
    if (term_end >= 0 && static_cast<long>(m) >= term_end + 1) return Rational(0);
    Rational num(1);
    for (const auto& a : spec.alphas) num *= a + Rational(static_cast<long>(m));
    if (num.is_zero()) return Rational(0);  // termination at m reached first
    Rational den(static_cast<long>(m) + 1);
    for (const auto& b : spec.betas) den *= b + Rational(1) + Rational(static_cast<long>(m));
    if (den.is_zero())
      throw InvalidParameter("weight undefined: (beta+1)_x vanishes at or before x = " +
                             std::to_string(x));
    value *= num * spec.c / den;
  }
  return value;
}

SigmaCoeffs sigma_coeffs(const WeightSpec& spec) {
  const std::size_t p = spec.p();
  const std::size_t q1 = spec.q() + 1;
  const std::size_t lead = std::max(p, q1);  // = xi + 1

  // Operator identity: sum_k L_k * theta^k annihilates mu_0, where
  //   L_k = [k >= 1] e_{q+1-k}(beta) - c * e_{p-k}(alpha) [k <= p].
  std::vector<Poly> L(lead + 1);
  for (std::size_t k = 0; k <= lead; ++k) {
    Poly term;
    if (k >= 1 && k <= q1)
      term = Poly::constant(elementary_symmetric(static_cast<unsigned>(q1 - k), spec.betas));
    if (k <= p) {
      const Rational ek = elementary_symmetric(static_cast<unsigned>(p - k), spec.alphas);
      term = term - Poly({Rational(0), ek});  // subtract c * e_{p-k}(alpha)
    }
    L[k] = std::move(term);
  }
  // Move the leading term across: (lambda + c tau) theta^{xi+1} = sum sigma_k theta^k.
  // L_lead is +-(lambda + c tau); the sign fixes the sign of the sigmas.
  const int s = (q1 < p) ? -1 : 1;
  SigmaCoeffs out;
  out.sigmas.reserve(lead);
  for (std::size_t k = 0; k < lead; ++k)
    out.sigmas.push_back(s == 1 ? -L[k] : L[k]);
  return out;
}

CompanionMatrix companion_matrix(const WeightSpec& spec) {
  const RegimeClass regime = classify(spec);
  const SigmaCoeffs sig = sigma_coeffs(spec);
  const std::size_t n = regime.xi + 1;
  CompanionMatrix m;
  m.entries.assign(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i + 1 < n; ++i) m.entries[i][i + 1] = regime.prefactor();
  for (std::size_t j = 0; j < n; ++j) m.entries[n - 1][j] = sig.sigmas[j];
  return m;
}

}  // namespace hypermoment
