#include "hypermoment/families.hpp"

#include <algorithm>

#include "hypermoment/combinatorics.hpp"
#include "hypermoment/errors.hpp"
#include "hypermoment/transforms.hpp"

namespace hypermoment {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

Rational need_c(const FamilyParams& p, const std::string& fam) {
  if (!p.c) throw DomainError(fam + " needs --c");
  return *p.c;
}

long need_N(const FamilyParams& p, const std::string& fam) {
  if (!p.N) throw DomainError(fam + " needs --N");
  require(*p.N >= 0, fam + ": N must be a non-negative integer");
  return *p.N;
}

const Rational& need_alpha(const FamilyParams& p, std::size_t count,
                           const std::string& fam, std::size_t i = 0) {
  if (p.alphas.size() != count)
    throw DomainError(fam + " needs exactly " + std::to_string(count) +
                      " --alpha value(s)");
  return p.alphas[i];
}

const Rational& need_beta(const FamilyParams& p, std::size_t count,
                          const std::string& fam, std::size_t i = 0) {
  if (p.betas.size() != count)
    throw DomainError(fam + " needs exactly " + std::to_string(count) +
                      " --beta value(s)");
  return p.betas[i];
}

}  // namespace

BuiltFamily make_charlier(const Rational& c) {
  require(c.sign() > 0, "Charlier: c > 0");
  return BuiltFamily{WeightSpec{{}, {}, c}, Rational(1)};
}

BuiltFamily make_meixner(const Rational& alpha, const Rational& c) {
  require(alpha.sign() > 0, "Meixner: alpha > 0");
  require(c.sign() > 0 && c < Rational(1), "Meixner: 0 < c < 1");
  return BuiltFamily{WeightSpec{{alpha}, {}, c}, Rational(1)};
}

BuiltFamily make_gen_charlier(const Rational& beta, const Rational& c) {
  require(beta > Rational(-1), "generalized Charlier: beta > -1");
  require(c.sign() > 0, "generalized Charlier: c > 0");
  return BuiltFamily{WeightSpec{{}, {beta}, c}, Rational(1)};
}

BuiltFamily make_gen_meixner(const Rational& alpha, const Rational& beta,
                             const Rational& c) {
  require(alpha.sign() > 0, "generalized Meixner: alpha > 0");
  require(beta > Rational(-1), "generalized Meixner: beta > -1");
  require(c.sign() > 0, "generalized Meixner: c > 0");
  return BuiltFamily{WeightSpec{{alpha}, {beta}, c}, Rational(1)};
}

BuiltFamily make_gen_krawtchouk(const Rational& alpha, long N, const Rational& c) {
  require(alpha.sign() > 0, "generalized Krawtchouk: alpha > 0");
  require(N >= 0, "generalized Krawtchouk: N must be a non-negative integer");
  require(c.sign() < 0, "generalized Krawtchouk: c < 0");
  return BuiltFamily{WeightSpec{{alpha, Rational(-N)}, {}, c}, Rational(1)};
}

BuiltFamily make_gen_hahn1(const Rational& alpha1, const Rational& alpha2,
                           const Rational& beta, const Rational& c) {
  require(alpha1.sign() > 0 && alpha2.sign() > 0,
          "generalized Hahn I: alpha_1, alpha_2 > 0");
  require(beta > Rational(-1), "generalized Hahn I: beta > -1");
  require(c.sign() > 0 && c < Rational(1), "generalized Hahn I: 0 < c < 1");
  return BuiltFamily{WeightSpec{{alpha1, alpha2}, {beta}, c}, Rational(1)};
}

BuiltFamily krawtchouk_reduce(const Rational& p, unsigned N) {
  require(p.sign() > 0 && p < Rational(1), "Krawtchouk: 0 < p < 1");
  const Rational c = p / (p - Rational(1));
  BuiltFamily fam;
  fam.spec = WeightSpec{{Rational(-static_cast<long>(N))}, {}, c};
  fam.moment_prefactor = (Rational(1) - p).pow(static_cast<long>(N));
  return fam;
}

BuiltFamily hahn_reduce(const Rational& alpha, const Rational& beta, unsigned N) {
  const Rational lo(-static_cast<long>(N));
  require(!(alpha >= lo && alpha <= Rational(-1)),
          "Hahn: alpha must avoid [-N, -1]");
  require(!(beta >= lo && beta <= Rational(-1)), "Hahn: beta must avoid [-N, -1]");
  BuiltFamily fam;
  fam.spec = WeightSpec{{alpha + Rational(1), Rational(-static_cast<long>(N))},
                        {-Rational(static_cast<long>(N)) - beta - Rational(1)},
                        Rational(1)};
  fam.moment_prefactor =
      pochhammer(beta + Rational(1), N) / Rational(factorial(N));
  return fam;
}

Poly bell_poly(unsigned n) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k) c[k] = stirling2(n, k);
  return Poly(std::move(c));
}

Poly meixner_poly(unsigned n, const Rational& alpha) {
  const Poly one_minus_c({Rational(1), Rational(-1)});
  Poly acc;
  for (unsigned k = 0; k <= n; ++k) {
    const Rational s = stirling2(n, k);
    if (s.is_zero()) continue;
    Poly term = Poly::monomial(s * pochhammer(alpha, k), k);
    acc = acc + term * truncated_pow(one_minus_c, n - k, n);
  }
  return acc;
}

Poly krawtchouk_moment_poly(unsigned n, unsigned N) {
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k) {
    const Rational s = stirling2(n, k);
    if (s.is_zero()) continue;
    c[k] = s * Rational(Integer(binomial(N, k) * factorial(k)));
  }
  return Poly(std::move(c));
}

Rational hahn_moment(unsigned n, const Rational& alpha, const Rational& beta,
                     unsigned N) {
  Rational acc(0);
  for (unsigned k = 0; k <= std::min(n, N); ++k) {
    const Rational s = stirling2(n, k);
    if (s.is_zero() && n > 0) continue;
    acc += s * pochhammer(alpha + Rational(1), k) *
           pochhammer(alpha + beta + Rational(2) + Rational(k), N - k) /
           Rational(factorial(N - k));
  }
  return acc;
}

HahnEgfResult hahn_egf_check(const Rational& alpha, const Rational& beta,
                             unsigned N, unsigned order) {
  // Left side: exact moments over z^n/n!.
  std::vector<Rational> lhs(order + 1);
  Rational inv_fact(1);
  for (unsigned n = 0; n <= order; ++n) {
    if (n > 0) inv_fact /= Rational(static_cast<long>(n));
    lhs[n] = hahn_moment(n, alpha, beta, N) * inv_fact;
  }

  // Right side: mu_0^H * 2F1[-N, alpha+1; alpha+beta+2; u] at u = 1 - e^z,
  // as an exact truncated z-slice. The 2F1 terminates at degree N.
  const Rational mu0 = pochhammer(alpha + beta + Rational(2), N) / Rational(factorial(N));
  Poly u = Poly::constant(Rational(1)) - exp_slice(Rational(1), order);  // 1 - e^z
  Poly rhs_poly;
  Poly u_pow = Poly::constant(Rational(1));
  Rational coeff(1);
  for (unsigned k = 0; k <= N; ++k) {
    if (k > 0) {
      coeff = coeff * (Rational(-static_cast<long>(N)) + Rational(k - 1)) *
              (alpha + Rational(k)) /
              ((alpha + beta + Rational(1) + Rational(k)) * Rational(k));
      u_pow = truncated_mul(u_pow, u, order);
    }
    rhs_poly = rhs_poly + coeff * u_pow;
  }
  rhs_poly = mu0 * rhs_poly;

  HahnEgfResult result;
  result.ok = true;
  for (unsigned n = 0; n <= order; ++n) {
    const Rational dev = (lhs[n] - rhs_poly.coeff(n)).abs();
    result.max_deviation = std::max(result.max_deviation, dev);
    if (!dev.is_zero()) result.ok = false;
  }
  return result;
}

const std::vector<FamilyDescriptor>& family_catalog() {
  static const std::vector<FamilyDescriptor> catalog = {
      {Family::Charlier, "charlier", "--c (c > 0)", 1, 0, 0,
       [](const FamilyParams& p) { return make_charlier(need_c(p, "charlier")); }},
      {Family::Meixner, "meixner", "--alpha, --c (alpha > 0, 0 < c < 1)", 1, -1, 0,
       [](const FamilyParams& p) {
         return make_meixner(need_alpha(p, 1, "meixner"), need_c(p, "meixner"));
       }},
      {Family::Krawtchouk, "krawtchouk", "--c (success prob, 0 < p < 1), --N", 1, -1, 0,
       [](const FamilyParams& p) {
         return krawtchouk_reduce(need_c(p, "krawtchouk"),
                                  static_cast<unsigned>(need_N(p, "krawtchouk")));
       }},
      {Family::GenCharlier, "gen-charlier", "--beta, --c (beta > -1, c > 0)", 1, 0, 1,
       [](const FamilyParams& p) {
         return make_gen_charlier(need_beta(p, 1, "gen-charlier"),
                                  need_c(p, "gen-charlier"));
       }},
      {Family::GenMeixner, "gen-meixner",
       "--alpha, --beta, --c (alpha > 0, beta > -1, c > 0)", 1, 0, 1,
       [](const FamilyParams& p) {
         return make_gen_meixner(need_alpha(p, 1, "gen-meixner"),
                                 need_beta(p, 1, "gen-meixner"),
                                 need_c(p, "gen-meixner"));
       }},
      {Family::GenKrawtchouk, "gen-krawtchouk",
       "--alpha, --N, --c (alpha > 0, c < 0)", 0, 1, 1,
       [](const FamilyParams& p) {
         return make_gen_krawtchouk(need_alpha(p, 1, "gen-krawtchouk"),
                                    need_N(p, "gen-krawtchouk"),
                                    need_c(p, "gen-krawtchouk"));
       }},
      {Family::GenHahnI, "gen-hahn-1",
       "--alpha a1,a2, --beta, --c (a1,a2 > 0, beta > -1, 0 < c < 1)", 1, -1, 1,
       [](const FamilyParams& p) {
         if (p.alphas.size() != 2)
           throw DomainError("gen-hahn-1 needs --alpha a1,a2");
         return make_gen_hahn1(p.alphas[0], p.alphas[1],
                               need_beta(p, 1, "gen-hahn-1"),
                               need_c(p, "gen-hahn-1"));
       }},
      {Family::GenHahnII, "gen-hahn-2",
       "--alpha a1,a2,a3, --beta b1,b2, --c (a_i > 0, b_j > -1, 0 < c < 1)", 1, -1, 2,
       [](const FamilyParams& p) {
         if (p.alphas.size() != 3 || p.betas.size() != 2)
           throw DomainError("gen-hahn-2 needs --alpha a1,a2,a3 and --beta b1,b2");
         for (const auto& a : p.alphas)
           require(a.sign() > 0, "gen-hahn-2: alphas must be positive");
         for (const auto& b : p.betas)
           require(b > Rational(-1), "gen-hahn-2: betas must exceed -1");
         const Rational c = need_c(p, "gen-hahn-2");
         require(c.sign() > 0 && c < Rational(1), "gen-hahn-2: 0 < c < 1");
         return BuiltFamily{WeightSpec{p.alphas, p.betas, c}, Rational(1)};
       }},
      {Family::Hahn, "hahn", "--alpha, --beta, --N (alpha, beta not in [-N,-1])", 1,
       -1, 1,
       [](const FamilyParams& p) {
         return hahn_reduce(need_alpha(p, 1, "hahn"), need_beta(p, 1, "hahn"),
                            static_cast<unsigned>(need_N(p, "hahn")));
       }},
  };
  return catalog;
}

const FamilyDescriptor& find_family(const std::string& name) {
  for (const auto& fam : family_catalog())
    if (fam.name == name) return fam;
  throw DomainError("unknown family '" + name + "'");
}

}  // namespace hypermoment
