#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypermoment/bigfloat.hpp"
#include "hypermoment/poly.hpp"
#include "hypermoment/weight.hpp"

namespace hypermoment {

enum class Family {
  Charlier,
  Meixner,
  Krawtchouk,
  GenCharlier,
  GenMeixner,
  GenKrawtchouk,
  GenHahnI,
  GenHahnII,
  Hahn,
};

/// Parameters collected from the CLI flags (--alpha, --beta, --c, --N).
/// For Krawtchouk the success probability is passed through --c.
struct FamilyParams {
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
  std::optional<Rational> c;
  std::optional<long> N;
};

/// A family instance reduced to hypergeometric-weight form. The family's
/// own moments are moment_prefactor times the moments of `spec` (the
/// prefactor is 1 except for the Krawtchouk and Hahn reductions).
struct BuiltFamily {
  WeightSpec spec;
  Rational moment_prefactor{1};
};

struct FamilyDescriptor {
  Family id;
  std::string name;  // CLI spelling
  std::string parameter_summary;
  int lambda;
  int tau;
  unsigned xi;
  std::function<BuiltFamily(const FamilyParams&)> build;
};

const std::vector<FamilyDescriptor>& family_catalog();
/// Throws DomainError for unknown names.
const FamilyDescriptor& find_family(const std::string& name);

BuiltFamily make_charlier(const Rational& c);
BuiltFamily make_meixner(const Rational& alpha, const Rational& c);
BuiltFamily make_gen_charlier(const Rational& beta, const Rational& c);
BuiltFamily make_gen_meixner(const Rational& alpha, const Rational& beta,
                             const Rational& c);
BuiltFamily make_gen_krawtchouk(const Rational& alpha, long N, const Rational& c);
BuiltFamily make_gen_hahn1(const Rational& alpha1, const Rational& alpha2,
                           const Rational& beta, const Rational& c);

/// Bell polynomial sum_k {n,k} c^k (the Charlier moment polynomial).
Poly bell_poly(unsigned n);
/// Meixner moment polynomial sum_k {n,k} (alpha)_k c^k (1-c)^{n-k}, expanded.
Poly meixner_poly(unsigned n, const Rational& alpha);
/// Krawtchouk moment polynomial sum_k {n,k} C(N,k) k! p^k; equals the n-th
/// moment since the weight has total mass 1.
Poly krawtchouk_moment_poly(unsigned n, unsigned N);

/// Krawtchouk weight as a rescaled Meixner-form weight: alpha = -N,
/// c = p/(p-1), moment prefactor (1-p)^N. Requires 0 < p < 1.
BuiltFamily krawtchouk_reduce(const Rational& p, unsigned N);

/// Hahn weight as a rescaled hypergeometric-form weight at c = 1:
/// alphas = (alpha+1, -N), beta = -N-beta-1, prefactor (beta+1)_N / N!.
BuiltFamily hahn_reduce(const Rational& alpha, const Rational& beta, unsigned N);

/// Exact Hahn moment via the finite Stirling sum
/// sum_k {n,k} (alpha+1)_k (alpha+beta+2+k)_{N-k} / (N-k)!.
Rational hahn_moment(unsigned n, const Rational& alpha, const Rational& beta,
                     unsigned N);

struct HahnEgfResult {
  bool ok = false;
  Rational max_deviation{0};  // exact: both slices are finite rational sums
};

/// Compares the slice of sum_n mu_n^H z^n/n! against
/// mu_0^H * 2F1[-N, alpha+1; alpha+beta+2; 1-e^z] expanded as a z-slice.
HahnEgfResult hahn_egf_check(const Rational& alpha, const Rational& beta,
                             unsigned N, unsigned order);

}  // namespace hypermoment
