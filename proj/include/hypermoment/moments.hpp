#pragma once

#include <string>
#include <vector>

#include "hypermoment/poly.hpp"
#include "hypermoment/series.hpp"
#include "hypermoment/weight.hpp"

namespace hypermoment {

/// The (xi+1)-vector of exact polynomials in c satisfying
///   P_0 = (1, 0, ..., 0),
///   P_{n+1} = c (lambda + c tau) P_n' + (M^T - n tau c I) P_n,
/// from which mu_n = (lambda + c tau)^{-n} P_n . (mu_0, ..., mu_xi).
struct PolyVector {
  std::vector<Poly> entries;
  unsigned n = 0;
};

/// The first xi+1 moments of a weight, each with its error bound; exact
/// rationals for terminating weights.
struct MomentBase {
  std::vector<SeriesValue> values;
  WeightSpec spec;
};

enum class MomentRoute { proposition, stirling, oracle };

std::string to_string(MomentRoute route);

struct MomentResult {
  unsigned n = 0;
  SeriesValue value;
  MomentRoute route = MomentRoute::oracle;
};

/// P_0 ... P_{n_max}, all exact.
std::vector<PolyVector> poly_vectors(const WeightSpec& spec, unsigned n_max);

/// mu_0 ... mu_xi via the Stirling/generalized-moment expansion (kept
/// independent of the polynomial-vector route on purpose).
MomentBase base_moments(const WeightSpec& spec, mpfr_prec_t precision_bits);

/// nu_k = sum_x x(x-1)...(x-k+1) rho(x), evaluated as the Pochhammer
/// prefactor times a parameter-shifted hypergeometric series.
SeriesValue generalized_moment(const WeightSpec& spec, unsigned k,
                               mpfr_prec_t precision_bits);

/// mu_n by the polynomial-vector route. Throws SingularPrefactor when
/// lambda + c tau = 0 and n >= 1 (for n = 0 the prefactor is 1).
MomentResult moment(const WeightSpec& spec, unsigned n, mpfr_prec_t precision_bits);

/// mu_n = sum_k {n,k} nu_k.
MomentResult moment_stirling(const WeightSpec& spec, unsigned n,
                             mpfr_prec_t precision_bits);

/// mu_n by direct summation of sum_x x^n rho(x).
MomentResult moment_oracle(const WeightSpec& spec, unsigned n,
                           mpfr_prec_t precision_bits);

}  // namespace hypermoment
