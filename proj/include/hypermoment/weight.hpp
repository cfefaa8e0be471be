#pragma once

#include <string>
#include <vector>

#include "hypermoment/poly.hpp"
#include "hypermoment/rational.hpp"

namespace hypermoment {

/// Convergence class of the weight's total-mass series sum_x rho(x).
enum class Convergence {
  Terminating,  // finite support: some alpha a non-positive integer, or c = 0
  Entire,       // p < q+1: converges for every c
  Disk,         // p = q+1 and |c| < 1
  Divergent,
};

/// A discrete weight of hypergeometric type,
///   rho(x) = (alpha_1)_x ... (alpha_p)_x / [(beta_1+1)_x ... (beta_q+1)_x] * c^x / x!,
/// on the support x = 0, 1, 2, ....
struct WeightSpec {
  std::vector<Rational> alphas;
  std::vector<Rational> betas;
  Rational c;

  std::size_t p() const { return alphas.size(); }
  std::size_t q() const { return betas.size(); }

  Convergence convergence() const;
  bool terminating() const { return convergence() == Convergence::Terminating; }
  /// Last support point of a terminating weight (rho vanishes beyond it).
  long support_end() const;

  /// True when some beta_i <= -1. Such specs are accepted (reduction maps
  /// need them) but carry this flag; positivity-based checks refuse them.
  bool nonstandard_parameters() const;

  /// Bottom parameter vector beta+1 as used in series evaluation.
  std::vector<Rational> bottoms() const;

  std::string to_string() const;
};

/// Normalization triple of the weight's moment recurrence:
/// (lambda + c*tau) * mu_{xi+1} = sum_k sigma_k(c) * mu_k.
struct RegimeClass {
  int lambda = 1;      // in {0, 1}
  int tau = 0;         // in {-1, 0, 1}
  unsigned xi = 0;     // max(p-1, q)

  /// lambda + c*tau as a polynomial in c.
  Poly prefactor() const;
  /// lambda + c*tau evaluated at the spec's c.
  Rational prefactor_at(const Rational& c) const;
};

/// Pearson data: Delta(phi * rho) = (eta - phi) * rho with
/// phi(x) = x * prod(x + beta_j) and eta(x) = c * prod(x + alpha_i).
struct PearsonPair {
  Poly phi;
  Poly eta;
  unsigned class_s = 0;  // max(deg phi - 2, deg(phi - eta) - 1), floored at 0
};

/// The xi+1 linear-in-c coefficients sigma_0 ... sigma_xi.
struct SigmaCoeffs {
  std::vector<Poly> sigmas;
};

/// The (xi+1) x (xi+1) first-order-system matrix: superdiagonal entries
/// lambda + c*tau, last row (sigma_0, ..., sigma_xi), zero elsewhere.
struct CompanionMatrix {
  std::vector<std::vector<Poly>> entries;
  std::size_t size() const { return entries.size(); }
};

RegimeClass classify(const WeightSpec& spec);
PearsonPair pearson(const WeightSpec& spec);
/// Exact weight value rho(x). Throws InvalidParameter when a bottom
/// Pochhammer factor vanishes at or before x without prior termination.
Rational weight_at(const WeightSpec& spec, unsigned x);
SigmaCoeffs sigma_coeffs(const WeightSpec& spec);
CompanionMatrix companion_matrix(const WeightSpec& spec);

}  // namespace hypermoment
