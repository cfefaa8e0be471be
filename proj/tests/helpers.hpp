#pragma once

#include <random>
#include <vector>

#include "hypermoment/bigfloat.hpp"
#include "hypermoment/families.hpp"
#include "hypermoment/rational.hpp"
#include "hypermoment/series.hpp"
#include "hypermoment/weight.hpp"

namespace hmtest {

using namespace hypermoment;

inline BigFloat abs_diff(const BigFloat& a, const BigFloat& b) {
  return (a - b).abs();
}

inline BigFloat tol(const char* decimal, mpfr_prec_t prec = 64) {
  return BigFloat::from_decimal(decimal, prec);
}

/// |value - oracle| <= series bound plus a small absolute floor for the
/// oracle's own rounding.
inline bool matches_oracle(const SeriesValue& v, const BigFloat& oracle,
                           const char* floor_tol = "1e-60") {
  return abs_diff(v.approx, oracle) <=
         BigFloat::add_up(v.tail_bound, tol(floor_tol));
}

inline Rational q(long num, long den = 1) { return Rational(num, den); }

/// Deterministic random rationals with small numerators/denominators.
class RationalGen {
 public:
  explicit RationalGen(unsigned seed = 20240901) : rng_(seed) {}
  Rational next(long max_num = 12, long max_den = 8, bool nonneg = false) {
    std::uniform_int_distribution<long> num(nonneg ? 1 : -max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng_), den(rng_));
  }

 private:
  std::mt19937 rng_;
};

/// Sample parameters used across the identity suites (matching the worked
/// examples in the docs).
inline std::vector<BuiltFamily> sample_families() {
  return {
      make_charlier(q(1, 2)),
      make_meixner(q(1, 2), q(1, 4)),
      krawtchouk_reduce(q(1, 2), 4),
      make_gen_charlier(q(1, 2), q(1, 3)),
      make_gen_meixner(q(1, 2), q(1, 2), q(1, 4)),
      make_gen_krawtchouk(q(1, 2), 4, q(-1, 3)),
      make_gen_hahn1(q(1, 2), q(1, 3), q(1, 2), q(1, 4)),
      hahn_reduce(q(0), q(0), 4),
  };
}

}  // namespace hmtest
