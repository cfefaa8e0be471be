#include "hypermoment/bigfloat.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "hypermoment/errors.hpp"

namespace hypermoment {

BigFloat BigFloat::pow(const Rational& e) const {
  if (sign() <= 0) throw InvalidParameter("pow of a non-positive base");
  BigFloat r(prec());
  if (e.is_integer() && e.num().fits_slong_p()) {
    mpfr_pow_si(r.f_, f_, e.num().get_si(), MPFR_RNDN);
    return r;
  }
  mpfr_t lg, ex;
  mpfr_init2(lg, prec() + 32);
  mpfr_init2(ex, prec() + 32);
  mpfr_log(lg, f_, MPFR_RNDN);
  mpfr_mul_q(ex, lg, e.mpq().get_mpq_t(), MPFR_RNDN);
  mpfr_exp(r.f_, ex, MPFR_RNDN);
  mpfr_clear(lg);
  mpfr_clear(ex);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (digits <= 0) {
    // ~0.3010 decimal digits per bit, plus slack for faithful round-trip
    digits = static_cast<int>(std::ceil(static_cast<double>(prec()) * 0.30103)) + 3;
  }
  // %.*Re prints `digits` places after the leading digit
  int need = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, f_);
  std::vector<char> buf(static_cast<std::size_t>(need) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, f_);
  return std::string(buf.data());
}

}  // namespace hypermoment
