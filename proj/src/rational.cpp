#include "hypermoment/rational.hpp"

#include <cctype>
#include <ostream>

#include "hypermoment/errors.hpp"

namespace hypermoment {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  q_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  q_.canonicalize();
}

namespace {

bool valid_integer_text(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  std::string num_part = text.substr(0, slash);
  if (!valid_integer_text(num_part, /*allow_sign=*/true))
    throw InvalidParameter("malformed rational '" + text + "'");
  if (num_part[0] == '+') num_part.erase(0, 1);  // mpz rejects a leading '+'
  if (slash == std::string::npos) return Rational(Integer(num_part), Integer(1));
  const std::string den_part = text.substr(slash + 1);
  if (!valid_integer_text(den_part, /*allow_sign=*/false))
    throw InvalidParameter("malformed rational '" + text + "'");
  Integer den(den_part);
  if (den == 0) throw InvalidParameter("rational with zero denominator '" + text + "'");
  return Rational(Integer(num_part), den);
}

long Rational::as_long() const {
  if (!is_integer() || !num().fits_slong_p())
    throw InvalidParameter("rational does not fit a machine integer: " + to_string());
  return num().get_si();
}

Rational Rational::abs() const {
  Rational r = *this;
  r.q_ = ::abs(r.q_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw InvalidParameter("zero raised to a negative power");
    return (Rational(1) / *this).pow(-e);
  }
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(std::move(r));  // powers of a canonical form stay canonical
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidParameter("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.q_ = -r.q_;
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace hypermoment
