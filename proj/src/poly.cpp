#include "hypermoment/poly.hpp"

#include <sstream>

namespace hypermoment {

Poly Poly::monomial(const Rational& v, std::size_t k) {
  if (v.is_zero()) return Poly();
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = v;
  return Poly(std::move(c));
}

const Rational& Poly::coeff(std::size_t k) const {
  static const Rational zero(0);
  return k < c_.size() ? c_[k] : zero;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigFloat Poly::eval(const BigFloat& x) const {
  BigFloat acc(x.prec());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + BigFloat(*it, x.prec());
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s.is_zero()) return Poly();
  std::vector<Rational> c(p.c_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = s * p.c_[k];
  return Poly(std::move(c));
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& a = c_[k];
    if (a.is_zero()) continue;
    Rational mag = a.abs();
    if (first) {
      if (a.sign() < 0) os << "-";
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1)) && k > 0;
    if (!unit) os << mag.to_string();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace hypermoment
