#include "hypermoment/combinatorics.hpp"

#include <mutex>

#include "hypermoment/errors.hpp"

namespace hypermoment {

namespace {

// Triangular memo table for {n,k}, rows built with the recurrence
// {n+1,k} = k*{n,k} + {n,k-1}. Guarded so concurrent callers see either a
// fully built row or none; reads copy the value out under the lock.
class StirlingTable {
 public:
  Integer get(unsigned n, unsigned k) {
    std::lock_guard<std::mutex> lock(mu_);
    while (rows_.size() <= n) {
      const std::size_t m = rows_.size();
      std::vector<Integer> row(m + 1);
      row[0] = (m == 0) ? 1 : 0;
      for (std::size_t j = 1; j <= m; ++j) {
        const auto& prev = rows_[m - 1];
        Integer above = (j < prev.size()) ? prev[j] : Integer(0);
        row[j] = Integer(static_cast<unsigned long>(j)) * above + prev[j - 1];
      }
      rows_.push_back(std::move(row));
    }
    return k < rows_[n].size() ? rows_[n][k] : Integer(0);
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Integer>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

Rational stirling2(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  return Rational(stirling_table().get(n, k));
}

Rational pochhammer(const Rational& a, unsigned n) {
  Rational prod(1);
  Rational factor = a;
  for (unsigned i = 0; i < n; ++i) {
    prod *= factor;
    factor += Rational(1);
  }
  return prod;
}

Rational pochhammer_all(const std::vector<Rational>& as, unsigned n) {
  Rational prod(1);
  for (const auto& a : as) prod *= pochhammer(a, n);
  return prod;
}

Rational elementary_symmetric(unsigned k, const std::vector<Rational>& values) {
  if (k > values.size())
    throw InvalidParameter("elementary_symmetric: k exceeds the number of values");
  // e[j] after processing value v: e[j] += v * e[j-1], descending j.
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = Rational(1);
  for (const auto& v : values)
    for (std::size_t j = std::min<std::size_t>(k, e.size() - 1); j >= 1; --j)
      e[j] += v * e[j - 1];
  return e[k];
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace hypermoment
