#include <doctest.h>
#include <mpfr.h>

#include <atomic>
#include <thread>

#include "helpers.hpp"
#include "hypermoment/combinatorics.hpp"
#include "hypermoment/errors.hpp"
#include "hypermoment/poly.hpp"
#include "hypermoment/series.hpp"

using namespace hypermoment;
using hmtest::q;

namespace {

// Independent oracle: the defining alternating sum
// {n,k} = (1/k!) sum_j C(k,j) (-1)^{k-j} j^n.
Rational stirling2_sum_oracle(unsigned n, unsigned k) {
  Rational acc(0);
  for (unsigned j = 0; j <= k; ++j) {
    Integer jn;
    mpz_ui_pow_ui(jn.get_mpz_t(), j, n);
    const Rational term = Rational(Integer(binomial(k, j) * jn));
    acc += ((k - j) % 2 == 0) ? term : -term;
  }
  return acc / Rational(factorial(k));
}

// Independent oracle: enumerate all k-subsets.
Rational elem_sym_enum_oracle(unsigned k, const std::vector<Rational>& vals) {
  const std::size_t n = vals.size();
  Rational acc(0);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountl(mask)) != k) continue;
    Rational prod(1);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) prod *= vals[i];
    acc += prod;
  }
  return acc;
}

}  // namespace

TEST_SUITE("core-arith") {

TEST_CASE("rational text form") {
  CHECK(Rational::parse("3/4") == q(3, 4));
  CHECK(Rational::parse("-3/4") == q(-3, 4));
  CHECK(Rational::parse("+6/4") == q(3, 2));
  CHECK(Rational::parse("12") == q(12));
  CHECK(Rational::parse("-12") == q(-12));
  CHECK(Rational::parse("4/6") == q(2, 3));  // canonicalized
  CHECK_THROWS_AS(Rational::parse("1/0"), InvalidParameter);
  CHECK_THROWS_AS(Rational::parse("1/-2"), InvalidParameter);
  CHECK_THROWS_AS(Rational::parse("a/2"), InvalidParameter);
  CHECK_THROWS_AS(Rational::parse("1.5"), InvalidParameter);
  CHECK_THROWS_AS(Rational::parse(""), InvalidParameter);
}

TEST_CASE("rational canonical form after arithmetic") {
  const Rational r = q(2, 6) + q(1, 6);  // = 1/2
  CHECK(r.num() == 1);
  CHECK(r.den() == 2);
  const Rational s = q(1, 3) * q(3, 5);
  CHECK(s == q(1, 5));
  CHECK(s.den() > 0);
  CHECK((q(-4, 6)).to_string() == "-2/3");
  CHECK_THROWS_AS(q(1) / q(0), InvalidParameter);
}

TEST_CASE("stirling2 examples and oracle cross-check") {
  CHECK(stirling2(0, 0) == q(1));
  CHECK(stirling2(3, 2) == stirling2_sum_oracle(3, 2));
  CHECK(stirling2(3, 2) == q(3));
  CHECK(stirling2(4, 2) == stirling2_sum_oracle(4, 2));
  CHECK(stirling2(4, 2) == q(7));
  CHECK(stirling2(5, 9) == q(0));

  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(stirling2(n, k) == stirling2_sum_oracle(n, k));
}

TEST_CASE("stirling2 recurrence {n+1,k} = k{n,k} + {n,k-1}") {
  for (unsigned n = 0; n + 1 <= 20; ++n)
    for (unsigned k = 0; k <= n + 1; ++k) {
      const Rational lhs = stirling2(n + 1, k);
      const Rational rhs = Rational(static_cast<long>(k)) * stirling2(n, k) +
                           (k > 0 ? stirling2(n, k - 1) : q(0));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("falling-factorial inversion x^n = sum_k {n,k} (x-k+1)_k") {
  for (long x = 0; x <= 12; ++x)
    for (unsigned n = 0; n <= 8; ++n) {
      Rational rhs(0);
      for (unsigned k = 0; k <= n; ++k)
        rhs += stirling2(n, k) * pochhammer(q(x - static_cast<long>(k) + 1), k);
      Integer xn;
      mpz_ui_pow_ui(xn.get_mpz_t(), static_cast<unsigned long>(x), n);
      CHECK(rhs == Rational(xn));
    }
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(q(5), 0) == q(1));
  CHECK(pochhammer(q(1, 2), 2) == q(3, 4));
  CHECK(pochhammer(q(-3), 5) == q(0));
}

TEST_CASE("pochhammer splitting property") {
  hmtest::RationalGen gen;
  for (int trial = 0; trial < 40; ++trial) {
    const Rational a = gen.next();
    const unsigned m = trial % 11;
    const unsigned n = (trial * 7 + 3) % 11;
    CHECK(pochhammer(a, m + n) ==
          pochhammer(a, m) * pochhammer(a + Rational(static_cast<long>(m)), n));
  }
}

TEST_CASE("elementary symmetric examples and enumeration oracle") {
  CHECK(elementary_symmetric(0, {q(1, 2), q(3)}) == q(1));
  CHECK(elementary_symmetric(1, {q(2), q(3)}) == q(5));
  CHECK(elementary_symmetric(2, {q(2), q(3)}) == elem_sym_enum_oracle(2, {q(2), q(3)}));
  CHECK(elementary_symmetric(2, {q(2), q(3)}) == q(6));
  CHECK_THROWS_AS(elementary_symmetric(3, {q(1), q(2)}), InvalidParameter);

  hmtest::RationalGen gen;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> vals;
    for (int i = 0; i < 5; ++i) vals.push_back(gen.next());
    for (unsigned k = 0; k <= 5; ++k)
      CHECK(elementary_symmetric(k, vals) == elem_sym_enum_oracle(k, vals));
  }
}

TEST_CASE("stirling table is safe under concurrent readers") {
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&ok, t] {
      for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n; ++k) {
          const Rational v = stirling2(n + static_cast<unsigned>(t % 2), k);
          if (v.sign() < 0) ok = false;  // values are non-negative integers
        }
    });
  for (auto& w : workers) w.join();
  CHECK(ok);
  CHECK(stirling2(40, 2) == stirling2_sum_oracle(40, 2));
}

TEST_CASE("poly arithmetic basics") {
  const Poly p({q(0), q(1), q(1)});  // c + c^2
  CHECK(p.derivative() == Poly({q(1), q(2)}));
  CHECK(Poly({q(0), q(1)}) * Poly({q(1), q(-1)}) == Poly({q(0), q(1), q(-1)}));
  CHECK(Poly({q(0), q(1), q(3), q(1)}).eval(q(1)) == q(5));
  CHECK(Poly({q(1), q(0), q(0)}) == Poly({q(1)}));  // trailing zeros trimmed
  CHECK(Poly().degree() == -1);
  CHECK(Poly({q(2)}).degree() == 0);
  CHECK((Poly({q(1)}) - Poly({q(1)})).is_zero());
  CHECK(Poly({q(1), q(-2), q(1)}).to_string("c") == "1 - 2*c + c^2");
}

TEST_CASE("poly evaluation at a float point") {
  // (1 - x)^2 at x = 1/3, against exact rational evaluation
  const Poly p({q(1), q(-2), q(1)});
  const BigFloat at = p.eval(BigFloat(q(1, 3), 256));
  CHECK(hmtest::abs_diff(at, BigFloat(p.eval(q(1, 3)), 256)) <=
        hmtest::tol("1e-70"));
}

TEST_CASE("pfq 0F0 is the exponential series") {
  const SeriesValue v = pfq_eval({}, {}, q(1, 2), 256);
  BigFloat half(300);
  mpfr_set_d(half.raw(), 0.5, MPFR_RNDN);
  CHECK(hmtest::matches_oracle(v, half.exp()));
  CHECK(!v.exact.has_value());
  CHECK(v.terms_used > 10);
}

TEST_CASE("pfq 1F0[2;;1/2] = (1-c)^-2 = 4") {
  const SeriesValue v = pfq_eval({q(2)}, {}, q(1, 2), 256);
  CHECK(hmtest::matches_oracle(v, BigFloat::from_long(4, 256)));
}

TEST_CASE("terminating pfq is exact") {
  const SeriesValue v = pfq_eval({q(-2), q(1)}, {}, q(1), 256);
  REQUIRE(v.exact.has_value());
  CHECK(*v.exact == q(1));  // 1 - 2 + 2 = 1
  CHECK(v.tail_bound.is_zero());
  CHECK(v.terms_used == 3);
}

TEST_CASE("pfq divergence and parameter errors") {
  CHECK_THROWS_AS(pfq_eval({q(1, 2)}, {}, q(3, 2), 128), DivergentSeries);
  CHECK_THROWS_AS(pfq_eval({q(1, 3), q(1, 2)}, {}, q(1, 2), 128), DivergentSeries);
  // bottom parameter hits zero at x = 2 with no termination before it
  CHECK_THROWS_AS(pfq_eval({q(1)}, {q(-1)}, q(1, 2), 128), InvalidParameter);
  // termination at x = 1 comes before the bottom zero at x = 3: fine;
  // value is 1 + (-1)_1/(-2)_1 = 1 + 1/2
  const SeriesValue v = pfq_eval({q(-1)}, {q(-2)}, q(1), 128);
  REQUIRE(v.exact.has_value());
  CHECK(*v.exact == q(3, 2));
}

TEST_CASE("reported tail bounds contain a high-precision reference") {
  // Evaluate coarsely, then verify the reference value sits inside the
  // coarse interval. This is the bound-validity claim itself.
  struct Case {
    std::vector<Rational> top, bottom;
    Rational c;
  };
  const std::vector<Case> cases = {
      {{}, {}, q(1, 2)},
      {{q(2), q(1, 3)}, {q(3), q(5, 2)}, q(2, 3)},
      {{q(1, 2)}, {q(1, 5)}, q(7, 8)},       // p = q+1, |c| beyond 1/2
      {{}, {q(3, 2)}, q(-9)},                // oscillating, entire
      {{q(5)}, {q(1, 4), q(1, 7)}, q(-6, 5)},
  };
  for (const auto& cs : cases) {
    const SeriesValue coarse = pfq_eval(cs.top, cs.bottom, cs.c, 80);
    const SeriesValue ref = pfq_eval(cs.top, cs.bottom, cs.c, 512);
    CHECK(hmtest::abs_diff(coarse.approx, ref.approx) <=
          BigFloat::add_up(coarse.tail_bound, ref.tail_bound));
  }
}

TEST_CASE("oscillating exponential series matches the float oracle") {
  const SeriesValue v = pfq_eval({}, {}, q(-2, 3), 256);
  CHECK(hmtest::matches_oracle(v, BigFloat(q(-2, 3), 300).exp()));
}

TEST_CASE("random convergent series: intervals nest across precision") {
  hmtest::RationalGen gen;
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 40; ++trial) {
    const unsigned p = trial % 3;
    const unsigned qn = (trial / 3) % 3;
    std::vector<Rational> top, bottom;
    bool usable = true;
    for (unsigned i = 0; i < p; ++i) {
      const Rational a = gen.next(8, 6);
      if (a.is_nonpositive_integer()) usable = false;  // keep it non-terminating
      top.push_back(a);
    }
    for (unsigned j = 0; j < qn; ++j) {
      const Rational b = gen.next(8, 6);
      if (b.is_nonpositive_integer()) usable = false;
      bottom.push_back(b);
    }
    Rational c = gen.next(6, 7);
    if (c.is_zero()) usable = false;
    if (p == qn + 1 && !(c.abs() < q(1))) usable = false;
    if (p > qn + 1) usable = false;
    if (!usable) continue;
    ++tested;
    const SeriesValue lo = pfq_eval(top, bottom, c, 96);
    const SeriesValue hi = pfq_eval(top, bottom, c, 320);
    CHECK(hmtest::abs_diff(lo.approx, hi.approx) <=
          BigFloat::add_up(lo.tail_bound, hi.tail_bound));
  }
  CHECK(tested >= 20);
}

TEST_CASE("pfq at higher precision stays inside the reported interval") {
  const std::vector<std::vector<Rational>> tops = {{}, {q(1, 2)}, {q(2), q(1, 3)}};
  const std::vector<std::vector<Rational>> bottoms = {{q(1, 2)}, {}, {q(3), q(5, 2)}};
  const std::vector<Rational> cs = {q(1, 2), q(1, 4), q(2, 3)};
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const SeriesValue lo = pfq_eval(tops[i], bottoms[i], cs[i], 128);
    const SeriesValue hi = pfq_eval(tops[i], bottoms[i], cs[i], 320);
    CHECK(sv_delta(lo, hi) <= BigFloat::add_up(lo.tail_bound, hi.tail_bound));
  }
}

TEST_CASE("series value algebra keeps exactness and propagates bounds") {
  const SeriesValue a = sv_from_rational(q(3, 7), 128);
  const SeriesValue b = sv_from_rational(q(2, 5), 128);
  REQUIRE(sv_add(a, b).exact.has_value());
  CHECK(*sv_add(a, b).exact == q(29, 35));
  CHECK(*sv_mul(a, b).exact == q(6, 35));
  CHECK(*sv_div(a, b).exact == q(15, 14));

  const SeriesValue e = pfq_eval({}, {}, q(1), 128);  // not exact
  const SeriesValue scaled = sv_scale(e, q(-2, 3));
  CHECK(!scaled.exact.has_value());
  CHECK(sv_within_bounds(sv_sub(scaled, scaled), sv_zero(128)));
}

}  // TEST_SUITE
