// Acceptance suite: every identity the engine promises, at its stated
// tolerance, one PASS/FAIL line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "hypermoment/combinatorics.hpp"
#include "hypermoment/errors.hpp"
#include "hypermoment/families.hpp"
#include "hypermoment/moments.hpp"
#include "hypermoment/orthopoly.hpp"
#include "hypermoment/transforms.hpp"

using namespace hypermoment;

namespace {

int g_failures = 0;
bool g_current_ok = true;

#define REQUIRE(cond, msg)                                                 \
  do {                                                                     \
    if (!(cond)) {                                                         \
      std::printf("       requirement failed: %s (%s:%d)\n", msg,          \
                  __FILE__, __LINE__);                                     \
      g_current_ok = false;                                                \
    }                                                                      \
  } while (0)

void run_criterion(int index, const std::string& name,
                   const std::function<void()>& body,
                   double time_limit_seconds = 0.0) {
  g_current_ok = true;
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    std::printf("       unexpected exception: %s\n", e.what());
    g_current_ok = false;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (time_limit_seconds > 0.0 && elapsed > time_limit_seconds) {
    std::printf("       runtime %.2fs exceeds limit %.2fs\n", elapsed,
                time_limit_seconds);
    g_current_ok = false;
  }
  std::printf("[%s] criterion %d: %s (%.2fs)\n", g_current_ok ? "PASS" : "FAIL",
              index, name.c_str(), elapsed);
  if (!g_current_ok) ++g_failures;
}

Rational q(long n, long d = 1) { return Rational(n, d); }

BigFloat tol(const char* text) { return BigFloat::from_decimal(text, 64); }

bool delta_within(const SeriesValue& a, const SeriesValue& b, const char* abs_tol) {
  return sv_delta(a, b) <= tol(abs_tol);
}

struct Sample {
  std::string name;
  BuiltFamily fam;
};

std::vector<Sample> convergent_samples() {
  return {
      {"charlier", make_charlier(q(1, 2))},
      {"meixner", make_meixner(q(1, 2), q(1, 4))},
      {"gen-charlier", make_gen_charlier(q(1, 2), q(1, 3))},
      {"gen-meixner", make_gen_meixner(q(1, 2), q(1, 2), q(1, 4))},
      {"gen-hahn-1", make_gen_hahn1(q(1, 2), q(1, 3), q(1, 2), q(1, 4))},
  };
}

std::vector<Sample> all_samples() {
  auto out = convergent_samples();
  out.push_back({"krawtchouk", krawtchouk_reduce(q(1, 2), 4)});
  out.push_back({"gen-krawtchouk", make_gen_krawtchouk(q(1, 2), 4, q(-1, 3))});
  out.push_back({"gen-hahn-2",
                 BuiltFamily{WeightSpec{{q(1, 2), q(1, 3), q(1, 4)},
                                        {q(1, 2), q(1, 3)}, q(1, 4)},
                             q(1)}});
  out.push_back({"hahn", hahn_reduce(q(0), q(0), 4)});
  return out;
}

// 1. Bell closed form
void criterion_bell() {
  const auto vecs = poly_vectors(WeightSpec{{}, {}, q(1, 2)}, 12);
  for (unsigned n = 0; n <= 12; ++n)
    REQUIRE(vecs[n].entries[0] == bell_poly(n), "bell polynomial mismatch");
}

// 2. Meixner closed form
void criterion_meixner_closed_form() {
  const Rational alphas[] = {q(1, 2), q(3, 7), q(5, 3), q(11, 4), q(2, 9)};
  for (const auto& alpha : alphas) {
    const auto vecs = poly_vectors(WeightSpec{{alpha}, {}, q(1, 4)}, 12);
    for (unsigned n = 0; n <= 12; ++n)
      REQUIRE(vecs[n].entries[0] == meixner_poly(n, alpha),
              "meixner polynomial mismatch");
  }
}

// 3. Three-route agreement on the convergent samples
void criterion_route_agreement() {
  for (const auto& sample : convergent_samples()) {
    for (unsigned n = 0; n <= 10; ++n) {
      const MomentResult prop = moment(sample.fam.spec, n, 256);
      const MomentResult stir = moment_stirling(sample.fam.spec, n, 256);
      const MomentResult orac = moment_oracle(sample.fam.spec, n, 256);
      const MomentResult* rs[] = {&prop, &stir, &orac};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          REQUIRE(sv_within_bounds(rs[i]->value, rs[j]->value),
                  (sample.name + ": routes disagree beyond bounds").c_str());
          const BigFloat rel = BigFloat::div_up(
              sv_delta(rs[i]->value, rs[j]->value), orac.value.approx.abs());
          REQUIRE(rel <= tol("1e-25"),
                  (sample.name + ": relative delta above 1e-25").c_str());
        }
    }
  }
}

// 4. Terminating exactness
void criterion_terminating_exactness() {
  const BuiltFamily kraw = krawtchouk_reduce(q(1, 2), 4);
  const BuiltFamily genk = make_gen_krawtchouk(q(1, 2), 4, q(-1, 3));
  const BuiltFamily hahn = hahn_reduce(q(0), q(0), 4);
  const BuiltFamily* fams[] = {&kraw, &genk, &hahn};
  for (const auto* fam : fams) {
    const bool singular = classify(fam->spec).prefactor_at(fam->spec.c).is_zero();
    for (unsigned n = 0; n <= 8; ++n) {
      const MomentResult stir = moment_stirling(fam->spec, n, 256);
      const MomentResult orac = moment_oracle(fam->spec, n, 256);
      REQUIRE(stir.value.exact && orac.value.exact, "route not exact");
      REQUIRE(*stir.value.exact == *orac.value.exact, "exact values differ");
      if (!singular || n == 0) {
        const MomentResult prop = moment(fam->spec, n, 256);
        REQUIRE(prop.value.exact && *prop.value.exact == *orac.value.exact,
                "proposition route differs");
      }
    }
  }
  const MomentResult k0 = moment_oracle(kraw.spec, 0, 256);
  REQUIRE(*k0.value.exact * kraw.moment_prefactor == q(1),
          "krawtchouk mu_0 != 1");
  const MomentResult h0 = moment_oracle(hahn.spec, 0, 256);
  REQUIRE(*h0.value.exact * hahn.moment_prefactor ==
              pochhammer(q(2), 4) / Rational(factorial(4)),
          "hahn mu_0 != (alpha+beta+2)_N / N!");
}

// 5. Pearson and annihilation identities
void criterion_pearson() {
  for (const auto& sample : all_samples()) {
    const PearsonPair pp = pearson(sample.fam.spec);
    for (unsigned x = 0; x <= 100; ++x) {
      const Rational rho_x = weight_at(sample.fam.spec, x);
      const Rational rho_x1 = weight_at(sample.fam.spec, x + 1);
      REQUIRE(pp.phi.eval(q(x + 1)) * rho_x1 - pp.phi.eval(q(x)) * rho_x ==
                  (pp.eta.eval(q(x)) - pp.phi.eval(q(x))) * rho_x,
              (sample.name + ": pearson identity broken").c_str());
    }
    const Poly diff = pp.eta - pp.phi;
    SeriesValue acc = sv_zero(256);
    for (std::size_t k = 0; k < diff.coeffs().size(); ++k)
      acc = sv_add(acc,
                   sv_scale(moment_oracle(sample.fam.spec,
                                          static_cast<unsigned>(k), 256).value,
                            diff.coeff(k)));
    if (acc.exact) {
      REQUIRE(acc.exact->is_zero(),
              (sample.name + ": annihilation sum not exactly zero").c_str());
    } else {
      REQUIRE(acc.approx.abs() <= BigFloat::add_up(acc.tail_bound, tol("1e-25")),
              (sample.name + ": annihilation sum above bound").c_str());
    }
  }
}

// 6. Exponential generating functions
void criterion_egf() {
  // closed composites e^{c e^w} and (1 - c e^w)^{-alpha}
  for (const auto& sample : {Sample{"charlier", make_charlier(q(1, 2))},
                             Sample{"meixner", make_meixner(q(1, 2), q(1, 4))}}) {
    const TaylorSlice egf = egf_moments(sample.fam.spec, 8, 256);
    const TaylorSlice comp = composite_egf_slice(sample.fam.spec, q(1), 8, 256);
    for (unsigned n = 0; n <= 8; ++n)
      REQUIRE(delta_within(egf.coeffs[n], comp.coeffs[n], "1e-20"),
              (sample.name + ": egf coefficient above tolerance").c_str());
  }
  // polynomial-vector composition for every sample
  for (const auto& sample : all_samples()) {
    const CheckResult r = egf_compose_check(sample.fam.spec, 8, 256);
    REQUIRE(r.ok, (sample.name + ": egf composition outside bounds").c_str());
    REQUIRE(r.max_deviation <= tol("1e-20"),
            (sample.name + ": egf composition deviation above 1e-20").c_str());
  }
  // Krawtchouk polynomial generating function [1 + (e^w - 1)p]^N
  {
    const Rational p = q(1, 2);
    const unsigned N = 4;
    const Poly b = exp_slice(q(1), 8) - Poly({q(1)});
    const Poly gp = truncated_pow(Poly({q(1)}) + p * b, N, 8);
    Rational inv_fact(1);
    for (unsigned n = 0; n <= 8; ++n) {
      if (n > 0) inv_fact /= q(n);
      REQUIRE(gp.coeff(n) == krawtchouk_moment_poly(n, N).eval(p) * inv_fact,
              "krawtchouk generating function mismatch");
    }
  }
  // Hahn moment generating function against the terminating 2F1 composite
  {
    const HahnEgfResult r = hahn_egf_check(q(0), q(0), 4, 6);
    REQUIRE(r.ok, "hahn egf mismatch");
    REQUIRE(BigFloat(r.max_deviation, 64) <= tol("1e-20"),
            "hahn egf deviation above 1e-20");
  }
}

// 7. Stieltjes transforms
void criterion_stieltjes() {
  const Rational zs_exact[] = {q(-3, 2), q(-5), q(-1, 2), q(7, 3), q(-11, 7)};
  for (const auto& z : zs_exact)
    for (unsigned x = 0; x <= 50; ++x)
      REQUIRE(pochhammer(-z, x) / pochhammer(q(1) - z, x) == z / (z - q(x)),
              "termwise Pochhammer identity broken");

  const std::vector<Sample> fams = {
      {"charlier", make_charlier(q(1, 2))},
      {"meixner", make_meixner(q(1, 2), q(1, 4))},
      {"gen-charlier", make_gen_charlier(q(1, 2), q(1, 3))},
      {"gen-meixner", make_gen_meixner(q(1, 2), q(1, 2), q(1, 4))},
  };
  const Rational zs[] = {q(-3, 2), q(-5), q(-1, 2)};
  for (const auto& sample : fams)
    for (const auto& z : zs)
      REQUIRE(sv_within_bounds(stieltjes_eval(sample.fam.spec, z, 256),
                               stieltjes_oracle(sample.fam.spec, z, 256)),
              (sample.name + ": stieltjes forms disagree").c_str());

  const CheckResult gc = stieltjes_P_identity(StieltjesFamily::GenCharlier,
                                              std::nullopt, q(1, 2), q(1, 3),
                                              q(-2), 256);
  REQUIRE(gc.ok && gc.max_deviation <= tol("1e-20"),
          "generalized Charlier U,V identity failed");
  const CheckResult gm = stieltjes_P_identity(StieltjesFamily::GenMeixner,
                                              q(1, 2), q(1, 2), q(1, 4),
                                              q(-5, 2), 256);
  REQUIRE(gm.ok && gm.max_deviation <= tol("1e-20"),
          "generalized Meixner U,V identity failed");
}

// 8. Orthogonality and Hankel positivity
void criterion_orthogonality() {
  for (const auto& sample : all_samples()) {
    for (unsigned n = 1; n <= 5; ++n) {
      const SeriesValue kn = orthogonality_check(sample.fam.spec, n, n, 256);
      for (unsigned m = 0; m < n; ++m) {
        const SeriesValue cross = orthogonality_check(sample.fam.spec, n, m, 256);
        REQUIRE(cross.approx.abs() <=
                    BigFloat::add_up(cross.tail_bound,
                                     BigFloat::mul_up(kn.approx.abs(), tol("1e-20"))),
                (sample.name + ": orthogonality above tolerance").c_str());
      }
    }
  }
  // strictly positive Hankel determinants for the infinite-support,
  // positive-parameter families
  const std::vector<Sample> positive = {
      {"charlier", make_charlier(q(1, 2))},
      {"meixner", make_meixner(q(1, 2), q(1, 4))},
      {"gen-charlier", make_gen_charlier(q(1, 2), q(1, 3))},
      {"gen-meixner", make_gen_meixner(q(1, 2), q(1, 2), q(1, 4))},
  };
  for (const auto& sample : positive) {
    REQUIRE(!sample.fam.spec.nonstandard_parameters(), "unexpected flag");
    std::vector<SeriesValue> ms;
    for (unsigned k = 0; k <= 10; ++k)
      ms.push_back(moment_oracle(sample.fam.spec, k, 256).value);
    const HankelReport report = hankel_dets(ms, 5);
    for (unsigned k = 0; k <= 5; ++k)
      REQUIRE(report.positive[k],
              (sample.name + ": Hankel determinant not separated from 0").c_str());
  }
  // Charlier Pi_1 and Pi_2 in the coefficient-interval sense
  const Rational c = q(1, 2);
  const WeightSpec charlier{{}, {}, c};
  const MonicPoly p1 = monic_orthogonal(charlier, 1, 256);
  REQUIRE((p1.coeffs[0].approx - BigFloat(-c, 256)).abs() <= p1.coeffs[0].tail_bound,
          "Pi_1 constant term outside its interval");
  const MonicPoly p2 = monic_orthogonal(charlier, 2, 256);
  REQUIRE((p2.coeffs[0].approx - BigFloat(c * c, 256)).abs() <=
              p2.coeffs[0].tail_bound,
          "Pi_2 constant term outside its interval");
  REQUIRE((p2.coeffs[1].approx - BigFloat(-(q(2) * c + q(1)), 256)).abs() <=
              p2.coeffs[1].tail_bound,
          "Pi_2 linear term outside its interval");
}

// 9. Error handling
void criterion_errors() {
  bool threw = false;
  try {
    moment(hahn_reduce(q(0), q(0), 4).spec, 1, 128);
  } catch (const SingularPrefactor&) {
    threw = true;
  }
  REQUIRE(threw, "Hahn proposition route did not raise SingularPrefactor");

  threw = false;
  try {
    moment_oracle(WeightSpec{{q(1, 3), q(1, 2)}, {}, q(1, 2)}, 0, 128);
  } catch (const DivergentSeries&) {
    threw = true;
  }
  REQUIRE(threw, "p > q+1 did not raise DivergentSeries");

  threw = false;
  try {
    moment_oracle(WeightSpec{{q(1, 2)}, {}, q(3, 2)}, 0, 128);
  } catch (const DivergentSeries&) {
    threw = true;
  }
  REQUIRE(threw, "p = q+1 with c = 3/2 did not raise DivergentSeries");
}

}  // namespace

int main() {
  run_criterion(1, "Bell closed form equals the Charlier recurrence (n <= 12)",
                criterion_bell, 1.0);
  run_criterion(2, "Meixner closed form equals the recurrence (n <= 12, 5 alphas)",
                criterion_meixner_closed_form, 1.0);
  run_criterion(3, "three moment routes agree at 256 bits (n <= 10, rel <= 1e-25)",
                criterion_route_agreement, 30.0);
  run_criterion(4, "terminating weights give identical exact rationals (n <= 8)",
                criterion_terminating_exactness);
  run_criterion(5, "Pearson identity exact (x <= 100) and annihilation <= 1e-25",
                criterion_pearson);
  run_criterion(6, "generating-function slices match to 1e-20", criterion_egf);
  run_criterion(7, "Stieltjes identities and route agreement", criterion_stieltjes);
  run_criterion(8, "orthogonality to 1e-20 * K_n and positive Hankel determinants",
                criterion_orthogonality);
  run_criterion(9, "error taxonomy: SingularPrefactor and DivergentSeries",
                criterion_errors);

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
