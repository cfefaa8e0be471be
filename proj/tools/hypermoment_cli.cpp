// Command-line surface for the hypergeometric-weight moment engine.
//
// Subcommands: moments, poly, sigma, stieltjes, verify. Exit codes:
//   0 success, 2 domain/parameter error, 3 divergent series,
//   4 identity-verification failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hypermoment/errors.hpp"
#include "hypermoment/families.hpp"
#include "hypermoment/jsonio.hpp"
#include "hypermoment/moments.hpp"
#include "hypermoment/orthopoly.hpp"
#include "hypermoment/transforms.hpp"
#include "hypermoment/weight.hpp"

using namespace hypermoment;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitDivergent = 3;
constexpr int kExitVerify = 4;

struct RunConfig {
  std::string family;
  std::string alpha_text;
  std::string beta_text;
  std::string c_text;
  std::optional<long> N;
  std::string n_text = "0..32";
  std::string z_text;
  long precision = 256;
  std::string format = "text";
  unsigned order = 6;
};

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma - start);
    out.push_back(Rational::parse(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const long n = std::stol(text);
    if (n < 0) throw InvalidParameter("n must be non-negative");
    return {static_cast<unsigned>(n), static_cast<unsigned>(n)};
  }
  const long lo = std::stol(text.substr(0, dots));
  const long hi = std::stol(text.substr(dots + 2));
  if (lo < 0 || hi < lo) throw InvalidParameter("bad n range '" + text + "'");
  return {static_cast<unsigned>(lo), static_cast<unsigned>(hi)};
}

long default_precision() {
  if (const char* env = std::getenv("HYPERMOMENT_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 256;
}

// c_optional: the sigma and poly outputs are polynomials in c, so those
// subcommands accept a family with --c omitted and fill in any value from
// the family's domain.
BuiltFamily build_target(const RunConfig& cfg, bool c_optional = false) {
  FamilyParams params;
  if (!cfg.alpha_text.empty()) params.alphas = parse_list(cfg.alpha_text);
  if (!cfg.beta_text.empty()) params.betas = parse_list(cfg.beta_text);
  if (!cfg.c_text.empty()) params.c = Rational::parse(cfg.c_text);
  params.N = cfg.N;
  if (!cfg.family.empty()) {
    const FamilyDescriptor& fam = find_family(cfg.family);
    if (c_optional && !params.c) {
      for (long sign : {1L, -1L}) {
        try {
          params.c = Rational(sign, 2);
          return fam.build(params);
        } catch (const DomainError&) {
          params.c.reset();
        }
      }
    }
    return fam.build(params);
  }
  BuiltFamily raw;
  raw.spec = WeightSpec{params.alphas, params.betas, params.c.value_or(Rational(0))};
  return raw;
}

mpfr_prec_t checked_precision(const RunConfig& cfg) {
  if (cfg.precision < 64)
    throw InvalidParameter("precision must be at least 64 bits");
  return static_cast<mpfr_prec_t>(cfg.precision);
}

void emit(const RunConfig& cfg, const Json& doc, const std::string& text_form) {
  if (cfg.format == "json")
    std::cout << dump_canonical(doc);
  else
    std::cout << text_form;
}

// --- moments -----------------------------------------------------------------

int cmd_moments(const RunConfig& cfg) {
  const mpfr_prec_t prec = checked_precision(cfg);
  const BuiltFamily fam = build_target(cfg);
  const auto [n_lo, n_hi] = parse_range(cfg.n_text);

  Json doc;
  doc["command"] = "moments";
  doc["spec"] = json_of(fam.spec);
  doc["moment_prefactor"] = json_of(fam.moment_prefactor);
  doc["precision_bits"] = static_cast<long>(prec);
  Json rows = Json::array();

  std::string text;
  std::string csv = "n,route,value,tail_bound\n";
  bool all_agree = true;

  const bool singular = classify(fam.spec).prefactor_at(fam.spec.c).is_zero();
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    Json row;
    row["n"] = n;
    Json routes;
    std::vector<MomentResult> results;
    if (!singular || n == 0) results.push_back(moment(fam.spec, n, prec));
    results.push_back(moment_stirling(fam.spec, n, prec));
    results.push_back(moment_oracle(fam.spec, n, prec));
    for (auto& r : results) {
      r.value = sv_scale(r.value, fam.moment_prefactor);
      routes[to_string(r.route)] = json_of(r.value);
      csv += std::to_string(n) + "," + to_string(r.route) + "," +
             r.value.approx.to_string() + "," + r.value.tail_bound.to_string(6) + "\n";
    }
    row["routes"] = routes;

    bool agree = true;
    Json deltas;
    for (std::size_t i = 0; i + 1 < results.size(); ++i)
      for (std::size_t j = i + 1; j < results.size(); ++j) {
        const std::string key =
            to_string(results[i].route) + "_vs_" + to_string(results[j].route);
        deltas[key] = sv_delta(results[i].value, results[j].value).to_string(6);
        if (!sv_within_bounds(results[i].value, results[j].value)) agree = false;
      }
    row["deltas"] = deltas;
    row["agree"] = agree;
    all_agree = all_agree && agree;
    rows.push_back(row);

    text += "n=" + std::to_string(n) + "\n";
    for (const auto& r : results) {
      text += "  " + to_string(r.route) + ": ";
      text += r.value.exact ? r.value.exact->to_string() + " (exact)"
                            : r.value.approx.to_string(30) + "  [+/- " +
                                  r.value.tail_bound.to_string(4) + "]";
      text += "\n";
    }
    if (!agree) text += "  ROUTES DISAGREE\n";
  }
  doc["rows"] = rows;
  doc["agree"] = all_agree;

  if (cfg.format == "csv")
    std::cout << csv;
  else
    emit(cfg, doc, text);
  return all_agree ? kExitOk : kExitVerify;
}

// --- poly --------------------------------------------------------------------

int cmd_poly(const RunConfig& cfg) {
  const BuiltFamily fam = build_target(cfg, /*c_optional=*/true);
  const auto [n_lo, n_hi] = parse_range(cfg.n_text);
  const auto vectors = poly_vectors(fam.spec, n_hi);

  Json doc;
  doc["command"] = "poly";
  doc["spec"] = json_of(fam.spec);
  Json rows = Json::array();
  std::string text;
  std::string csv = "n,entry,coefficients\n";
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    Json row;
    row["n"] = n;
    Json entries = Json::array();
    text += "P_" + std::to_string(n) + ": ";
    for (std::size_t i = 0; i < vectors[n].entries.size(); ++i) {
      const Poly& e = vectors[n].entries[i];
      entries.push_back(json_of(e));
      std::string coeffs = "[";
      for (std::size_t k = 0; k < e.coeffs().size(); ++k)
        coeffs += (k ? ", " : "") + e.coeffs()[k].to_string();
      coeffs += "]";
      text += (i ? ", " : "") + coeffs;
      csv += std::to_string(n) + "," + std::to_string(i) + ",\"" + coeffs + "\"\n";
    }
    text += "\n";
    row["entries"] = entries;
    rows.push_back(row);
  }
  doc["rows"] = rows;
  if (cfg.format == "csv")
    std::cout << csv;
  else
    emit(cfg, doc, text);
  return kExitOk;
}

// --- sigma ---------------------------------------------------------------------

int cmd_sigma(const RunConfig& cfg) {
  const BuiltFamily fam = build_target(cfg, /*c_optional=*/true);
  const SigmaCoeffs sig = sigma_coeffs(fam.spec);
  const RegimeClass regime = classify(fam.spec);

  Json doc;
  doc["command"] = "sigma";
  doc["spec"] = json_of(fam.spec);
  doc["lambda"] = regime.lambda;
  doc["tau"] = regime.tau;
  doc["xi"] = regime.xi;
  Json sigmas = Json::array();
  std::string text = "lambda=" + std::to_string(regime.lambda) +
                     " tau=" + std::to_string(regime.tau) +
                     " xi=" + std::to_string(regime.xi) + "\n";
  for (std::size_t k = 0; k < sig.sigmas.size(); ++k) {
    sigmas.push_back(json_of(sig.sigmas[k]));
    text += "sigma_" + std::to_string(k) + " = " + sig.sigmas[k].to_string("c") + "\n";
  }
  doc["sigma"] = sigmas;
  if (cfg.format == "csv") {
    std::string csv = "k,coefficients\n";
    for (std::size_t k = 0; k < sig.sigmas.size(); ++k)
      csv += std::to_string(k) + ",\"" + sig.sigmas[k].to_string("c") + "\"\n";
    std::cout << csv;
  } else {
    emit(cfg, doc, text);
  }
  return kExitOk;
}

// --- stieltjes -------------------------------------------------------------------

int cmd_stieltjes(const RunConfig& cfg) {
  const mpfr_prec_t prec = checked_precision(cfg);
  const BuiltFamily fam = build_target(cfg);
  if (cfg.z_text.empty()) throw InvalidParameter("stieltjes needs --z");
  const Rational z = Rational::parse(cfg.z_text);

  const SeriesValue hyper = stieltjes_eval(fam.spec, z, prec);
  const SeriesValue direct = stieltjes_oracle(fam.spec, z, prec);
  const bool agree = sv_within_bounds(hyper, direct);

  Json doc;
  doc["command"] = "stieltjes";
  doc["spec"] = json_of(fam.spec);
  doc["z"] = json_of(z);
  doc["precision_bits"] = static_cast<long>(prec);
  doc["hypergeometric"] = json_of(hyper);
  doc["direct_sum"] = json_of(direct);
  doc["delta"] = sv_delta(hyper, direct).to_string(6);
  doc["agree"] = agree;

  std::string text = "S(z=" + z.to_string() + ")\n";
  text += "  hypergeometric: " + hyper.approx.to_string(30) + "\n";
  text += "  direct sum:     " + direct.approx.to_string(30) + "\n";
  text += std::string("  agree: ") + (agree ? "yes" : "NO") + "\n";
  if (cfg.format == "csv") {
    std::string csv = "form,value,tail_bound\n";
    csv += "hypergeometric," + hyper.approx.to_string() + "," + hyper.tail_bound.to_string(6) + "\n";
    csv += "direct_sum," + direct.approx.to_string() + "," + direct.tail_bound.to_string(6) + "\n";
    std::cout << csv;
  } else {
    emit(cfg, doc, text);
  }
  return agree ? kExitOk : kExitVerify;
}

// --- verify --------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg) {
  const mpfr_prec_t prec = checked_precision(cfg);
  const BuiltFamily fam = build_target(cfg);
  const bool singular = classify(fam.spec).prefactor_at(fam.spec.c).is_zero();

  struct Item {
    std::string name;
    bool ok;
  };
  std::vector<Item> items;

  {
    bool ok = true;
    for (unsigned n = 0; n <= 10; ++n) {
      const MomentResult oracle = moment_oracle(fam.spec, n, prec);
      const MomentResult stirling = moment_stirling(fam.spec, n, prec);
      ok = ok && sv_within_bounds(oracle.value, stirling.value);
      if (!singular || n == 0)
        ok = ok && sv_within_bounds(oracle.value, moment(fam.spec, n, prec).value);
    }
    items.push_back({"moment routes agree (n <= 10)", ok});
  }
  {
    const PearsonPair pp = pearson(fam.spec);
    bool ok = true;
    for (unsigned x = 0; x <= 100 && ok; ++x) {
      const Rational rho_x = weight_at(fam.spec, x);
      const Rational rho_x1 = weight_at(fam.spec, x + 1);
      ok = pp.phi.eval(Rational(x + 1)) * rho_x1 - pp.phi.eval(Rational(x)) * rho_x ==
           (pp.eta.eval(Rational(x)) - pp.phi.eval(Rational(x))) * rho_x;
    }
    items.push_back({"pearson identity (x <= 100)", ok});
  }
  {
    const PearsonPair pp = pearson(fam.spec);
    const Poly diff = pp.eta - pp.phi;
    SeriesValue acc = sv_zero(prec);
    for (std::size_t k = 0; k < diff.coeffs().size(); ++k)
      acc = sv_add(acc,
                   sv_scale(moment_oracle(fam.spec, static_cast<unsigned>(k), prec).value,
                            diff.coeff(k)));
    const bool ok =
        acc.exact ? acc.exact->is_zero()
                  : acc.approx.abs() <=
                        BigFloat::add_up(acc.tail_bound,
                                         BigFloat::from_decimal("1e-25", 64));
    items.push_back({"annihilation sum (eta - phi) rho = 0", ok});
  }
  items.push_back({"egf composition (order <= " + std::to_string(cfg.order) + ")",
                   egf_compose_check(fam.spec, cfg.order, prec).ok});
  {
    const Rational z(-3, 2);
    const SeriesValue a = stieltjes_eval(fam.spec, z, prec);
    const SeriesValue b = stieltjes_oracle(fam.spec, z, prec);
    items.push_back({"stieltjes forms agree at z = -3/2", sv_within_bounds(a, b)});
  }
  {
    bool ok = true;
    for (unsigned n = 1; n <= 3 && ok; ++n) {
      const SeriesValue kn = orthogonality_check(fam.spec, n, n, prec);
      for (unsigned m = 0; m < n && ok; ++m) {
        const SeriesValue cross = orthogonality_check(fam.spec, n, m, prec);
        ok = cross.approx.abs() <=
             BigFloat::add_up(cross.tail_bound,
                              BigFloat::mul_up(kn.approx.abs(),
                                               BigFloat::from_decimal("1e-20", 64)));
      }
    }
    items.push_back({"orthogonality (m < n <= 3)", ok});
  }

  Json doc;
  doc["command"] = "verify";
  doc["spec"] = json_of(fam.spec);
  Json checks = Json::array();
  std::string text;
  bool all_ok = true;
  for (const auto& item : items) {
    Json c;
    c["name"] = item.name;
    c["ok"] = item.ok;
    checks.push_back(c);
    text += std::string(item.ok ? "[PASS] " : "[FAIL] ") + item.name + "\n";
    all_ok = all_ok && item.ok;
  }
  doc["checks"] = checks;
  doc["ok"] = all_ok;
  if (cfg.format == "csv") {
    std::string csv = "check,ok\n";
    for (const auto& item : items)
      csv += "\"" + item.name + "\"," + (item.ok ? "1" : "0") + "\n";
    std::cout << csv;
  } else {
    emit(cfg, doc, text);
  }
  return all_ok ? kExitOk : kExitVerify;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--family", cfg.family, "family name (see README)");
  cmd->add_option("--alpha", cfg.alpha_text, "comma-separated rationals");
  cmd->add_option("--beta", cfg.beta_text, "comma-separated rationals");
  cmd->add_option("--c", cfg.c_text, "rational p/q");
  cmd->add_option("--N", cfg.N, "support size for Krawtchouk/Hahn types");
  cmd->add_option("--n", cfg.n_text, "moment order, single or a..b");
  cmd->add_option("--z", cfg.z_text, "Stieltjes evaluation point (rational)");
  cmd->add_option("--precision", cfg.precision, "working precision in bits (>= 64)");
  cmd->add_option("--format", cfg.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--order", cfg.order, "generating-function slice order");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and arbitrary-precision moments of hypergeometric-type "
               "discrete weights"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.precision = default_precision();

  auto* moments_cmd = app.add_subcommand("moments", "moments by all applicable routes");
  auto* poly_cmd = app.add_subcommand("poly", "moment polynomial vectors P_n(c)");
  auto* sigma_cmd = app.add_subcommand("sigma", "sigma coefficients and regime");
  auto* stieltjes_cmd = app.add_subcommand("stieltjes", "Stieltjes transform, both forms");
  auto* verify_cmd = app.add_subcommand("verify", "run the identity suite");
  for (auto* cmd : {moments_cmd, poly_cmd, sigma_cmd, stieltjes_cmd, verify_cmd})
    add_common_flags(cmd, cfg);

  CLI11_PARSE(app, argc, argv);

  try {
    if (moments_cmd->parsed()) return cmd_moments(cfg);
    if (poly_cmd->parsed()) return cmd_poly(cfg);
    if (sigma_cmd->parsed()) return cmd_sigma(cfg);
    if (stieltjes_cmd->parsed()) return cmd_stieltjes(cfg);
    if (verify_cmd->parsed()) return cmd_verify(cfg);
  } catch (const DivergentSeries& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergent;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
