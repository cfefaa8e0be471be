#include "hypermoment/jsonio.hpp"

namespace hypermoment {

Json json_of(const Rational& r) { return r.to_string(); }

Json json_of(const Poly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
  return arr;
}

Json json_of(const SeriesValue& v) {
  Json j;
  j["value"] = v.approx.to_string();
  j["tail_bound"] = v.tail_bound.to_string(6);
  j["precision_bits"] = static_cast<long>(v.approx.prec());
  if (v.exact) j["exact"] = v.exact->to_string();
  return j;
}

Json json_of(const WeightSpec& spec) {
  Json j;
  Json alphas = Json::array();
  for (const auto& a : spec.alphas) alphas.push_back(a.to_string());
  Json betas = Json::array();
  for (const auto& b : spec.betas) betas.push_back(b.to_string());
  j["alpha"] = alphas;
  j["beta"] = betas;
  j["c"] = spec.c.to_string();
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hypermoment
