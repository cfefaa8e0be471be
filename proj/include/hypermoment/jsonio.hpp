#pragma once

#include <json.hpp>

#include "hypermoment/moments.hpp"
#include "hypermoment/poly.hpp"
#include "hypermoment/series.hpp"
#include "hypermoment/weight.hpp"

namespace hypermoment {

/// Canonical machine-readable output: insertion-ordered objects, rationals
/// as "p/q" strings, floats as decimal strings tagged with their precision.
using Json = nlohmann::ordered_json;

Json json_of(const Rational& r);
Json json_of(const Poly& p);
Json json_of(const SeriesValue& v);
Json json_of(const WeightSpec& spec);

/// Stable serialization used by the CLI; parsing and re-dumping the output
/// is byte-identical.
std::string dump_canonical(const Json& j);

}  // namespace hypermoment
