#pragma once

#include <nlohmann/json.hpp>

#include "kvb/formal_series.hpp"
#include "kvb/laurent_poly.hpp"
#include "kvb/rational_fn.hpp"

namespace kvb {

using json = nlohmann::json;

// [{"c": "<decimal>", "e": {"<var>": exp, ...}}, ...] in decreasing
// graded lexicographic order.
json to_json(const LaurentPoly& p, const VarTable& vars);
LaurentPoly poly_from_json(const json& j, const VarTable& vars, Tag default_tag = kTagA);

// {"numerator": poly, "denominator": poly}
json to_json(const RationalFn& r, const VarTable& vars);

// {"window": {"z": [low, upper], "w": [low, upper]}, "terms": [{"z": a, "w": b, "c": poly}]}
// with null for an untruncated low bound.
json to_json(const FormalSeries& s, const VarTable& vars);

}  // namespace kvb
