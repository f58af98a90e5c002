#pragma once

#include <json.hpp>

#include "maxorder/conditions.hpp"
#include "maxorder/majorization.hpp"
#include "maxorder/oracle.hpp"
#include "maxorder/order_checks.hpp"
#include "maxorder/theorems.hpp"

namespace maxorder {

// JSON encodings of the library results. Keys are emitted in sorted order, so
// equal inputs always serialize to identical bytes.

nlohmann::json to_json(const Grid& g);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const MonotoneVerdict& v);
nlohmann::json to_json(const OrderVerdict& v);
nlohmann::json to_json(const MajorizationRelation& r);
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const TheoremConclusion& c);
nlohmann::json to_json(const Comparison& c);
nlohmann::json to_json(const Analysis& a);
nlohmann::json to_json(const FalsifyReport& r);
nlohmann::json to_json(const McStReport& r);

}  // namespace maxorder
