#pragma once

#include "bridge_order/bridge.hpp"
#include "bridge_order/diagram.hpp"
#include "bridge_order/oracle.hpp"
#include "bridge_order/order.hpp"
#include "bridge_order/parsing.hpp"

#include <json.hpp>

namespace bridge_order {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "bridge-order/1";

Json to_json(const Fraction& f);
Json to_json(const ExpandedWord& w);
Json to_json(const EvenWord& w);
Json to_json(const CFExpansion& e);
Json to_json(const TwoBridgeClass& k);
Json to_json(const Parsing& p);
Json to_json(const StdForm& f);
Json to_json(const OrderRelation& r);
Json to_json(const SharedBase& b);
Json to_json(const UpperBoundCertificate& c);
Json to_json(const SetUpperBound& s);
Json to_json(const Partner& p);
Json to_json(const Witness& w);
Json to_json(const SearchResult& r);
Json to_json(const LemmaReport& r);
Json to_json(const SweepRow& r);
Json to_json(const ProductDiagram& d);

// Inverses for the record types; throw InvalidInput on malformed input.
ExpandedWord word_from_json(const Json& j);
Parsing parsing_from_json(const Json& j);
StdForm std_form_from_json(const Json& j);

} // namespace bridge_order
