#pragma once

#include <json.hpp>

#include "dyncol/constructive.hpp"
#include "dyncol/discharging.hpp"
#include "dyncol/mad.hpp"
#include "dyncol/solver.hpp"

namespace dyncol {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"0":[1,2], "1":[3]} keyed by vertex id; a plain array is accepted too.
Json lists_to_json(const ListAssignment& lists);
ListAssignment lists_from_json(const Json& j, int n);

// {"0":c0, ...}; uncolored vertices are omitted. A plain array is accepted.
Json coloring_to_json(const Coloring& phi);
Coloring coloring_from_json(const Json& j, int n);

// {"0":f0, ...} or an array.
DemandFunction demand_from_json(const Json& j, int n);

// {"ordering":[...], "avoid":[[early, late], ...]}
GreedyCertificate certificate_from_json(const Json& j);
Json to_json(const GreedyCertificate& c);

Json to_json(const MadResult& m);
Json to_json(const ConfigMatch& m);
Json to_json(const ChargeLedger& l);
Json to_json(const DischargeCheck& c);
Json to_json(const ConsistencyReport& r);
Json to_json(const ReductionTrace& t);
Json to_json(const ValidityReport& v);

} // namespace dyncol
