#pragma once

#include "msregion/connectivity.hpp"
#include "msregion/massaction.hpp"
#include "msregion/regions.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace msr {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit in a long become JSON numbers, anything else a string.
Json rational_json(const Rational& q);
/// Sparse term list [[coeff, [exponents]], ...] in graded order.
Json poly_json(const Poly& p);
Json condition_json(const SignCondition& c, const SymbolTable& symbols);
Json network_json(const ReactionNetwork& net);
Json verdict_json(const ClassificationVerdict& v);
Json connectivity_json(const ConnectivityVerdict& v);
/// {kind, ambient, conditions, case_tag, ...}. A union of several conjuncts
/// uses "any_of" with one condition list per conjunct and empty "conditions".
Json region_json(const Region& region, const ConnectivityVerdict* connectivity = nullptr);
Json steady_states_json(const SteadyStateCount& res);
Json probe_json(const ProbeReport& rep, const Region& region);
void write_probe_csv(std::ostream& out, const ProbeReport& rep, const Region& region);

/// Poly from the sparse term list; inverse of poly_json.
Poly poly_from_json(const Json& j, std::size_t nvars);

}  // namespace msr
