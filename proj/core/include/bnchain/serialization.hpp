#pragma once

#include <nlohmann/json.hpp>

#include "bnchain/effective_series.hpp"
#include "bnchain/elliptic_chain.hpp"
#include "bnchain/tableaux.hpp"
#include "bnchain/tropical_chain.hpp"

namespace bnchain {

using Json = nlohmann::json;

// Every *_from_json throws std::invalid_argument with a readable message on
// malformed input. Rationals travel as "p/q" strings.

Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json bundle_to_json(const EllipticBundleClass& b);
EllipticBundleClass bundle_from_json(const Json& j, int component, int degree);

Json eh_series_to_json(const EHSeries& s);
EHSeries eh_series_from_json(const Json& j);

Json effective_series_to_json(const EffectiveSeries& s);
EffectiveSeries effective_series_from_json(const Json& j);

Json geometry_to_json(const ChainGeometry& geom);
ChainGeometry geometry_from_json(const Json& j);

Json point_to_json(const ChainPoint& p, int mult);

Json divisor_to_json(const TropicalDivisor& D);
/// With a geometry, loop coordinates are reduced to canonical form; without
/// one they are taken as given.
TropicalDivisor divisor_from_json(const Json& j, const ChainGeometry* geom = nullptr);

Json vanishing_table_to_json(const TropVanishingTable& table);
TropVanishingTable vanishing_table_from_json(const Json& j);

}  // namespace bnchain
