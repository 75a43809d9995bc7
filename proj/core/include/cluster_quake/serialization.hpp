#pragma once

#include <nlohmann/json.hpp>

#include "cluster_quake/earthquake.hpp"
#include "cluster_quake/horocycle.hpp"
#include "cluster_quake/pattern.hpp"
#include "cluster_quake/points.hpp"

namespace cluster_quake {

using Json = nlohmann::ordered_json;

Json to_json(const IntMatrix& m);
Json to_json(const RealMatrix& m);
Json to_json(const ExchangeMatrix& eps);
Json to_json(const FPolynomial& f);
Json to_json(const FTuple& fs);
Json to_json(const TropicalPoint& L);
Json to_json(const PositivePoint& g);
Json to_json(const CentralCharge& Z);
Json to_json(const ExchangePattern& p);
Json to_json(const std::vector<Cone>& cones);

IntMatrix int_matrix_from_json(const Json& j);
// Accepts {"entries": [[...]], "d": [...]} (d optional) or a bare list of rows.
ExchangeMatrix exchange_matrix_from_json(const Json& j);
FPolynomial fpolynomial_from_json(const Json& j, std::size_t nvars);

}  // namespace cluster_quake
