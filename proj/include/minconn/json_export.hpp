#pragma once

#include <json.hpp>

#include "minconn/bounds.hpp"
#include "minconn/connectivity.hpp"
#include "minconn/constructions.hpp"
#include "minconn/oracle.hpp"
#include "minconn/structure.hpp"

namespace minconn {

// Stable machine-readable serializations shared by the CLI and the tests.
// Field names are part of the output contract and never renamed casually.

const char* regime_name(ParityRegime r);
const char* regime_name(Regime r);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const ParityClass& pc);
nlohmann::json to_json(const ConstructionPlan& plan);
nlohmann::json to_json(const MinimalityReport& r);
nlohmann::json to_json(const TightnessTable& t);
nlohmann::json to_json(const TightnessReport& r);

// The .plan.json sidecar written next to a constructed witness.
nlohmann::json witness_sidecar(const Witness& w);

}  // namespace minconn
