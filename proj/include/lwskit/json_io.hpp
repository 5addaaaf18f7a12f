#pragma once

#include <json.hpp>

#include "lwskit/instances.hpp"

namespace lwskit {

using nlohmann::json;

// Tensor schema: {"kind":"dense"|"cp"|"slice","k":...,"n":...,
//                 "data"/"factors"+"d"/"terms":...}; entries are integers with
// the string "inf" standing in for +infinity. Round-trips exactly.
json tensor_to_json(const CostTensor& t);
CostTensor tensor_from_json(const json& j);

json matrix_to_json(const CostMatrix& m);
CostMatrix matrix_from_json(const json& j);

// Instance schema: the tensor schema plus
// {"schema":"lwskit/1","problem":"lws"|"kdlws"|"static"|"pt"|"interval2d",...}.
json instance_to_json(const LwsInstance& inst);
json instance_to_json(const KdLwsInstance& inst);
json instance_to_json(const PtInstance& inst);
json instance_to_json(const StaticKdInstance& inst);
json interval2d_to_json(const CostTensor& w);

// Validates the schema tag and returns the "problem" value.
std::string problem_of(const json& j);

LwsInstance lws_from_json(const json& j);
KdLwsInstance kdlws_from_json(const json& j);
PtInstance pt_from_json(const json& j);
StaticKdInstance static_from_json(const json& j);
CostTensor interval2d_from_json(const json& j);

}  // namespace lwskit
