#pragma once

#include "a2w/connection.hpp"
#include "a2w/mc.hpp"
#include "a2w/params.hpp"
#include "a2w/picard.hpp"
#include "a2w/ppoint.hpp"
#include "a2w/weyl.hpp"

#include <json.hpp>

namespace a2w {

using Json = nlohmann::ordered_json;

// Rationals serialize as canonical strings, nu as a 3x3 array of strings in
// row order (0, 1, inf), PPoint as three canonical strings, PicClass as a
// 10-integer array in basis order E0..E9.
Json to_json(const Rat& r);
Json to_json(const ParamVector& nu);
Json to_json(const PPoint& p);
Json to_json(const PicClass& c);
Json to_json(const Poly& p);
Json to_json(const MatP& m);
Json to_json(const ConnectionForm& c);
Json to_json(const BetaForm& b);
Json to_json(const ExponentPrediction& e);
Json to_json(const VerifyReport& r);
Json to_json(const OrbitResult& o);
Json to_json(const ModuliState& s);

ParamVector nu_from_json(const Json& j);
PPoint ppoint_from_json(const Json& j);

}  // namespace a2w
