#pragma once

#include <json.hpp>

#include "qfrep/constructions.hpp"
#include "qfrep/elliptic.hpp"
#include "qfrep/identities.hpp"
#include "qfrep/localsolve.hpp"
#include "qfrep/pointgen.hpp"

namespace qfrep {

using Json = nlohmann::ordered_json;

// Rationals serialize as "num/den" strings (integers as "n"). Parsing also accepts JSON integers.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
// Polynomials: ascending coefficient arrays.
Json to_json(const UniPoly& f);
UniPoly poly_from_json(const Json& j);
Json to_json(const WCurve& E);
Json to_json(const WPoint& P);  // {"x","y"} or {"inf": true}
Json to_json(const QuarticPoint& P);  // {"U","w"} or "inf+" / "inf-"
QuarticPoint quartic_point_from_json(const Json& j);
Json to_json(const SurfacePoint& P);
Json to_json(const Construction& con);
Json to_json(const LocalVerdict& v);
Json to_json(const IdentityReport& r);
Json to_json(const PointStream& s, const Construction& con);
Json to_json(const CzReport& r);
Json to_json(const IntegerPointSearch& s);

// Parameter object {"b": "3", "p0": "1/2", ...}; non-rational values are a Parse error.
ParamMap params_from_json(const Json& j);

}  // namespace qfrep
