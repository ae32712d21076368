#pragma once

#include <json.hpp>

#include "csurg/braid.hpp"
#include "csurg/legendrian.hpp"
#include "csurg/limits.hpp"
#include "csurg/surgery.hpp"

namespace csurg {

using Json = nlohmann::json;

/// Integers become JSON numbers when they fit in 64 bits, decimal strings
/// otherwise.
Json to_json(const Integer& z);
Json to_json(const std::vector<Integer>& v);
Json to_json(const IntMatrix& m);
/// Rationals are always `p/q` strings.
Json rational_json(const Rational& r);

Json to_json(const BraidWord& w);
Json to_json(const ComponentPartition& p);
Json to_json(const CrossingStats& s);
Json to_json(const HypothesisReport& h);
Json to_json(const LegendrianComponent& c);

/// Components with kind, parent, depth, framing (`p/q` or `inf`) plus the
/// off-diagonal linking numbers; integral diagrams also carry the linking
/// matrix.
Json to_json(const SurgeryDiagram& d);
Json to_json(const HomologyReport& h);

/// Surgery JSON plus parallel arrays tb, rot, stab_pos, stab_neg.
Json to_json(const WeinsteinDiagram& w);
Json to_json(const ThetaReport& t);

/// `{ "prefix": [..], "tail": "ones" | "max" | {"periodic": [..]} }`;
/// kMenuMax entries print as "max".
Json to_json(const SignTuple& k);
/// Reads the tuple part of a SignTuple; the coefficient stream is supplied.
SignTuple sign_tuple_from_json(const Json& j, CoeffStream coeffs);

}  // namespace csurg
