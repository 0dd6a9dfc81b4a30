#pragma once

#include <string>

#include "json.hpp"
#include "latticeflow/flowpoly.hpp"
#include "latticeflow/toric.hpp"
#include "latticeflow/triang.hpp"

namespace lf::io {

using nlohmann::json;

// Malformed input throws BadJson.
json to_json(const DirectedGraph& g);
DirectedGraph graph_from_json(const json& j);

// Missing "upper" means unbounded everywhere, missing "lower" means zero.
json to_json(const FlowPolytope& p);
FlowPolytope polytope_from_json(const json& j);

json to_json(const TransportSpec& s);
TransportSpec transport_from_json(const json& j);

// Big integers and rationals travel as strings ("p/q").
json to_json(const PointConfiguration& a);
PointConfiguration configuration_from_json(const json& j);

// With "points" when include_points, so the output stands alone.
json to_json(const Subdivision& d, bool include_points = true);
Subdivision subdivision_from_json(const json& j, const PointConfiguration& a);
Subdivision subdivision_from_json(const json& j);

json to_json(const RegularityCertificate& c);
RegularityCertificate certificate_from_json(const json& j);

// Keys are 0-based configuration indices.
json to_json(const Binomial& b);
Binomial binomial_from_json(const json& j, int n);

json to_json(const TermOrder& o);
TermOrder order_from_json(const json& j, int n);

// "x3*x7 - x4^2", 1-based, the inverse of to_string(Binomial).
Binomial binomial_from_string(const std::string& s, int n);

// Whatever the input describes: a polytope, a transport spec ({"r","c"}) or a configuration.
enum class InputKind { Polytope, Transport, Configuration };
InputKind input_kind(const json& j);

}  // namespace lf::io
