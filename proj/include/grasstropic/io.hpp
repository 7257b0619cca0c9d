#pragma once

#include <string>

#include "json.hpp"

#include "grasstropic/diagrams.hpp"
#include "grasstropic/grassmann.hpp"
#include "grasstropic/plabic.hpp"
#include "grasstropic/soliton.hpp"

namespace grasstropic::io {

using Json = nlohmann::ordered_json;

Json to_json(const diagrams::GoDiagram& d);
diagrams::GoDiagram go_from_json(const Json& j);

Json to_json(const diagrams::DecoratedPermutation& p);

// Entries are polynomial strings ("p2*p3", "-m5*p6+p2") or rational strings ("3/2").
Json to_json(const PolyMatrix& m);
Json to_json(const RationalMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);
RationalMatrix rational_matrix_from_json(const Json& j);  // accepts integers and "a/b" strings

// Keys are "1,2,3".
Json to_json(const grassmann::PluckerVector<Polynomial>& p);
Json to_json(const grassmann::PluckerVector<Rational>& p);

Json to_json(const soliton::ContourPlot& plot);
soliton::ContourPlot plot_from_json(const Json& j);

Json to_json(const plabic::Graph& g);
plabic::Graph graph_from_json(const Json& j);

// One path per edge, class "singular" (dashed) on singular edges. rotate turns the
// drawing by 180 degrees, which shows a C_{-infinity} plot the way it appears for t << 0.
std::string plot_svg(const soliton::ContourPlot& plot, bool rotate = false);
std::string graph_svg(const plabic::Graph& g);
std::string graph_dot(const plabic::Graph& g);

}  // namespace grasstropic::io
