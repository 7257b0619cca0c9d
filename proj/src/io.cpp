#include "grasstropic/io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace grasstropic::io {

namespace {

std::string fill_row(const std::vector<diagrams::Fill>& row) {
  std::string s;
  for (auto f : row) s += static_cast<char>(f);
  return s;
}

std::string key(const Subset& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

Rational rational_of(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a rational string, got " + j.dump());
}

Json point(const soliton::Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

soliton::Point point_of(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("point must be [x, y]");
  return {rational_of(j[0]), rational_of(j[1])};
}

soliton::VertexKind vertex_kind(const std::string& s) {
  for (auto k : {soliton::VertexKind::Trivalent, soliton::VertexKind::XCrossing, soliton::VertexKind::Higher,
                 soliton::VertexKind::Boundary})
    if (soliton::to_string(k) == s) return k;
  throw ParseError("unknown vertex kind " + s);
}

plabic::Kind graph_kind(const std::string& s) {
  for (auto k : {plabic::Kind::Boundary, plabic::Kind::Black, plabic::Kind::White, plabic::Kind::Crossing})
    if (plabic::to_string(k) == s) return k;
  throw ParseError("unknown vertex kind " + s);
}

template <class T, class F>
Json matrix_json(const Matrix<T>& m, F str) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(str(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class T, class F>
Matrix<T> matrix_of(const Json& j, F parse) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size()), cols = static_cast<int>(j[0].size());
  Matrix<T> m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) throw ParseError("matrix rows have different lengths");
    for (int c = 0; c < cols; ++c) m(r, c) = parse(j[r][c]);
  }
  return m;
}

struct Frame {
  double x0, y0, scale;
  bool rotate;
  double px(double x) const { return rotate ? 800 - (x - x0) * scale : (x - x0) * scale; }
  double py(double y) const { return rotate ? (y - y0) * scale : 800 - (y - y0) * scale; }
};

}  // namespace

Json to_json(const diagrams::GoDiagram& d) {
  Json rows = Json::array();
  for (const auto& r : d.rows()) rows.push_back(fill_row(r));
  return Json{{"k", d.k()}, {"n", d.n()}, {"shape", d.shape().row_lengths()}, {"rows", rows}};
}

diagrams::GoDiagram go_from_json(const Json& j) {
  try {
    int k = j.at("k").get<int>(), n = j.at("n").get<int>();
    diagrams::ShapeIdeal shape(k, n, j.at("shape").get<std::vector<int>>());
    std::vector<std::vector<diagrams::Fill>> rows;
    for (const auto& r : j.at("rows")) {
      std::vector<diagrams::Fill> row;
      for (char c : r.get<std::string>()) {
        if (c != '.' && c != 'o' && c != 'x') throw ParseError(std::string("bad fill character '") + c + "'");
        row.push_back(static_cast<diagrams::Fill>(c));
      }
      rows.push_back(row);
    }
    return diagrams::GoDiagram(shape, rows);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("diagram JSON: ") + e.what());
  }
}

Json to_json(const diagrams::DecoratedPermutation& p) {
  std::vector<int> images;
  for (int i = 1; i <= p.n(); ++i) images.push_back(p.perm(i));
  return Json{{"perm", images}, {"colors", p.colors}, {"k", p.k()}};
}

Json to_json(const PolyMatrix& m) { return matrix_json(m, [](const Polynomial& p) { return p.to_string(); }); }
Json to_json(const RationalMatrix& m) { return matrix_json(m, [](const Rational& q) { return to_string(q); }); }

PolyMatrix poly_matrix_from_json(const Json& j) {
  return matrix_of<Polynomial>(j, [](const Json& e) {
    if (e.is_number_integer()) return Polynomial(Rational(e.get<long>()));
    if (!e.is_string()) throw ParseError("matrix entry must be a string or integer");
    return Polynomial::parse(e.get<std::string>());
  });
}

RationalMatrix rational_matrix_from_json(const Json& j) { return matrix_of<Rational>(j, rational_of); }

Json to_json(const grassmann::PluckerVector<Polynomial>& p) {
  Json out = Json::object();
  for (const auto& [s, v] : p) out[key(s)] = v.to_string();
  return out;
}

Json to_json(const grassmann::PluckerVector<Rational>& p) {
  Json out = Json::object();
  for (const auto& [s, v] : p) out[key(s)] = to_string(v);
  return out;
}

Json to_json(const soliton::ContourPlot& plot) {
  Json vertices = Json::array(), edges = Json::array(), regions = Json::array();
  for (const auto& v : plot.vertices) {
    Json types = Json::array();
    for (int e : v.edges) types.push_back({plot.edges[e].type.first, plot.edges[e].type.second});
    vertices.push_back({{"x", to_string(v.p.x)}, {"y", to_string(v.p.y)}, {"kind", soliton::to_string(v.kind)},
                        {"types", types}, {"edges", v.edges}});
  }
  for (const auto& e : plot.edges) {
    Json regs = Json::array({e.left >= 0 ? Json(plot.regions[e.left].J) : Json(nullptr),
                             e.right >= 0 ? Json(plot.regions[e.right].J) : Json(nullptr)});
    edges.push_back({{"type", {e.type.first, e.type.second}},
                     {"from", e.from},
                     {"to", e.to},
                     {"regions", regs},
                     {"region_ids", {e.left, e.right}},
                     {"unbounded", e.unbounded},
                     {"singular", e.singular ? Json(*e.singular) : Json(nullptr)}});
  }
  for (const auto& r : plot.regions) {
    Json poly = Json::array();
    for (const auto& p : r.polygon) poly.push_back(point(p));
    regions.push_back({{"J", r.J}, {"bounded", r.bounded}, {"polygon", poly}});
  }
  return Json{{"k", plot.k},
              {"n", plot.n},
              {"t", to_string(plot.t)},
              {"frame", plot.frame == soliton::Frame::XY ? "xy" : "xbar-ybar"},
              {"bbox", {to_string(plot.bbox.xmin), to_string(plot.bbox.xmax), to_string(plot.bbox.ymin), to_string(plot.bbox.ymax)}},
              {"vertices", vertices},
              {"edges", edges},
              {"regions", regions},
              {"issues", plot.issues}};
}

soliton::ContourPlot plot_from_json(const Json& j) {
  try {
    soliton::ContourPlot plot;
    plot.k = j.at("k").get<int>();
    plot.n = j.at("n").get<int>();
    plot.t = rational_of(j.at("t"));
    plot.frame = j.at("frame").get<std::string>() == "xy" ? soliton::Frame::XY : soliton::Frame::XBarYBar;
    const auto& b = j.at("bbox");
    plot.bbox = {rational_of(b.at(0)), rational_of(b.at(1)), rational_of(b.at(2)), rational_of(b.at(3))};
    for (const auto& v : j.at("vertices"))
      plot.vertices.push_back({{rational_of(v.at("x")), rational_of(v.at("y"))}, vertex_kind(v.at("kind").get<std::string>()),
                               v.at("edges").get<std::vector<int>>()});
    for (const auto& e : j.at("edges")) {
      soliton::ContourEdge ce;
      ce.type = {e.at("type").at(0).get<int>(), e.at("type").at(1).get<int>()};
      ce.from = e.at("from").get<int>();
      ce.to = e.at("to").get<int>();
      ce.left = e.at("region_ids").at(0).get<int>();
      ce.right = e.at("region_ids").at(1).get<int>();
      ce.unbounded = e.at("unbounded").get<bool>();
      if (!e.at("singular").is_null()) ce.singular = e.at("singular").get<bool>();
      plot.edges.push_back(ce);
    }
    for (const auto& r : j.at("regions")) {
      soliton::ContourRegion cr;
      cr.J = r.at("J").get<Subset>();
      cr.bounded = r.at("bounded").get<bool>();
      for (const auto& p : r.at("polygon")) cr.polygon.push_back(point_of(p));
      plot.regions.push_back(cr);
    }
    plot.issues = j.at("issues").get<std::vector<std::string>>();
    return plot;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("contour plot JSON: ") + e.what());
  }
}

Json to_json(const plabic::Graph& g) {
  Json vertices = Json::array(), edges = Json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertex(v);
    Json jv{{"id", v}, {"kind", plabic::to_string(vx.kind)}};
    if (vx.kind == plabic::Kind::Boundary) {
      jv["label"] = vx.label;
      if (vx.rotation.empty()) jv["color"] = vx.color;
    }
    jv["x"] = vx.x;
    jv["y"] = vx.y;
    jv["rotation"] = vx.rotation;
    vertices.push_back(jv);
  }
  for (int e = 0; e < g.edge_count(); ++e) edges.push_back({g.ends(e)[0], g.ends(e)[1]});
  return Json{{"n", g.n()}, {"vertices", vertices}, {"edges", edges}};
}

plabic::Graph graph_from_json(const Json& j) {
  try {
    plabic::Graph g;
    for (const auto& v : j.at("vertices")) {
      auto kind = graph_kind(v.at("kind").get<std::string>());
      double x = v.value("x", 0.0), y = v.value("y", 0.0);
      if (kind == plabic::Kind::Boundary) g.add_boundary(v.at("label").get<int>(), v.value("color", 0), x, y);
      else g.add_vertex(kind, x, y);
    }
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    int id = 0;
    for (const auto& v : j.at("vertices")) g.set_rotation(id++, v.at("rotation").get<std::vector<int>>());
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
}

std::string plot_svg(const soliton::ContourPlot& plot, bool rotate) {
  const auto& b = plot.bbox;
  const double w = to_double(b.xmax - b.xmin), h = to_double(b.ymax - b.ymin);
  Frame f{to_double(b.xmin), to_double(b.ymin), 800 / std::max(w, h), rotate};
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out << "<style>path{stroke:black;stroke-width:1.5;fill:none}path.singular{stroke-dasharray:6,4}"
         "text{font:11px sans-serif;text-anchor:middle}</style>\n";
  out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  for (size_t e = 0; e < plot.edges.size(); ++e) {
    const auto& ed = plot.edges[e];
    const auto& p = plot.vertices[ed.from].p;
    const auto& q = plot.vertices[ed.to].p;
    out << "<path id=\"e" << e << "\" class=\"edge" << (ed.singular.value_or(false) ? " singular" : "") << "\" d=\"M "
        << f.px(to_double(p.x)) << ' ' << f.py(to_double(p.y)) << " L " << f.px(to_double(q.x)) << ' ' << f.py(to_double(q.y))
        << "\"><title>[" << ed.type.first << ',' << ed.type.second << "]</title></path>\n";
  }
  for (const auto& r : plot.regions) {
    double cx = 0, cy = 0;
    for (const auto& p : r.polygon) cx += to_double(p.x), cy += to_double(p.y);
    if (r.polygon.empty()) continue;
    cx /= static_cast<double>(r.polygon.size());
    cy /= static_cast<double>(r.polygon.size());
    out << "<text x=\"" << f.px(cx) << "\" y=\"" << f.py(cy) << "\">" << subset_compact(r.J) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string graph_svg(const plabic::Graph& g) {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertex(v);
    if (v == 0) xmin = xmax = vx.x, ymin = ymax = vx.y;
    xmin = std::min(xmin, vx.x), xmax = std::max(xmax, vx.x);
    ymin = std::min(ymin, vx.y), ymax = std::max(ymax, vx.y);
  }
  const double pad = 1;
  Frame f{xmin - pad, ymin - pad, 800 / std::max({xmax - xmin + 2 * pad, ymax - ymin + 2 * pad, 1e-9}), false};
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out << "<style>path{stroke:black;stroke-width:1.5;fill:none}text{font:12px sans-serif;text-anchor:middle}</style>\n";
  out << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& a = g.vertex(g.ends(e)[0]);
    const auto& b = g.vertex(g.ends(e)[1]);
    out << "<path class=\"edge\" d=\"M " << f.px(a.x) << ' ' << f.py(a.y) << " L " << f.px(b.x) << ' ' << f.py(b.y) << "\"/>\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertex(v);
    switch (vx.kind) {
      case plabic::Kind::Boundary:
        out << "<text x=\"" << f.px(vx.x) << "\" y=\"" << f.py(vx.y) << "\">" << vx.label << "</text>\n";
        break;
      case plabic::Kind::Crossing: break;
      default:
        out << "<circle cx=\"" << f.px(vx.x) << "\" cy=\"" << f.py(vx.y) << "\" r=\"5\" stroke=\"black\" fill=\""
            << (vx.kind == plabic::Kind::Black ? "black" : "white") << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string graph_dot(const plabic::Graph& g) {
  std::ostringstream out;
  out << "graph plabic {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertex(v);
    out << "  v" << v << " [";
    switch (vx.kind) {
      case plabic::Kind::Boundary: out << "shape=plaintext,label=\"" << vx.label << "\""; break;
      case plabic::Kind::Black: out << "shape=circle,style=filled,fillcolor=black,label=\"\""; break;
      case plabic::Kind::White: out << "shape=circle,label=\"\""; break;
      case plabic::Kind::Crossing: out << "shape=point"; break;
    }
    out << "];\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) out << "  v" << g.ends(e)[0] << " -- v" << g.ends(e)[1] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace grasstropic::io
