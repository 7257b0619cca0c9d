#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "grasstropic/io.hpp"
#include "grasstropic/minus_infinity.hpp"
#include "grasstropic/verify.hpp"

using namespace grasstropic;
using io::Json;

namespace {

constexpr int kInputError = 2;
constexpr int kVerifyFailure = 1;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_json_path(const std::string& path) { return path.size() > 5 && path.substr(path.size() - 5) == ".json"; }

diagrams::GoDiagram load_go(const std::string& path) {
  std::string text = read_file(path);
  try {
    if (is_json_path(path)) return io::go_from_json(Json::parse(text));
    return diagrams::GoDiagram::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

PolyMatrix load_matrix(const std::string& path) {
  try {
    return io::poly_matrix_from_json(Json::parse(read_file(path)));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Exact rational; decimal and exponent notation are refused.
Rational exact(const std::string& text) {
  if (text.find_first_of(".eE") != std::string::npos)
    throw ParseError("'" + text + "' is a floating literal; write exact rationals such as 3/2");
  return parse_rational(text);
}

soliton::KappaVector parse_kappa(const std::string& text) {
  std::vector<Rational> vals;
  std::string tok;
  for (char c : text + ",") {
    if (c == ',' || c == ' ') {
      if (!tok.empty()) vals.push_back(exact(tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  return soliton::KappaVector(std::move(vals));
}

soliton::KappaVector default_kappa(int n) {
  static const std::vector<Rational> base{Rational(-5), Rational(-3), Rational(-2), Rational(-1, 3), Rational(1, 2),
                                          Rational(7, 5), Rational(3), Rational(9, 2), Rational(6)};
  if (n > static_cast<int>(base.size())) throw ParseError("no default kappa for n > 9; pass --kappa");
  return soliton::KappaVector(std::vector<Rational>(base.begin(), base.begin() + n));
}

// "p3=2", "p*=1", "m*=0"
Assignment parse_assignment(const std::vector<std::string>& sets, const PolyMatrix& m, bool complete = true) {
  std::set<Variable> vars;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      for (auto v : m(i, j).variables()) vars.insert(v);
  Assignment a;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("--set expects name=value, got '" + s + "'");
    std::string name = s.substr(0, eq);
    Rational value = exact(s.substr(eq + 1));
    if (name.size() >= 2 && name[1] == '*' && name.size() == 2 && (name[0] == 'p' || name[0] == 'm')) {
      for (auto v : vars)
        if (v.kind == name[0]) a.set(v, value);
      continue;
    }
    if (name.size() < 2 || (name[0] != 'p' && name[0] != 'm') ||
        !std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("unknown variable '" + name + "'");
    Variable v{name[0], std::stoi(name.substr(1))};
    if (!vars.count(v)) throw ParseError("variable " + name + " does not occur");
    a.set(v, value);
  }
  std::string missing;
  for (auto v : vars) {
    auto it = a.values.find(v.code());
    if (it == a.values.end()) missing += " " + v.name();
    else if (v.kind == 'p' && it->second == 0) throw ParseError(v.name() + " must be nonzero");
  }
  if (complete && !missing.empty()) throw ParseError("no value for" + missing);
  return a;
}

// Substitutes the assigned variables and keeps the others.
Polynomial substitute(const Polynomial& p, const Assignment& a) {
  Polynomial out;
  for (const auto& [mono, coeff] : p.terms()) {
    Polynomial term(coeff);
    for (auto [code, exp] : mono) {
      auto it = a.values.find(code);
      Polynomial factor = it == a.values.end() ? Polynomial::variable(Variable::from_code(code)) : Polynomial(it->second);
      for (int e = 0; e < exp; ++e) term = term * factor;
    }
    out += term;
  }
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot write " + out);
  f << text;
}

std::string images(const weyl::Permutation& p) {
  std::string s;
  for (int i = 1; i <= p.size(); ++i) s += (i > 1 ? " " : "") + std::to_string(p(i));
  return s;
}

std::string decorated_text(const diagrams::DecoratedPermutation& p) {
  std::string s = images(p.perm);
  std::string fixed;
  for (int i = 1; i <= p.n(); ++i)
    if (p.colors[i - 1]) fixed += " " + std::to_string(i) + (p.colors[i - 1] > 0 ? ":+1" : ":-1");
  if (!fixed.empty()) s += "  fixed" + fixed;
  return s;
}

std::string plucker_key(const Subset& s) {
  std::string out = "Δ_{";
  for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

template <class T, class F>
std::string matrix_text(const Matrix<T>& m, F str) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<size_t> width(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      cells[i].push_back(str(m(i, j)));
      width[j] = std::max(width[j], cells[i].back().size());
    }
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    s += "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += "  ";
      s += std::string(width[j] - cells[i][j].size(), ' ') + cells[i][j];
    }
    s += "]\n";
  }
  return s;
}

std::string plot_text(const soliton::ContourPlot& plot) {
  std::ostringstream out;
  out << "Gr(" << plot.k << "," << plot.n << ") t=" << to_string(plot.t)
      << (plot.frame == soliton::Frame::XY ? "" : " (t -> -infinity, coordinates x/t, y/t)") << "\n";
  out << plot.vertices.size() << " vertices, " << plot.edges.size() << " edges, " << plot.regions.size() << " regions\n";
  out << "regions:";
  for (const auto& J : plot.region_labels()) out << ' ' << subset_to_string(J);
  out << "\n";
  for (size_t v = 0; v < plot.vertices.size(); ++v) {
    const auto& vx = plot.vertices[v];
    if (vx.kind == soliton::VertexKind::Boundary) continue;
    out << soliton::to_string(vx.kind) << " at (" << to_string(vx.p.x) << ", " << to_string(vx.p.y) << "):";
    for (int e : vx.edges) out << " [" << plot.edges[e].type.first << "," << plot.edges[e].type.second << "]";
    out << "\n";
  }
  for (size_t e = 0; e < plot.edges.size(); ++e)
    if (plot.edges[e].singular.value_or(false))
      out << "singular [" << plot.edges[e].type.first << "," << plot.edges[e].type.second << "]\n";
  for (const auto& issue : plot.issues) out << "issue: " << issue << "\n";
  return out.str();
}

std::string graph_text(const plabic::Graph& g) {
  std::ostringstream out;
  int counts[4] = {0, 0, 0, 0};
  for (int v = 0; v < g.vertex_count(); ++v) ++counts[static_cast<int>(g.vertex(v).kind)];
  out << "n=" << g.n() << ", " << counts[1] << " black, " << counts[2] << " white, " << counts[3] << " crossings, "
      << g.edge_count() << " edges\n";
  out << "trip permutation: " << decorated_text(plabic::trip_permutation(g)) << "\n";
  try {
    auto labels = plabic::label_all(g);
    out << "face labels:";
    for (const auto& J : labels.region_labels()) out << ' ' << subset_to_string(J);
    out << "\n";
    auto res = plabic::resonance_check(g, labels);
    out << (res.reduced ? "reduced (resonant, no crossings)" : "not reduced") << "\n";
  } catch (const Error& e) {
    out << "face labels unavailable: " << e.what() << "\n";
  }
  return out.str();
}

std::string graph_output(const plabic::Graph& g, const std::string& format) {
  if (format == "json") return io::to_json(g).dump(2);
  if (format == "dot") return io::graph_dot(g);
  if (format == "svg") return io::graph_svg(g);
  return graph_text(g);
}

plabic::Triangulation parse_triangulation(int n, const std::string& text) {
  plabic::Triangulation t{n, {}};
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw ParseError("diagonals look like 1-3,1-4");
    int a = std::stoi(item.substr(0, dash)), b = std::stoi(item.substr(dash + 1));
    t.diagonals.emplace_back(std::min(a, b), std::max(a, b));
  }
  plabic::validate(t);
  return t;
}

struct Common {
  std::string file, matrix, graph, out, format = "text";
  std::vector<std::string> sets;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deodhar components, soliton contour plots and plabic graphs of the real Grassmannian"};
  app.require_subcommand(1);
  Common c;

  // diagram
  auto* diagram = app.add_subcommand("diagram", "Go-diagrams, necklaces and decorated permutations");
  diagram->require_subcommand(1);
  std::string necklace_text, perm_text;
  int k = 0, n = 0;
  auto* d_perm = diagram->add_subcommand("perm", "convert between Grassmann necklaces and decorated permutations");
  d_perm->add_option("--necklace", necklace_text, "comma-separated necklace, e.g. 1257,2357,...");
  d_perm->add_option("--perm", perm_text, "decorated permutation, e.g. '(3,4,1,2)' or '(1,3,2)[1:+1]'");
  auto* d_enum = diagram->add_subcommand("enumerate", "list every Go-diagram in a k x (n-k) rectangle");
  d_enum->add_option("-k", k)->required();
  d_enum->add_option("-n", n)->required();
  bool le_only = false;
  d_enum->add_flag("--le", le_only, "only Le-diagrams");
  auto* d_pi = diagram->add_subcommand("pi", "decorated permutation of a Go-diagram");
  auto* d_show = diagram->add_subcommand("show", "word, v, w, labels and necklace of a Go-diagram");
  for (auto* s : {d_pi, d_show}) s->add_option("--file", c.file, "Go-diagram (.go text or .json)")->required();
  for (auto* s : {d_perm, d_enum, d_pi, d_show})
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // matrix
  auto* matrix = app.add_subcommand("matrix", "matrices and Plucker coordinates of Deodhar components");
  matrix->require_subcommand(1);
  auto* m_build = matrix->add_subcommand("build", "the matrix g of a Go-diagram");
  auto* m_project = matrix->add_subcommand("project", "the k x n matrix A of a Go-diagram");
  auto* m_pluck = matrix->add_subcommand("pluckers", "all maximal minors");
  for (auto* s : {m_build, m_project, m_pluck}) {
    s->add_option("--file", c.file, "Go-diagram (.go text or .json)");
    s->add_option("--set", c.sets, "assign variables: p3=2, p*=1, m*=0");
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  }
  m_pluck->add_option("--matrix", c.matrix, "JSON matrix of polynomial strings");

  // contour
  auto* contour = app.add_subcommand("contour", "soliton contour plot at a fixed time");
  std::string kappa_text, t_text = "0", bbox_text;
  bool asymptotics = false, minus_infinity = false, strict_kappa = false, rotate = false;
  contour->add_option("--file", c.file, "Go-diagram (.go text or .json)");
  contour->add_option("--matrix", c.matrix, "JSON matrix of polynomial strings");
  contour->add_option("--set", c.sets, "assign variables: p3=2, p*=1, m*=0 (default p*=1, m*=0)");
  contour->add_option("--kappa", kappa_text, "increasing exact rationals, e.g. -5,-3,-2,-1,0,1,2,3,4");
  contour->add_option("--t", t_text, "time, exact rational");
  contour->add_option("--bbox", bbox_text, "xmin,xmax,ymin,ymax");
  contour->add_flag("--asymptotics", asymptotics, "print the unbounded line-solitons for y >> 0 and y << 0");
  contour->add_flag("--minus-infinity", minus_infinity, "the t -> -infinity plot of a Le-diagram");
  contour->add_flag("--strict-kappa", strict_kappa, "refuse kappa with equal subset sums");
  contour->add_flag("--rotate", rotate, "draw the SVG turned by 180 degrees");
  contour->add_option("--format", c.format, "text, json or svg")->check(CLI::IsMember({"text", "json", "svg"}));
  contour->add_option("-o,--output", c.out, "write to a file");

  // plabic
  auto* plabic_cmd = app.add_subcommand("plabic", "plabic graphs");
  plabic_cmd->require_subcommand(1);
  auto* p_go = plabic_cmd->add_subcommand("go", "the graph of a Go-diagram");
  p_go->add_option("--file", c.file, "Go-diagram")->required();
  auto* p_tri = plabic_cmd->add_subcommand("triangulation", "graphs of triangulations of an n-gon");
  std::string diagonals;
  bool all_tri = false;
  p_tri->add_option("-n", n)->required();
  p_tri->add_option("--diagonals", diagonals, "e.g. 1-3,1-4");
  p_tri->add_flag("--all", all_tri, "every triangulation");
  auto* p_contour = plabic_cmd->add_subcommand("contour", "the graph of a contour plot");
  p_contour->add_option("--file", c.file, "Go-diagram")->required();
  p_contour->add_option("--set", c.sets, "assign variables (default p*=1, m*=0)");
  p_contour->add_option("--kappa", kappa_text, "increasing exact rationals");
  p_contour->add_option("--t", t_text, "time, exact rational");
  auto* p_info = plabic_cmd->add_subcommand("info", "trip permutation, face labels and resonance of a graph");
  p_info->add_option("--graph", c.graph, "graph JSON")->required();
  auto* p_search = plabic_cmd->add_subcommand("search", "bounded search for a reduction site of a graph");
  int depth = 3;
  p_search->add_option("--graph", c.graph, "graph JSON")->required();
  p_search->add_option("--depth", depth, "maximal number of moves");
  for (auto* s : {p_go, p_tri, p_contour, p_info, p_search}) {
    s->add_option("--format", c.format, "text, json, dot or svg")->check(CLI::IsMember({"text", "json", "dot", "svg"}));
    s->add_option("-o,--output", c.out, "write to a file");
  }

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify::Options vopts;
  std::string seed_text = "1";
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("-n", vopts.n, "size bound");
  verify_cmd->add_option("--samples", vopts.samples, "random draws");
  verify_cmd->add_option("--seed", seed_text, "random seed");
  verify_cmd->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  auto load_a = [&]() -> PolyMatrix {
    if (!c.matrix.empty()) return load_matrix(c.matrix);
    if (c.file.empty()) throw ParseError("pass --file or --matrix");
    return grassmann::component_matrix(load_go(c.file));
  };
  auto numeric_pluckers = [&](const PolyMatrix& a) {
    std::vector<std::string> sets{"p*=1", "m*=0"};
    sets.insert(sets.end(), c.sets.begin(), c.sets.end());
    return grassmann::pluckers(evaluate(a, parse_assignment(sets, a)));
  };

  try {
    if (diagram->parsed()) {
      if (d_perm->parsed()) {
        if (!necklace_text.empty()) {
          std::vector<Subset> sets;
          std::istringstream in(necklace_text);
          std::string item;
          while (std::getline(in, item, ',')) sets.push_back(parse_subset(item));
          diagrams::GrassmannNecklace neck(static_cast<int>(sets.size()), sets);
          auto pi = diagrams::necklace_to_perm(neck);
          emit(c.format == "json" ? io::to_json(pi).dump(2) : decorated_text(pi), "");
        } else if (!perm_text.empty()) {
          auto neck = diagrams::perm_to_necklace(diagrams::parse_decorated(perm_text));
          if (c.format == "json") {
            Json j = Json::array();
            for (const auto& s : neck.sets()) j.push_back(s);
            emit(j.dump(), "");
          } else {
            emit(neck.to_string(), "");
          }
        } else {
          throw ParseError("pass --necklace or --perm");
        }
      } else if (d_enum->parsed()) {
        if (k < 1 || n <= k) throw ParseError("need 1 <= k < n");
        std::vector<diagrams::GoDiagram> all;
        diagrams::for_each_go_diagram(k, n, [&](const diagrams::GoDiagram& d) {
          if (!le_only || diagrams::is_le_diagram(d)) all.push_back(d);
        });
        if (c.format == "json") {
          Json j = Json::array();
          for (const auto& d : all) j.push_back(io::to_json(d));
          emit(j.dump(2), "");
        } else {
          for (const auto& d : all) std::cout << d.to_text() << "\n";
          std::cout << all.size() << " diagrams\n";
        }
      } else {
        auto d = load_go(c.file);
        auto pi = diagrams::decorated_pi_of_go(d);
        if (d_pi->parsed()) {
          emit(c.format == "json" ? io::to_json(pi).dump(2) : decorated_text(pi), "");
        } else if (c.format == "json") {
          Json j = io::to_json(d);
          j["word"] = weyl::format_word(diagrams::shape_word(d.shape()));
          j["v"] = d.v().to_string();
          j["w"] = d.w().to_string();
          j["pi"] = io::to_json(pi);
          j["le"] = diagrams::is_le_diagram(d);
          emit(j.dump(2), "");
        } else {
          std::ostringstream out;
          out << "shape " << d.shape().to_string() << "\n";
          out << "word " << weyl::format_word(diagrams::shape_word(d.shape())) << "\n";
          out << "mask " << d.subexpression().mask_string() << "\n";
          out << "v " << d.v().to_string() << "\nw " << d.w().to_string() << "\n";
          out << "pi " << pi.to_string() << "\n";
          out << "necklace " << diagrams::perm_to_necklace(pi).to_string() << "\n";
          out << "le-diagram " << (diagrams::is_le_diagram(d) ? "yes" : "no") << "\n";
          for (const auto& row : diagrams::labeled_go_diagram(d)) {
            for (const auto& b : row) out << std::setw(4) << b.to_string();
            out << "\n";
          }
          emit(out.str(), "");
        }
      }
      return 0;
    }

    if (matrix->parsed()) {
      PolyMatrix m;
      if (m_build->parsed()) {
        if (c.file.empty()) throw ParseError("pass --file");
        m = grassmann::build_g(load_go(c.file));
      } else if (m_project->parsed()) {
        if (c.file.empty()) throw ParseError("pass --file");
        m = grassmann::component_matrix(load_go(c.file));
      } else {
        m = load_a();
      }
      if (m_pluck->parsed()) {
        auto sym = grassmann::pluckers(m);
        if (!c.sets.empty()) {
          auto at = parse_assignment(c.sets, m, false);
          for (auto& [I, v] : sym) v = substitute(v, at);
        }
        if (c.format == "json") {
          emit(io::to_json(sym).dump(2), "");
        } else {
          for (const auto& [I, v] : sym) std::cout << plucker_key(I) << " = " << v.to_string() << "\n";
        }
        return 0;
      }
      if (!c.sets.empty()) {
        auto at = parse_assignment(c.sets, m, false);
        m = m.map([&](const Polynomial& p) { return substitute(p, at); });
      }
      emit(c.format == "json" ? io::to_json(m).dump(2) : matrix_text(m, [](const Polynomial& p) { return p.to_string(); }), "");
      return 0;
    }

    if (contour->parsed() || p_contour->parsed()) {
      const Rational t = exact(t_text);
      std::optional<diagrams::GoDiagram> d;
      if (!c.file.empty()) d = load_go(c.file);
      PolyMatrix a = load_a();
      const int nn = a.cols();
      auto kappa = kappa_text.empty() ? default_kappa(nn) : parse_kappa(kappa_text);
      if (kappa.n() != nn) throw ParseError("kappa has " + std::to_string(kappa.n()) + " entries, need " + std::to_string(nn));
      auto check = soliton::validate_kappa(kappa.values());
      if (!check.generic) {
        std::string msg = "kappa is not generic";
        if (check.witness)
          msg += ": " + subset_to_string(check.witness->a) + " and " + subset_to_string(check.witness->b) + " have equal sums";
        if (strict_kappa) throw ParseError(msg);
        std::cerr << "warning: " << msg << "\n";
      }
      std::optional<soliton::BoundingBox> bbox;
      if (!bbox_text.empty()) {
        std::vector<Rational> v;
        std::istringstream in(bbox_text);
        std::string item;
        while (std::getline(in, item, ',')) v.push_back(exact(item));
        if (v.size() != 4 || !(v[0] < v[1]) || !(v[2] < v[3])) throw ParseError("--bbox expects xmin,xmax,ymin,ymax");
        bbox = soliton::BoundingBox{v[0], v[1], v[2], v[3]};
      }
      soliton::ContourPlot plot;
      std::optional<grassmann::PluckerVector<Rational>> p;
      if (minus_infinity) {
        if (!d) throw ParseError("--minus-infinity needs a Go-diagram --file");
        plot = soliton::contour_minus_infinity(*d, kappa, bbox);
      } else {
        p = numeric_pluckers(a);
        plot = soliton::contour_plot(grassmann::matroid_of(*p, nn), kappa, t, bbox);
        if (plot.generic()) soliton::singular_edges(*p, plot);
      }
      if (p_contour->parsed()) {
        if (!plot.generic()) throw Error("contour plot is not generic: " + plot.issues.front());
        auto g = plabic::from_contour(plot, soliton::perm_from_plot(plot));
        emit(graph_output(g, c.format), c.out);
        return 0;
      }
      if (asymptotics) {
        auto asym = soliton::unbounded_asymptotics(plot);
        std::ostringstream out;
        if (c.format == "json") {
          Json j{{"top", Json::array()}, {"bottom", Json::array()}};
          for (auto [i, jj] : asym.top) j["top"].push_back({i, jj});
          for (auto [i, jj] : asym.bottom) j["bottom"].push_back({i, jj});
          emit(j.dump(2), c.out);
        } else {
          out << "top " << soliton::format_types(asym.top) << "\n";
          out << "bottom " << soliton::format_types(asym.bottom) << "\n";
          emit(out.str(), c.out);
        }
        return plot.generic() ? 0 : kVerifyFailure;
      }
      if (c.format == "json") emit(io::to_json(plot).dump(2), c.out);
      else if (c.format == "svg") emit(io::plot_svg(plot, rotate), c.out);
      else emit(plot_text(plot), c.out);
      return 0;
    }

    if (plabic_cmd->parsed()) {
      if (p_go->parsed()) {
        emit(graph_output(plabic::from_go(load_go(c.file)), c.format), c.out);
      } else if (p_tri->parsed()) {
        if (all_tri) {
          auto ts = plabic::all_triangulations(n);
          if (c.format == "json") {
            Json j = Json::array();
            for (const auto& t : ts) j.push_back({{"diagonals", t.diagonals}, {"graph", io::to_json(plabic::from_triangulation(t))}});
            emit(j.dump(2), c.out);
          } else {
            std::ostringstream out;
            for (const auto& t : ts) {
              for (size_t i = 0; i < t.diagonals.size(); ++i)
                out << (i ? "," : "") << t.diagonals[i].first << "-" << t.diagonals[i].second;
              out << "\n";
            }
            out << ts.size() << " triangulations\n";
            emit(out.str(), c.out);
          }
        } else {
          emit(graph_output(plabic::from_triangulation(parse_triangulation(n, diagonals)), c.format), c.out);
        }
      } else if (p_info->parsed() || p_search->parsed()) {
        auto g = io::graph_from_json(Json::parse(read_file(c.graph)));
        if (p_info->parsed()) {
          emit(graph_output(g, c.format), c.out);
        } else {
          auto res = plabic::search_R1(g, depth);
          std::ostringstream out;
          out << "explored " << res.explored << " graphs\n";
          if (res.site) {
            out << "reduction site after " << res.path.size() << " moves\n";
            for (const auto& m : res.path) out << "  " << plabic::describe(m) << "\n";
          } else {
            out << "no reduction site within " << depth << " moves\n";
          }
          emit(out.str(), c.out);
        }
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      try {
        vopts.seed = std::stoull(seed_text);
      } catch (const std::exception&) {
        throw ParseError("--seed expects a nonnegative integer");
      }
      vopts.threads = verify::default_threads();
      auto names = verify::suite_names();
      std::vector<std::string> run = suite == "all" ? names : std::vector<std::string>{suite};
      bool pass = true;
      Json reports = Json::array();
      for (const auto& s : run) {
        auto rep = verify::run(s, vopts);
        pass = pass && rep.pass;
        if (c.format == "json") {
          reports.push_back({{"suite", rep.suite},
                             {"pass", rep.pass},
                             {"checked", rep.checked},
                             {"skipped", rep.skipped},
                             {"seed", rep.seed},
                             {"failures", rep.failures},
                             {"notes", rep.notes}});
        } else {
          std::cout << rep.suite << ": " << (rep.pass ? "pass" : "FAIL") << " (" << rep.checked << " checked";
          if (rep.skipped) std::cout << ", " << rep.skipped << " non-generic skipped";
          std::cout << ", seed " << rep.seed << ")\n";
          for (const auto& note : rep.notes) std::cout << "  " << note << "\n";
          for (const auto& f : rep.failures) std::cout << "  failure: " << f << "\n";
        }
      }
      if (c.format == "json") std::cout << reports.dump(2) << "\n";
      return pass ? 0 : kVerifyFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
