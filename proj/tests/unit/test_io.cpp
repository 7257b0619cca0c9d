#include "doctest.h"

#include <random>
#include <regex>

#include "grasstropic/io.hpp"

using namespace grasstropic;
using diagrams::GoDiagram;
using io::Json;

namespace {

long count(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
}

soliton::ContourPlot gr49_plot(grassmann::PluckerVector<Rational>& p) {
  auto a = grassmann::component_matrix(GoDiagram::parse("k=4 n=9\nxx.x.\n..o.o\nx.o.\n.o"));
  p = grassmann::pluckers(evaluate(a, grassmann::constant_assignment(a, 1, 0)));
  auto plot = soliton::contour_plot(grassmann::matroid_of(p, 9), soliton::KappaVector::parse("-5,-3,-2,-1,0,1,2,3,4"), -10);
  soliton::singular_edges(p, plot);
  return plot;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("Go-diagrams round trip through JSON") {
    for (const auto& d : diagrams::enumerate_go_diagrams(2, 5)) {
      auto j = io::to_json(d);
      CHECK(io::go_from_json(Json::parse(j.dump())) == d);
    }
    CHECK_THROWS_AS(io::go_from_json(Json::parse(R"({"k":2})")), ParseError);
  }

  TEST_CASE("matrices round trip through JSON") {
    auto a = grassmann::component_matrix(GoDiagram::parse("k=3 n=7\noxx.\nx.oo\n.o.o"));
    CHECK(io::poly_matrix_from_json(Json::parse(io::to_json(a).dump())) == a);
    auto r = io::rational_matrix_from_json(Json::parse(R"([[1, "3/2"], ["-2", 0]])"));
    CHECK(r(0, 1) == Rational(3, 2));
    CHECK(r(1, 0) == -2);
    CHECK_THROWS_AS(io::rational_matrix_from_json(Json::parse(R"([[1, 2], [3]])")), ParseError);
    auto p = grassmann::pluckers(a);
    auto pj = io::to_json(p);
    CHECK(pj["1,2,3"] == "-p2*p4*p7*p9");
    CHECK(pj["4,6,7"] == "1");
  }

  TEST_CASE("contour plots round trip through JSON") {
    grassmann::PluckerVector<Rational> p;
    auto plot = gr49_plot(p);
    auto j = io::to_json(plot);
    auto back = io::plot_from_json(Json::parse(j.dump()));
    CHECK(io::to_json(back) == j);
    CHECK(back.region_labels() == plot.region_labels());
    CHECK(j["edges"].size() == plot.edges.size());
    for (const auto& e : j["edges"]) CHECK(e["regions"].size() == 2);
  }

  TEST_CASE("SVG has one path per edge, dashed exactly on singular edges") {
    grassmann::PluckerVector<Rational> p;
    auto plot = gr49_plot(p);
    long singular = 0;
    for (const auto& e : plot.edges) singular += e.singular.value();
    for (bool rotate : {false, true}) {
      auto svg = io::plot_svg(plot, rotate);
      CHECK(count(svg, "<path ") == static_cast<long>(plot.edges.size()));
      CHECK(count(svg, "class=\"edge singular\"") == singular);
      CHECK(svg.find("stroke-dasharray") != std::string::npos);
    }
    CHECK(singular > 0);
  }

  TEST_CASE("graphs round trip through JSON and keep their canonical code") {
    for (const char* text : {"k=3 n=7\noxx.\nx.oo\n.o.o", "k=4 n=8\n.oo.\n....\no..\n...", "k=2 n=4\n\n"}) {
      auto g = plabic::from_go(GoDiagram::parse(text));
      auto j = io::to_json(g);
      auto back = io::graph_from_json(Json::parse(j.dump()));
      CHECK(plabic::canonical_code(back) == plabic::canonical_code(g));
      CHECK(plabic::trip_permutation(back) == plabic::trip_permutation(g));
      auto dot = io::graph_dot(g);
      CHECK(count(dot, " -- ") == g.edge_count());
      auto svg = io::graph_svg(g);
      CHECK(count(svg, "<path ") == g.edge_count());
    }
  }

  TEST_CASE("canonical code ignores vertex numbering") {
    auto g = plabic::from_triangulation({6, {{1, 3}, {1, 4}, {4, 6}}});
    auto j = io::to_json(g);
    const int vcount = g.vertex_count();
    std::vector<int> perm(vcount);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(5);
    std::shuffle(perm.begin(), perm.end(), rng);
    // rebuild with vertices listed in shuffled order; edge ids stay, endpoints are renamed
    std::vector<int> where(vcount);
    for (int i = 0; i < vcount; ++i) where[perm[i]] = i;
    Json shuffled = j;
    shuffled["vertices"] = Json::array();
    for (int i = 0; i < vcount; ++i) {
      Json v = j["vertices"][perm[i]];
      v["id"] = i;
      shuffled["vertices"].push_back(v);
    }
    for (auto& e : shuffled["edges"]) e = {where[e[0].get<int>()], where[e[1].get<int>()]};
    auto h = io::graph_from_json(shuffled);
    CHECK(plabic::canonical_code(h) == plabic::canonical_code(g));
    CHECK(plabic::canonical_code(h) != plabic::canonical_code(plabic::from_triangulation({6, {{1, 3}, {1, 4}, {1, 5}}})));
  }
}
