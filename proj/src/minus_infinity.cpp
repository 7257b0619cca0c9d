#include "grasstropic/minus_infinity.hpp"

#include <algorithm>
#include <set>

namespace grasstropic::soliton {

Point resonance_point(const KappaVector& kappa, int i, int l, int m) {
  const Rational &a = kappa[i], &b = kappa[l], &c = kappa[m];
  return Point{Rational(a * b + a * c + b * c), Rational(-(a + b + c))};
}

std::vector<TrivalentSite> trivalent_sites(const ContourPlot& plot) {
  std::vector<TrivalentSite> out;
  for (const auto& v : plot.vertices) {
    if (v.kind != VertexKind::Trivalent) continue;
    std::set<int> idx;
    std::set<std::pair<int, int>> types;
    for (int e : v.edges) {
      auto t = plot.edges[e].type;
      idx.insert(t.first);
      idx.insert(t.second);
      types.insert(t);
    }
    if (idx.size() != 3 || types.size() != 3 || idx.count(0))
      throw Error("trivalent vertex without resonant types");
    std::vector<int> s(idx.begin(), idx.end());
    Point p = v.p;
    if (plot.frame == Frame::XY) {
      if (plot.t == 0) throw Error("trivalent_sites: cannot rescale a plot at t = 0");
      p = Point{Rational(p.x / plot.t), Rational(p.y / plot.t)};
    }
    out.push_back({{s[0], s[1], s[2]}, p});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TrivalentSite> trivalent_sites(const plabic::Graph& g, const KappaVector& kappa) {
  auto lab = plabic::label_all(g);
  std::vector<TrivalentSite> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto kind = g.vertex(v).kind;
    if ((kind != plabic::Kind::Black && kind != plabic::Kind::White) || g.degree(v) != 3) continue;
    std::set<int> idx;
    for (int d : g.vertex(v).rotation)
      for (int i : lab.edge_labels[d >> 1]) idx.insert(i);
    if (idx.size() != 3) throw Error("trivalent vertex of G_-(D) without resonant trip labels");
    std::vector<int> s(idx.begin(), idx.end());
    out.push_back({{s[0], s[1], s[2]}, resonance_point(kappa, s[0], s[1], s[2])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ContourPlot contour_minus_infinity(const diagrams::GoDiagram& d, const KappaVector& kappa,
                                   const std::optional<BoundingBox>& bbox) {
  if (kappa.n() != d.n()) throw Error("kappa has " + std::to_string(kappa.n()) + " values, diagram has n=" + std::to_string(d.n()));
  auto m = grassmann::matroid_of(grassmann::component_matrix(d));
  return contour_minus_infinity(m, kappa, bbox);
}

MinusInfinityCheck cross_check_minus_infinity(const diagrams::GoDiagram& d, const KappaVector& kappa,
                                              const ContourPlot& plot) {
  MinusInfinityCheck out;
  auto a = trivalent_sites(plot);
  auto b = trivalent_sites(plabic::from_go(d), kappa);
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.plot_only));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out.graph_only));
  out.agree = out.plot_only.empty() && out.graph_only.empty();
  return out;
}

}  // namespace grasstropic::soliton

namespace grasstropic::grassmann {

std::vector<Subset> positivity_test_set(const diagrams::GoDiagram& d, const soliton::KappaVector& kappa) {
  if (d.has_black_stones()) throw Error("positivity test sets are defined for Le-diagrams only (black stones present)");
  return soliton::contour_minus_infinity(d, kappa).region_labels();
}

}  // namespace grasstropic::grassmann
