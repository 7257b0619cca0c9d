#pragma once

#include <array>
#include <vector>

#include "grasstropic/plabic.hpp"
#include "grasstropic/soliton.hpp"

namespace grasstropic::soliton {

// Point where the phases of i < l < m coincide, in the (x/t, y/t) plane.
Point resonance_point(const KappaVector& kappa, int i, int l, int m);

struct TrivalentSite {
  std::array<int, 3> ilm{};
  Point p;  // (x/t, y/t)
  auto operator<=>(const TrivalentSite&) const = default;
};

// Trivalent vertices of a plot with the union of their incident types, rescaled to t = 1.
// Throws if a trivalent vertex does not carry types [i,l], [l,m], [i,m].
std::vector<TrivalentSite> trivalent_sites(const ContourPlot& plot);
// Trivalent vertices of a plabic graph labeled by trips, placed at the resonance points.
std::vector<TrivalentSite> trivalent_sites(const plabic::Graph& g, const KappaVector& kappa);

// Route (a): tropical minimum over the component's matroid.
ContourPlot contour_minus_infinity(const diagrams::GoDiagram& d, const KappaVector& kappa,
                                   const std::optional<BoundingBox>& bbox = std::nullopt);

struct MinusInfinityCheck {
  bool agree = false;
  std::vector<TrivalentSite> plot_only, graph_only;
};
// Route (b): trivalent vertices of G_-(D) at resonance points, compared with the plot.
MinusInfinityCheck cross_check_minus_infinity(const diagrams::GoDiagram& d, const KappaVector& kappa,
                                              const ContourPlot& plot);

}  // namespace grasstropic::soliton

namespace grasstropic::grassmann {

// Index sets of the dominant exponentials of the t -> -infinity plot of a Le-diagram.
std::vector<Subset> positivity_test_set(const diagrams::GoDiagram& d, const soliton::KappaVector& kappa);

}  // namespace grasstropic::grassmann
