#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "grasstropic/diagrams.hpp"
#include "grasstropic/grassmann.hpp"
#include "grasstropic/rational.hpp"

namespace grasstropic::soliton {

using Float = boost::multiprecision::cpp_bin_float_50;

struct KappaCollision {
  int p = 0;
  Subset a, b;  // two distinct p-subsets with the same kappa-sum
};

struct KappaCheck {
  bool increasing = true;
  bool generic = true;
  std::optional<KappaCollision> witness;
};

// Strict increase, and distinct sums over equal-size subsets for 1 < p < n.
KappaCheck validate_kappa(const std::vector<Rational>& kappa);

class KappaVector {
 public:
  explicit KappaVector(std::vector<Rational> values);  // requires strict increase
  static KappaVector parse(std::string_view text);     // "-5,-3,-2" or "0 1 3/2"

  int n() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int i) const { return values_[i - 1]; }  // 1-based
  const std::vector<Rational>& values() const { return values_; }
  std::string to_string() const;

 private:
  std::vector<Rational> values_;
};

// a x + b y + c t, the sum of the phases theta_i over J.
struct RegionForm {
  Subset J;
  Rational a, b, c;

  Rational value(const Rational& x, const Rational& y, const Rational& t) const { return a * x + b * y + c * t; }
};
RegionForm region_form(const Subset& J, const KappaVector& kappa);

// Unique maximizer of the region forms over the bases. Throws if the point is on the contour.
Subset dominant_subset(const grassmann::Matroid& m, const KappaVector& kappa, const Rational& x, const Rational& y,
                       const Rational& t);

struct Point {
  Rational x, y;
  auto operator<=>(const Point& o) const {
    if (auto c = cmp(x, o.x); c != 0) return c <=> 0;
    return cmp(y, o.y) <=> 0;
  }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

struct BoundingBox {
  Rational xmin, xmax, ymin, ymax;
  bool contains(const Point& p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
  bool on_boundary(const Point& p) const {
    return contains(p) && (p.x == xmin || p.x == xmax || p.y == ymin || p.y == ymax);
  }
};

// Box with |x|, |y| <= 4 max(1,|t|) (1 + max|kappa|)^2, enlarged when needed so
// it contains every intersection point of two soliton lines with a margin.
BoundingBox default_bbox(const KappaVector& kappa, const Rational& t);

enum class VertexKind { Trivalent, XCrossing, Higher, Boundary };
std::string to_string(VertexKind k);

struct ContourVertex {
  Point p;
  VertexKind kind = VertexKind::Trivalent;
  std::vector<int> edges;  // incident edge ids
};

struct ContourEdge {
  std::pair<int, int> type{0, 0};  // [i, j] with i < j; {0,0} when the labels differ in more than one index
  int from = -1, to = -1;
  int left = -1, right = -1;  // regions on the left/right when walking from -> to
  bool unbounded = false;     // one endpoint lies on the bounding box
  std::optional<bool> singular;
};

struct ContourRegion {
  Subset J;
  std::vector<Point> polygon;  // counterclockwise, clipped to the box
  bool bounded = true;
};

enum class Frame { XY, XBarYBar };

struct ContourPlot {
  int k = 0, n = 0;
  Rational t;  // for Frame::XBarYBar this is the stand-in t = 1 of the phase forms
  Frame frame = Frame::XY;
  BoundingBox bbox;
  std::vector<ContourVertex> vertices;
  std::vector<ContourEdge> edges;
  std::vector<ContourRegion> regions;
  std::vector<std::string> issues;  // non-generic findings

  bool generic() const { return issues.empty(); }
  int region_of(const Subset& J) const;  // -1 if absent
  std::vector<Subset> region_labels() const;
};

ContourPlot contour_plot(const grassmann::Matroid& m, const KappaVector& kappa, const Rational& t,
                         const std::optional<BoundingBox>& bbox = std::nullopt);

// The plot of min over bases of sum phi_i in coordinates (x/t, y/t), t -> -infinity.
ContourPlot contour_minus_infinity(const grassmann::Matroid& m, const KappaVector& kappa,
                                   const std::optional<BoundingBox>& bbox = std::nullopt);

// Same plot expressed in (x, y) at t = -1 (a half-turn of the XBarYBar frame).
ContourPlot half_turn(const ContourPlot& plot);

struct Asymptotics {
  std::vector<std::pair<int, int>> top;     // right to left
  std::vector<std::pair<int, int>> bottom;  // left to right
};
Asymptotics unbounded_asymptotics(const ContourPlot& plot);
std::string format_types(const std::vector<std::pair<int, int>>& types);  // "[1,6] [2,7]"

diagrams::DecoratedPermutation perm_from_plot(const ContourPlot& plot);

struct CrossingInfo {
  int vertex = -1;
  std::pair<int, int> first, second;
  bool black = false;
};
std::vector<CrossingInfo> classify_crossings(const ContourPlot& plot);

// The four regions around a vertex in counterclockwise order.
std::vector<int> regions_around(const ContourPlot& plot, int vertex);

struct TwoTermResult {
  int vertex = -1;
  bool black = false;
  std::vector<Subset> regions;  // counterclockwise
  Rational lhs, rhs;            // Delta_1 Delta_3 and (+/-) Delta_2 Delta_4
  bool holds = false;
};
std::vector<TwoTermResult> check_two_term(const grassmann::PluckerVector<Rational>& p, const ContourPlot& plot);

// Marks every edge; returns the ids of singular ones.
std::vector<int> singular_edges(const grassmann::PluckerVector<Rational>& p, ContourPlot& plot);

struct TauValue {
  Float tau, tau_x, tau_xx, u;
};
TauValue tau_and_u(const grassmann::PluckerVector<Rational>& p, const KappaVector& kappa, const Float& x, const Float& y,
                   const Float& t);

enum class Regularity { RegularProven, SingularWitnessed, Inconclusive };
std::string to_string(Regularity r);

struct RegularityTime {
  Rational t;
  int positive = 0, negative = 0, zero = 0;
  std::optional<std::pair<Point, Point>> witness;  // points with tau > 0 and tau < 0
};

struct RegularityReport {
  grassmann::Positivity positivity;
  Regularity verdict;
  std::vector<RegularityTime> times;
};

RegularityReport regularity_scan(const grassmann::PluckerVector<Rational>& p, const KappaVector& kappa,
                                 const std::vector<Rational>& times, int grid = 200);

}  // namespace grasstropic::soliton
