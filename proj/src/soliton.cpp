#include "grasstropic/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "envelope.hpp"

namespace grasstropic::soliton {

using diagrams::DecoratedPermutation;
using grassmann::Matroid;
using grassmann::PluckerVector;

KappaCheck validate_kappa(const std::vector<Rational>& kappa) {
  KappaCheck check;
  const int n = static_cast<int>(kappa.size());
  for (int i = 1; i < n; ++i)
    if (!(kappa[i - 1] < kappa[i])) check.increasing = false;
  for (int p = 2; p < n && check.generic; ++p) {
    std::map<Rational, Subset> seen;
    for (const auto& s : k_subsets(n, p)) {
      Rational sum = 0;
      for (int x : s) sum += kappa[x - 1];
      auto [it, inserted] = seen.emplace(sum, s);
      if (!inserted) {
        check.generic = false;
        check.witness = KappaCollision{p, it->second, s};
        break;
      }
    }
  }
  return check;
}

KappaVector::KappaVector(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error("kappa: empty parameter list");
  if (!validate_kappa(values_).increasing) throw Error("kappa: values must be strictly increasing");
}

KappaVector KappaVector::parse(std::string_view text) {
  std::vector<Rational> vals;
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) vals.push_back(parse_rational(tok));
    tok.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') flush();
    else tok += c;
  }
  flush();
  return KappaVector(std::move(vals));
}

std::string KappaVector::to_string() const {
  std::string s;
  for (int i = 0; i < n(); ++i) s += (i ? "," : "") + values_[i].get_str();
  return s;
}

RegionForm region_form(const Subset& J, const KappaVector& kappa) {
  RegionForm f;
  f.J = J;
  f.a = f.b = f.c = 0;
  for (int i : J) {
    const Rational& k = kappa[i];
    f.a += k;
    f.b += k * k;
    f.c += k * k * k;
  }
  return f;
}

Subset dominant_subset(const Matroid& m, const KappaVector& kappa, const Rational& x, const Rational& y, const Rational& t) {
  if (m.n() != kappa.n()) throw Error("dominant_subset: kappa has the wrong length");
  const Subset* best = nullptr;
  Rational best_value;
  bool tie = false;
  for (const auto& J : m.bases()) {
    Rational v = region_form(J, kappa).value(x, y, t);
    if (!best || v > best_value) {
      best = &J;
      best_value = v;
      tie = false;
    } else if (v == best_value) {
      tie = true;
    }
  }
  if (tie) throw Error("dominant_subset: the point lies on the contour (tie between dominant exponentials)");
  return *best;
}

BoundingBox default_bbox(const KappaVector& kappa, const Rational& t) {
  Rational max_k = 0;
  for (const auto& k : kappa.values()) max_k = std::max(max_k, Rational(abs(k)));
  Rational at = abs(t);
  Rational r = 4 * std::max(Rational(1), at) * (1 + max_k) * (1 + max_k);
  struct Line {
    Rational s, q;
  };
  std::vector<Line> lines;
  for (int i = 1; i <= kappa.n(); ++i)
    for (int j = i + 1; j <= kappa.n(); ++j)
      lines.push_back({kappa[i] + kappa[j], kappa[i] * kappa[i] + kappa[i] * kappa[j] + kappa[j] * kappa[j]});
  Rational extent = 0;
  for (size_t a = 0; a < lines.size(); ++a)
    for (size_t b = a + 1; b < lines.size(); ++b) {
      if (lines[a].s == lines[b].s) continue;
      Rational y = -(lines[a].q - lines[b].q) * t / (lines[a].s - lines[b].s);
      Rational x = -lines[a].s * y - lines[a].q * t;
      extent = std::max({extent, Rational(abs(x)), Rational(abs(y))});
    }
  r = std::max(r, Rational(2 * extent + 1));
  return {-r, r, -r, r};
}

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Trivalent: return "trivalent";
    case VertexKind::XCrossing: return "Xcrossing";
    case VertexKind::Higher: return "higher";
    default: return "boundary";
  }
}

int ContourPlot::region_of(const Subset& J) const {
  for (int r = 0; r < static_cast<int>(regions.size()); ++r)
    if (regions[r].J == J) return r;
  return -1;
}

std::vector<Subset> ContourPlot::region_labels() const {
  std::vector<Subset> out;
  for (const auto& r : regions) out.push_back(r.J);
  return out;
}

ContourPlot contour_plot(const Matroid& m, const KappaVector& kappa, const Rational& t, const std::optional<BoundingBox>& bbox) {
  if (m.n() != kappa.n()) throw Error("contour_plot: kappa has " + std::to_string(kappa.n()) + " entries, matroid has n = " + std::to_string(m.n()));
  std::vector<detail::LinearForm> forms;
  for (const auto& J : m.bases()) {
    auto f = region_form(J, kappa);
    forms.push_back({J, f.a, f.b, f.c * t});
  }
  ContourPlot plot = detail::upper_envelope(forms, bbox ? *bbox : default_bbox(kappa, t));
  plot.k = m.k();
  plot.n = m.n();
  plot.t = t;
  plot.frame = Frame::XY;
  return plot;
}

ContourPlot contour_minus_infinity(const Matroid& m, const KappaVector& kappa, const std::optional<BoundingBox>& bbox) {
  if (m.n() != kappa.n()) throw Error("contour_minus_infinity: kappa length differs from n");
  // max of -sum phi_i, phi_i = kappa_i xbar + kappa_i^2 ybar + kappa_i^3
  std::vector<detail::LinearForm> forms;
  for (const auto& J : m.bases()) {
    auto f = region_form(J, kappa);
    forms.push_back({J, -f.a, -f.b, -f.c});
  }
  ContourPlot plot = detail::upper_envelope(forms, bbox ? *bbox : default_bbox(kappa, Rational(1)));
  plot.k = m.k();
  plot.n = m.n();
  plot.t = 1;
  plot.frame = Frame::XBarYBar;
  return plot;
}

ContourPlot half_turn(const ContourPlot& plot) {
  ContourPlot out = plot;
  out.frame = plot.frame == Frame::XBarYBar ? Frame::XY : Frame::XBarYBar;
  out.t = -plot.t;
  out.bbox = {-plot.bbox.xmax, -plot.bbox.xmin, -plot.bbox.ymax, -plot.bbox.ymin};
  for (auto& v : out.vertices) v.p = {-v.p.x, -v.p.y};
  for (auto& r : out.regions)
    for (auto& p : r.polygon) p = {-p.x, -p.y};
  return out;
}

std::string format_types(const std::vector<std::pair<int, int>>& types) {
  std::string s;
  for (size_t i = 0; i < types.size(); ++i)
    s += (i ? " [" : "[") + std::to_string(types[i].first) + "," + std::to_string(types[i].second) + "]";
  return s;
}

Asymptotics unbounded_asymptotics(const ContourPlot& input) {
  const ContourPlot& plot = input.frame == Frame::XY ? input : half_turn(input);
  struct Ray {
    std::pair<int, int> type;
    Point exit;
    Point inner;
  };
  std::vector<Ray> top, bottom;
  for (const auto& e : plot.edges) {
    if (!e.unbounded) continue;
    for (int end : {e.from, e.to}) {
      if (plot.vertices[end].kind != VertexKind::Boundary) continue;
      int other = end == e.from ? e.to : e.from;
      Ray r{e.type, plot.vertices[end].p, plot.vertices[other].p};
      (r.exit.y > r.inner.y ? top : bottom).push_back(r);
    }
  }
  // x along a ray far away: x = -s y + x0 with s = slope of the type
  auto slope_key = [&](const Ray& r) -> Rational {
    // dx/dy of the ray, exact from the geometry
    return -(r.exit.x - r.inner.x) / (r.exit.y - r.inner.y);
  };
  auto intercept = [&](const Ray& r) -> Rational { return r.exit.x + slope_key(r) * r.exit.y; };
  std::sort(top.begin(), top.end(), [&](const Ray& a, const Ray& b) {
    Rational sa = slope_key(a), sb = slope_key(b);
    if (sa != sb) return sa < sb;
    return intercept(a) > intercept(b);
  });
  std::sort(bottom.begin(), bottom.end(), [&](const Ray& a, const Ray& b) {
    Rational sa = slope_key(a), sb = slope_key(b);
    if (sa != sb) return sa < sb;
    return intercept(a) < intercept(b);
  });
  Asymptotics out;
  for (const auto& r : top) out.top.push_back(r.type);
  for (const auto& r : bottom) out.bottom.push_back(r.type);
  return out;
}

DecoratedPermutation perm_from_plot(const ContourPlot& plot) {
  const int n = plot.n;
  auto asym = unbounded_asymptotics(plot);
  std::vector<int> im(n, 0);
  auto assign = [&](int from, int to) {
    if (from < 1 || from > n || im[from - 1] != 0) throw Error("perm_from_plot: inconsistent unbounded solitons at " + std::to_string(from));
    im[from - 1] = to;
  };
  for (auto [i, h] : asym.top) assign(i, h);
  for (auto [i, h] : asym.bottom) assign(h, i);
  std::vector<int> colors(n, 0);
  for (int h = 1; h <= n; ++h) {
    if (im[h - 1] != 0) continue;
    im[h - 1] = h;
    int in = 0;
    for (const auto& r : plot.regions) in += std::binary_search(r.J.begin(), r.J.end(), h);
    if (in == static_cast<int>(plot.regions.size())) colors[h - 1] = 1;
    else if (in == 0) colors[h - 1] = -1;
    else throw Error("perm_from_plot: index " + std::to_string(h) + " lies in some but not all region labels");
  }
  return {weyl::Permutation(im), colors};
}

std::vector<CrossingInfo> classify_crossings(const ContourPlot& plot) {
  std::vector<CrossingInfo> out;
  for (int v = 0; v < static_cast<int>(plot.vertices.size()); ++v) {
    const auto& cv = plot.vertices[v];
    if (cv.kind != VertexKind::XCrossing) continue;
    std::set<std::pair<int, int>> types;
    for (int e : cv.edges) types.insert(plot.edges[e].type);
    if (types.size() != 2) throw Error("X-crossing without two distinct soliton types");
    CrossingInfo c;
    c.vertex = v;
    c.first = *types.begin();
    c.second = *types.rbegin();
    auto [a, b] = c.first;
    auto [x, y] = c.second;
    c.black = (a < x && x < b && b < y) || (x < a && a < y && y < b);
    out.push_back(c);
  }
  return out;
}

namespace {

// Orders direction vectors counterclockwise starting from the positive x axis.
bool angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& p) { return p.y < 0 || (p.y == 0 && p.x < 0); };
  bool ha = half(a), hb = half(b);
  if (ha != hb) return !ha;
  return a.x * b.y - a.y * b.x > 0;
}

}  // namespace

std::vector<int> regions_around(const ContourPlot& plot, int vertex) {
  const auto& cv = plot.vertices[vertex];
  struct Out {
    Point dir;
    int region;
  };
  std::vector<Out> outs;
  for (int e : cv.edges) {
    const auto& ce = plot.edges[e];
    int other = ce.from == vertex ? ce.to : ce.from;
    Point d{plot.vertices[other].p.x - cv.p.x, plot.vertices[other].p.y - cv.p.y};
    outs.push_back({d, ce.from == vertex ? ce.left : ce.right});
  }
  std::sort(outs.begin(), outs.end(), [](const Out& a, const Out& b) { return angle_less(a.dir, b.dir); });
  std::vector<int> regions;
  for (const auto& o : outs) regions.push_back(o.region);
  return regions;
}

std::vector<TwoTermResult> check_two_term(const PluckerVector<Rational>& p, const ContourPlot& plot) {
  std::vector<TwoTermResult> out;
  for (const auto& c : classify_crossings(plot)) {
    TwoTermResult r;
    r.vertex = c.vertex;
    r.black = c.black;
    std::vector<Rational> d;
    for (int reg : regions_around(plot, c.vertex)) {
      r.regions.push_back(plot.regions[reg].J);
      auto it = p.find(plot.regions[reg].J);
      if (it == p.end()) throw Error("check_two_term: Plucker vector lacks " + subset_to_string(plot.regions[reg].J));
      d.push_back(it->second);
    }
    r.lhs = d[0] * d[2];
    r.rhs = c.black ? Rational(-d[1] * d[3]) : Rational(d[1] * d[3]);
    r.holds = r.lhs == r.rhs;
    out.push_back(r);
  }
  return out;
}

std::vector<int> singular_edges(const PluckerVector<Rational>& p, ContourPlot& plot) {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(plot.edges.size()); ++e) {
    auto& ce = plot.edges[e];
    auto get = [&](int reg) -> const Rational& {
      auto it = p.find(plot.regions[reg].J);
      if (it == p.end()) throw Error("singular_edges: Plucker vector lacks " + subset_to_string(plot.regions[reg].J));
      if (it->second == 0) throw Error("singular_edges: dominant exponential " + subset_to_string(plot.regions[reg].J) + " has a zero coefficient");
      return it->second;
    };
    ce.singular = sgn(get(ce.left)) != sgn(get(ce.right));
    if (*ce.singular) out.push_back(e);
  }
  return out;
}

namespace {

Float to_float(const Rational& q) {
  return Float(q.get_num().get_str()) / Float(q.get_den().get_str());
}

struct Summand {
  Float coeff;  // Delta_J K_J
  Float a, b, c;
};

std::vector<Summand> summands(const PluckerVector<Rational>& p, const KappaVector& kappa) {
  std::vector<Summand> out;
  for (const auto& [J, delta] : p) {
    if (delta == 0) continue;
    Rational kj = 1;
    for (size_t l = 0; l < J.size(); ++l)
      for (size_t m = l + 1; m < J.size(); ++m) kj *= kappa[J[m]] - kappa[J[l]];
    auto f = region_form(J, kappa);
    out.push_back({to_float(delta * kj), to_float(f.a), to_float(f.b), to_float(f.c)});
  }
  if (out.empty()) throw Error("tau: all Plucker coordinates vanish");
  return out;
}

}  // namespace

TauValue tau_and_u(const PluckerVector<Rational>& p, const KappaVector& kappa, const Float& x, const Float& y, const Float& t) {
  for (const auto& [J, v] : p)
    if (!J.empty() && J.back() > kappa.n()) throw Error("tau: kappa is shorter than n");
  auto terms = summands(p, kappa);
  std::vector<Float> theta;
  Float top = -std::numeric_limits<Float>::infinity();
  for (const auto& s : terms) {
    theta.push_back(s.a * x + s.b * y + s.c * t);
    top = std::max(top, theta.back());
  }
  Float s0 = 0, s1 = 0, s2 = 0;
  for (size_t i = 0; i < terms.size(); ++i) {
    Float e = terms[i].coeff * boost::multiprecision::exp(theta[i] - top);
    s0 += e;
    s1 += terms[i].a * e;
    s2 += terms[i].a * terms[i].a * e;
  }
  if (s0 == 0) throw Error("tau vanishes at the point; u is singular there");
  Float scale = boost::multiprecision::exp(top);
  TauValue out;
  out.tau = s0 * scale;
  out.tau_x = s1 * scale;
  out.tau_xx = s2 * scale;
  out.u = 2 * (s0 * s2 - s1 * s1) / (s0 * s0);
  return out;
}

std::string to_string(Regularity r) {
  switch (r) {
    case Regularity::RegularProven: return "regular";
    case Regularity::SingularWitnessed: return "singular";
    default: return "inconclusive";
  }
}

namespace {

// Sign of tau: double evaluation with max-scaling, redone in 50 digits when
// cancellation makes the double result unreliable.
int tau_sign(const std::vector<Summand>& terms, const std::vector<std::array<double, 4>>& fast, double x, double y, double t) {
  double top = -INFINITY;
  std::vector<double> theta(fast.size());
  for (size_t i = 0; i < fast.size(); ++i) {
    theta[i] = fast[i][1] * x + fast[i][2] * y + fast[i][3] * t;
    top = std::max(top, theta[i]);
  }
  double sum = 0, mag = 0;
  for (size_t i = 0; i < fast.size(); ++i) {
    double e = fast[i][0] * std::exp(theta[i] - top);
    sum += e;
    mag += std::fabs(e);
  }
  if (std::fabs(sum) > 1e-9 * mag) return sum > 0 ? 1 : -1;
  Float fx(x), fy(y), ft(t), ftop = -std::numeric_limits<Float>::infinity();
  std::vector<Float> th;
  for (const auto& s : terms) {
    th.push_back(s.a * fx + s.b * fy + s.c * ft);
    ftop = std::max(ftop, th.back());
  }
  Float acc = 0;
  for (size_t i = 0; i < terms.size(); ++i) acc += terms[i].coeff * boost::multiprecision::exp(th[i] - ftop);
  return acc > 0 ? 1 : acc < 0 ? -1 : 0;
}

}  // namespace

RegularityReport regularity_scan(const PluckerVector<Rational>& p, const KappaVector& kappa, const std::vector<Rational>& times, int grid) {
  RegularityReport rep;
  rep.positivity = grassmann::tnn_status(p);
  bool tnn = rep.positivity != grassmann::Positivity::Neither;
  auto terms = summands(p, kappa);
  std::vector<std::array<double, 4>> fast;
  for (const auto& s : terms)
    fast.push_back({static_cast<double>(s.coeff), static_cast<double>(s.a), static_cast<double>(s.b), static_cast<double>(s.c)});
  bool witnessed = false;
  for (const auto& t : times) {
    RegularityTime rt;
    rt.t = t;
    BoundingBox box = default_bbox(kappa, t);
    double x0 = to_double(box.xmin), x1 = to_double(box.xmax), y0 = to_double(box.ymin), y1 = to_double(box.ymax);
    double td = to_double(t);
    std::optional<Point> pos, neg;
    for (int i = 0; i < grid; ++i)
      for (int j = 0; j < grid; ++j) {
        double x = x0 + (i + 0.5) * (x1 - x0) / grid;
        double y = y0 + (j + 0.5) * (y1 - y0) / grid;
        int s = tau_sign(terms, fast, x, y, td);
        if (s > 0) {
          ++rt.positive;
          if (!pos) pos = Point{Rational(x), Rational(y)};
        } else if (s < 0) {
          ++rt.negative;
          if (!neg) neg = Point{Rational(x), Rational(y)};
        } else {
          ++rt.zero;
        }
      }
    if (pos && neg) {
      rt.witness = std::make_pair(*pos, *neg);
      witnessed = true;
    }
    rep.times.push_back(rt);
  }
  if (tnn) {
    if (witnessed) throw Error("regularity_scan: sign change found for a totally nonnegative point");
    rep.verdict = Regularity::RegularProven;
  } else {
    rep.verdict = witnessed ? Regularity::SingularWitnessed : Regularity::Inconclusive;
  }
  return rep;
}

}  // namespace grasstropic::soliton
