#include "envelope.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <functional>
#include <mutex>
#include <thread>

namespace grasstropic::soliton::detail {

namespace {

using Polygon = std::vector<Point>;

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational twice_area(const Polygon& poly) {
  Rational s = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    s += p.x * q.y - p.y * q.x;
  }
  return s;
}

// Keeps the part of a convex polygon where A x + B y + C >= 0.
Polygon clip(const Polygon& poly, const Rational& A, const Rational& B, const Rational& C) {
  Polygon out;
  const size_t m = poly.size();
  std::vector<Rational> f(m);
  for (size_t i = 0; i < m; ++i) f[i] = A * poly[i].x + B * poly[i].y + C;
  for (size_t i = 0; i < m; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % m];
    const Rational& fp = f[i];
    const Rational& fq = f[(i + 1) % m];
    if (fp >= 0) out.push_back(p);
    if ((fp > 0 && fq < 0) || (fp < 0 && fq > 0)) {
      Rational s = fp / (fp - fq);
      out.push_back({p.x + (q.x - p.x) * s, p.y + (q.y - p.y) * s});
    }
  }
  return out;
}

Polygon simplify(const Polygon& poly) {
  Polygon a;
  for (const auto& p : poly)
    if (a.empty() || !(a.back() == p)) a.push_back(p);
  while (a.size() > 1 && a.front() == a.back()) a.pop_back();
  bool changed = true;
  while (changed && a.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < a.size(); ++i) {
      const Point& prev = a[(i + a.size() - 1) % a.size()];
      const Point& next = a[(i + 1) % a.size()];
      if (cross(prev, a[i], next) == 0) {
        a.erase(a.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return a;
}

bool strictly_inside_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(a, b, p) != 0) return false;
  if (p == a || p == b) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

std::pair<int, int> type_of(const Subset& a, const Subset& b, bool& ok) {
  Subset only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  ok = only_a.size() == 1 && only_b.size() == 1;
  if (!ok) return {0, 0};
  return {std::min(only_a[0], only_b[0]), std::max(only_a[0], only_b[0])};
}

}  // namespace

void parallel_for(int count, const std::function<void(int)>& fn) {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GRASSTROPIC_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) threads = cap;
  }
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

ContourPlot upper_envelope(const std::vector<LinearForm>& forms, const BoundingBox& bbox) {
  if (forms.empty()) throw Error("contour: no candidate index sets");
  if (!(bbox.xmin < bbox.xmax && bbox.ymin < bbox.ymax)) throw Error("contour: empty bounding box");
  const int count = static_cast<int>(forms.size());
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      if (forms[i].a == forms[j].a && forms[i].b == forms[j].b && forms[i].c == forms[j].c)
        throw Error("contour: index sets " + subset_to_string(forms[i].J) + " and " + subset_to_string(forms[j].J) +
                    " have identical phases; kappa is not generic");

  const Polygon box{{bbox.xmin, bbox.ymin}, {bbox.xmax, bbox.ymin}, {bbox.xmax, bbox.ymax}, {bbox.xmin, bbox.ymax}};
  std::vector<Polygon> cells(count);
  parallel_for(count, [&](int i) {
    Polygon poly = box;
    for (int j = 0; j < count && poly.size() >= 3; ++j) {
      if (j == i) continue;
      poly = clip(poly, forms[i].a - forms[j].a, forms[i].b - forms[j].b, forms[i].c - forms[j].c);
      poly = simplify(poly);
    }
    if (poly.size() >= 3 && twice_area(poly) > 0) cells[i] = poly;
  });

  ContourPlot plot;
  plot.bbox = bbox;
  std::vector<int> region_of_form(count, -1);
  std::vector<int> order(count);
  for (int i = 0; i < count; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return forms[a].J < forms[b].J; });
  for (int i : order) {
    if (cells[i].empty()) continue;
    region_of_form[i] = static_cast<int>(plot.regions.size());
    ContourRegion r;
    r.J = forms[i].J;
    r.polygon = cells[i];
    r.bounded = std::none_of(r.polygon.begin(), r.polygon.end(), [&](const Point& p) { return bbox.on_boundary(p); });
    plot.regions.push_back(std::move(r));
  }
  if (plot.regions.empty()) throw Error("contour: no dominant region inside the box");

  std::map<Point, int> vertex_id;
  for (const auto& r : plot.regions)
    for (const auto& p : r.polygon) vertex_id.emplace(p, 0);
  std::vector<Point> points;
  for (auto& [p, id] : vertex_id) {
    id = static_cast<int>(points.size());
    points.push_back(p);
  }

  // Directed boundary pieces of each region, split at every vertex lying on them.
  std::map<std::pair<int, int>, int> owner;
  for (int r = 0; r < static_cast<int>(plot.regions.size()); ++r) {
    const auto& poly = plot.regions[r].polygon;
    for (size_t i = 0; i < poly.size(); ++i) {
      const Point& a = poly[i];
      const Point& b = poly[(i + 1) % poly.size()];
      std::vector<std::pair<Rational, int>> along;
      along.emplace_back(Rational(0), vertex_id[a]);
      along.emplace_back(Rational(1), vertex_id[b]);
      Rational dx = b.x - a.x, dy = b.y - a.y;
      for (int v = 0; v < static_cast<int>(points.size()); ++v)
        if (strictly_inside_segment(points[v], a, b)) {
          Rational s = dx != 0 ? (points[v].x - a.x) / dx : (points[v].y - a.y) / dy;
          along.emplace_back(s, v);
        }
      std::sort(along.begin(), along.end());
      for (size_t j = 0; j + 1 < along.size(); ++j) owner[{along[j].second, along[j + 1].second}] = r;
    }
  }

  std::vector<int> degree(points.size(), 0);
  struct RawEdge {
    int u, v, left, right;
  };
  std::vector<RawEdge> raw;
  for (const auto& [uv, left] : owner) {
    auto [u, v] = uv;
    if (u > v) continue;
    auto twin = owner.find({v, u});
    if (twin == owner.end()) continue;  // piece of the box boundary
    raw.push_back({u, v, left, twin->second});
    ++degree[u];
    ++degree[v];
  }

  std::vector<int> new_id(points.size(), -1);
  for (int v = 0; v < static_cast<int>(points.size()); ++v) {
    if (degree[v] == 0) continue;
    new_id[v] = static_cast<int>(plot.vertices.size());
    ContourVertex cv;
    cv.p = points[v];
    plot.vertices.push_back(cv);
  }
  for (const auto& e : raw) {
    ContourEdge ce;
    ce.from = new_id[e.u];
    ce.to = new_id[e.v];
    ce.left = e.left;
    ce.right = e.right;
    bool ok = true;
    ce.type = type_of(plot.regions[e.left].J, plot.regions[e.right].J, ok);
    if (!ok)
      plot.issues.push_back("edge between " + subset_to_string(plot.regions[e.left].J) + " and " +
                            subset_to_string(plot.regions[e.right].J) + " separates index sets differing in more than one element");
    int id = static_cast<int>(plot.edges.size());
    plot.vertices[ce.from].edges.push_back(id);
    plot.vertices[ce.to].edges.push_back(id);
    plot.edges.push_back(ce);
  }

  for (int v = 0; v < static_cast<int>(plot.vertices.size()); ++v) {
    auto& cv = plot.vertices[v];
    const int deg = static_cast<int>(cv.edges.size());
    if (bbox.on_boundary(cv.p)) {
      cv.kind = VertexKind::Boundary;
      for (int e : cv.edges) plot.edges[e].unbounded = true;
      if (deg != 1) plot.issues.push_back("a vertex of degree " + std::to_string(deg) + " lies on the bounding box; enlarge the box");
      continue;
    }
    if (deg == 3) {
      cv.kind = VertexKind::Trivalent;
      continue;
    }
    cv.kind = VertexKind::Higher;
    if (deg == 4) {
      // two collinear pairs carrying equal types
      int paired = 0;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
          const auto& ea = plot.edges[cv.edges[a]];
          const auto& eb = plot.edges[cv.edges[b]];
          const Point& pa = plot.vertices[ea.from == v ? ea.to : ea.from].p;
          const Point& pb = plot.vertices[eb.from == v ? eb.to : eb.from].p;
          bool opposite = cross(cv.p, pa, pb) == 0 && (pa.x - cv.p.x) * (pb.x - cv.p.x) + (pa.y - cv.p.y) * (pb.y - cv.p.y) < 0;
          if (opposite && ea.type == eb.type && ea.type.first != 0) ++paired;
        }
      if (paired == 2) cv.kind = VertexKind::XCrossing;
    }
    if (cv.kind == VertexKind::Higher)
      plot.issues.push_back("non-generic vertex of degree " + std::to_string(deg) + " at (" + cv.p.x.get_str() + ", " +
                            cv.p.y.get_str() + ")");
  }
  return plot;
}

}  // namespace grasstropic::soliton::detail
