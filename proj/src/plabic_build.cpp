#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>

#include "grasstropic/plabic.hpp"

namespace grasstropic::plabic {

using diagrams::Box;
using diagrams::Fill;

namespace {

#ifndef GRASSTROPIC_ELBOW_NE
#define GRASSTROPIC_ELBOW_NE White
#define GRASSTROPIC_ELBOW_SW Black
#endif

// Sorts the rotation of every vertex counterclockwise by the given dart directions.
void sort_rotations(Graph& g, const std::vector<std::pair<double, double>>& dir) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto rot = g.vertex(v).rotation;
    std::sort(rot.begin(), rot.end(), [&](int a, int b) {
      return std::atan2(dir[a].second, dir[a].first) < std::atan2(dir[b].second, dir[b].first);
    });
    g.set_rotation(v, rot);
  }
}

// Removes internal degree-2 vertices whose two neighbors differ.
Graph smooth(Graph g) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Vertex& vx = g.vertex(v);
      if (vx.kind == Kind::Boundary || g.degree(v) != 2) continue;
      if (g.head(vx.rotation[0]) == g.head(vx.rotation[1])) continue;
      g.vertex(v).kind = Kind::Black;
      g = apply_move(g, VertexRemoval{v});
      changed = true;
      break;
    }
  }
  return g;
}

// Replaces edge ends: the dart old_y at y and old_z at z give way to one new edge y-z.
void reconnect(Graph& g, int y, int old_y, int z, int old_z) {
  int e = g.add_edge(y, z);
  auto& ry = g.vertex(y).rotation;
  ry.pop_back();
  std::replace(ry.begin(), ry.end(), old_y, 2 * e);
  auto& rz = g.vertex(z).rotation;
  rz.pop_back();
  std::replace(rz.begin(), rz.end(), old_z, 2 * e + 1);
}

// Two crossing nodes joined by a bigon cancel; the strands are reconnected directly.
Graph cancel_bigons(Graph g) {
  for (bool changed = true; changed;) {
    changed = false;
    for (int c = 0; c < g.vertex_count() && !changed; ++c) {
      if (g.vertex(c).kind != Kind::Crossing) continue;
      const auto rc = g.vertex(c).rotation;
      for (int a = 0; a < 4 && !changed; ++a) {
        int d1 = rc[a], d2 = rc[(a + 1) % 4];
        int x = g.head(d1);
        if (x != g.head(d2) || x == c || g.vertex(x).kind != Kind::Crossing) continue;
        const auto rx = g.vertex(x).rotation;
        int p1 = static_cast<int>(std::find(rx.begin(), rx.end(), d1 ^ 1) - rx.begin());
        int p2 = static_cast<int>(std::find(rx.begin(), rx.end(), d2 ^ 1) - rx.begin());
        if ((p1 + 3) % 4 != p2) continue;
        int c1 = rc[(a + 2) % 4], c2 = rc[(a + 3) % 4];  // outer arms opposite d1 and d2
        int x1 = rx[(p1 + 2) % 4], x2 = rx[(p2 + 2) % 4];
        int y1 = g.head(c1), z1 = g.head(x1), y2 = g.head(c2), z2 = g.head(x2);
        if (y1 == c || y1 == x || z1 == c || z1 == x || y2 == c || y2 == x || z2 == c || z2 == x) continue;
        if (y1 == z1 || y2 == z2) continue;
        reconnect(g, y1, c1 ^ 1, z1, x1 ^ 1);
        reconnect(g, y2, c2 ^ 1, z2, x2 ^ 1);
        for (int d : rc) g.kill_edge(d >> 1);
        for (int d : rx) g.kill_edge(d >> 1);
        g.vertex(c).rotation.clear();
        g.vertex(x).rotation.clear();
        g.kill_vertex(c);
        g.kill_vertex(x);
        g.compact();
        changed = true;
      }
    }
  }
  return g;
}

// Boundary vertices listed in counterclockwise order along the disk. Adjacent
// pairs are swapped through new crossing nodes until the labels run cyclically,
// starting from the label of rank shift.
void braid_boundary(Graph& g, std::vector<int> order, int shift) {
  const int m = static_cast<int>(order.size());
  std::vector<int> sorted;
  for (int v : order) sorted.push_back(g.vertex(v).label);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> rank;
  for (int v : order) {
    int r = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), g.vertex(v).label) - sorted.begin());
    rank.push_back((r - shift + m) % m);
  }
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int j = 0; j + 1 < m; ++j) {
      if (rank[j] < rank[j + 1]) continue;
      int P = order[j], Q = order[j + 1];
      int dp = g.vertex(P).rotation[0], dq = g.vertex(Q).rotation[0];
      int X = g.add_vertex(Kind::Crossing, (g.vertex(P).x + g.vertex(Q).x) / 2, (g.vertex(P).y + g.vertex(Q).y) / 2);
      std::swap(g.vertex(P).x, g.vertex(Q).x);
      std::swap(g.vertex(P).y, g.vertex(Q).y);
      g.set_end(dp >> 1, dp & 1, X);
      g.set_end(dq >> 1, dq & 1, X);
      int fq = g.add_edge(X, Q), fp = g.add_edge(X, P);
      g.vertex(P).rotation = {2 * fp + 1};
      g.vertex(Q).rotation = {2 * fq + 1};
      g.vertex(X).rotation = {2 * fq, 2 * fp, dq, dp};
      std::swap(order[j], order[j + 1]);
      std::swap(rank[j], rank[j + 1]);
      swapped = true;
    }
  }
}

// Cyclic starting points ordered by the number of crossings they need.
std::vector<int> braid_shifts(const Graph& g, const std::vector<int>& order) {
  const int m = static_cast<int>(order.size());
  std::vector<int> labels;
  for (int v : order) labels.push_back(g.vertex(v).label);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<long, int>> cost;
  for (int shift = 0; shift < std::max(m, 1); ++shift) {
    std::vector<int> rank;
    for (int l : labels)
      rank.push_back((static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin()) - shift + m) % m);
    long inv = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) inv += rank[a] > rank[b];
    cost.push_back({inv, shift});
  }
  std::sort(cost.begin(), cost.end());
  std::vector<int> out;
  for (auto [inv, shift] : cost) out.push_back(shift);
  return out;
}

}  // namespace

Graph from_go(const diagrams::GoDiagram& d) {
  const auto& sh = d.shape();
  const int k = d.k(), n = d.n();
  // Nodes on a grid scaled by 4: box (r, c) covers x in [4c-4, 4c], y in [-4r, -4r+4].
  enum class NodeKind { Cross, ElbowNE, ElbowSW, Port };
  struct Node {
    NodeKind kind;
    double x, y;
    int label = 0;
  };
  std::vector<Node> nodes;
  std::map<std::tuple<int, int, int>, int> node_at;  // (r, c, 0 cross / 1 NE / 2 SW)
  auto node = [&](int r, int c, int which) {
    auto key = std::make_tuple(r, c, which);
    if (auto it = node_at.find(key); it != node_at.end()) return it->second;
    double x0 = 4.0 * (c - 1), y0 = -4.0 * r;
    Node nd{which == 0 ? NodeKind::Cross : which == 1 ? NodeKind::ElbowNE : NodeKind::ElbowSW,
            which == 0 ? x0 + 2 : which == 1 ? x0 + 3 : x0 + 1, which == 0 ? y0 + 2 : which == 1 ? y0 + 3 : y0 + 1};
    nodes.push_back(nd);
    node_at[key] = static_cast<int>(nodes.size()) - 1;
    return static_cast<int>(nodes.size()) - 1;
  };
  struct Segment {
    int a, b;
    std::pair<double, double> da, db;  // directions of the segment leaving a and b
  };
  std::vector<Segment> segments;
  struct Port {
    int label, pos, color;  // pos orders ports counterclockwise along the northwest border
    bool live;
    int node;
  };
  std::vector<Port> ports;

  for (int i = 1; i <= n; ++i) {
    // Locate the start of pipe i on the southeast border.
    int r = 0, c = 0;
    bool heading_west = false;
    for (int rr = 1; rr <= k; ++rr)
      if (sh.row_label(rr) == i) r = rr, c = sh.row_length(rr), heading_west = true;
    for (int cc = 1; cc <= n - k; ++cc)
      if (sh.column_label(cc) == i) c = cc, r = sh.column_height(cc), heading_west = false;
    const bool horizontal = heading_west;
    struct Station {
      int node;
      std::pair<double, double> in, out;
      bool elbow;
    };
    std::vector<Station> stations;
    while (r >= 1 && c >= 1) {
      Fill f = d.at(Box{r, c});
      if (f != Fill::Blank) {
        stations.push_back({node(r, c, 0), heading_west ? std::pair{1.0, 0.0} : std::pair{0.0, -1.0},
                            heading_west ? std::pair{-1.0, 0.0} : std::pair{0.0, 1.0}, false});
      } else {
        stations.push_back({node(r, c, heading_west ? 1 : 2), {1.0, -1.0}, {-1.0, 1.0}, true});
        heading_west = !heading_west;
      }
      if (heading_west) --c;
      else --r;
    }
    // Exit port on the northwest border.
    Port port{i, 0, horizontal ? 1 : -1, false, -1};
    port.pos = r == 0 ? (sh.row_length(1) - c) : (sh.row_length(1) + r - 1);
    int first = -1;
    for (size_t j = 0; j < stations.size(); ++j)
      if (stations[j].elbow) {
        first = static_cast<int>(j);
        break;
      }
    if (first >= 0) {
      port.live = true;
      nodes.push_back(Node{NodeKind::Port, r == 0 ? 4.0 * c - 2 : -1.0, r == 0 ? 1.0 : -4.0 * r + 2, i});
      port.node = static_cast<int>(nodes.size()) - 1;
      for (size_t j = first; j + 1 < stations.size(); ++j)
        segments.push_back({stations[j].node, stations[j + 1].node, stations[j].out, stations[j + 1].in});
      segments.push_back({stations.back().node, port.node, stations.back().out, {0.0, 0.0}});
    }
    ports.push_back(port);
  }
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= sh.row_length(r); ++c)
      if (d.at(Box{r, c}) == Fill::Blank) segments.push_back({node(r, c, 1), node(r, c, 2), {-1.0, -1.0}, {1.0, 1.0}});

  std::sort(ports.begin(), ports.end(), [](const Port& a, const Port& b) { return a.pos < b.pos; });

  Graph g;
  std::vector<int> degree(nodes.size(), 0), vid(nodes.size(), -1);
  for (const auto& s : segments) ++degree[s.a], ++degree[s.b];
  for (const auto& p : ports)
    if (!p.live) {
      const double x = p.pos < sh.row_length(1) ? 4.0 * (sh.row_length(1) - p.pos) - 2 : -1.0;
      const double y = p.pos < sh.row_length(1) ? 1.0 : -4.0 * (p.pos - sh.row_length(1)) - 2;
      g.add_boundary(p.label, p.color, x, y);
    }
  for (size_t j = 0; j < nodes.size(); ++j) {
    const Node& nd = nodes[j];
    if (degree[j] == 0) continue;
    switch (nd.kind) {
      case NodeKind::Port: vid[j] = g.add_boundary(nd.label, 0, nd.x, nd.y); break;
      case NodeKind::Cross: vid[j] = g.add_vertex(degree[j] == 4 ? Kind::Crossing : Kind::White, nd.x, nd.y); break;
      case NodeKind::ElbowNE: vid[j] = g.add_vertex(Kind::GRASSTROPIC_ELBOW_NE, nd.x, nd.y); break;
      case NodeKind::ElbowSW: vid[j] = g.add_vertex(Kind::GRASSTROPIC_ELBOW_SW, nd.x, nd.y); break;
    }
  }
  std::vector<std::pair<double, double>> dir;
  for (const auto& s : segments) {
    g.add_edge(vid[s.a], vid[s.b]);
    dir.push_back(s.da);
    dir.push_back(s.db);
  }
  sort_rotations(g, dir);
  std::vector<int> order;
  for (const auto& p : ports)
    if (p.live) order.push_back(vid[p.node]);
  // Boundary edges may have to cross before reaching the disk boundary; take the
  // cheapest braid whose trips give consistent face labels.
  std::optional<Graph> fallback;
  for (int shift : braid_shifts(g, order)) {
    Graph h = g;
    braid_boundary(h, order, shift);
    h.validate();
    h = cancel_bigons(smooth(h));
    h.validate();
    try {
      label_all(h);
      return h;
    } catch (const Error&) {
      if (!fallback) fallback = h;
    }
  }
  return *fallback;
}

void validate(const Triangulation& t) {
  if (t.n < 3) throw Error("triangulation needs n >= 3");
  if (static_cast<int>(t.diagonals.size()) != t.n - 3) throw Error("triangulation needs exactly n-3 diagonals");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : t.diagonals) {
    if (a > b) std::swap(a, b);
    if (a < 1 || b > t.n || b - a < 2 || (a == 1 && b == t.n)) throw Error("invalid diagonal " + std::to_string(a) + "-" + std::to_string(b));
    if (!seen.insert({a, b}).second) throw Error("repeated diagonal");
  }
  for (auto [a, b] : seen)
    for (auto [c, e] : seen)
      if (a < c && c < b && b < e) throw Error("diagonals cross");
}

std::vector<Triangulation> all_triangulations(int n) {
  // Triangulations of the polygon on vertices a..b (consecutive), as diagonal lists.
  std::function<std::vector<std::vector<std::pair<int, int>>>(int, int)> rec = [&](int a, int b) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (b - a < 2) return std::vector<std::vector<std::pair<int, int>>>{{}};
    for (int m = a + 1; m < b; ++m)
      for (const auto& left : rec(a, m))
        for (const auto& right : rec(m, b)) {
          auto ds = left;
          ds.insert(ds.end(), right.begin(), right.end());
          if (m - a >= 2) ds.push_back({a, m});
          if (b - m >= 2) ds.push_back({m, b});
          out.push_back(ds);
        }
    return out;
  };
  std::vector<Triangulation> out;
  for (auto ds : rec(1, n)) {
    std::sort(ds.begin(), ds.end());
    out.push_back({n, ds});
  }
  std::sort(out.begin(), out.end(), [](const Triangulation& a, const Triangulation& b) { return a.diagonals < b.diagonals; });
  return out;
}

std::vector<std::array<int, 3>> triangles(const Triangulation& t) {
  validate(t);
  std::set<std::pair<int, int>> edges;
  for (int i = 1; i <= t.n; ++i) edges.insert({std::min(i, i % t.n + 1), std::max(i, i % t.n + 1)});
  for (auto [a, b] : t.diagonals) edges.insert({std::min(a, b), std::max(a, b)});
  std::vector<std::array<int, 3>> out;
  for (int a = 1; a <= t.n; ++a)
    for (int b = a + 1; b <= t.n; ++b)
      for (int c = b + 1; c <= t.n; ++c)
        if (edges.count({a, b}) && edges.count({b, c}) && edges.count({a, c})) out.push_back({a, b, c});
  return out;
}

Triangulation flip(const Triangulation& t, int index) {
  validate(t);
  if (index < 0 || index >= static_cast<int>(t.diagonals.size())) throw Error("flip: no diagonal " + std::to_string(index));
  auto [a, b] = t.diagonals[index];
  if (a > b) std::swap(a, b);
  std::vector<int> apex;
  for (const auto& tri : triangles(t)) {
    std::set<int> s(tri.begin(), tri.end());
    if (s.count(a) && s.count(b)) {
      s.erase(a);
      s.erase(b);
      apex.push_back(*s.begin());
    }
  }
  if (apex.size() != 2) throw Error("flip: diagonal is not shared by two triangles");
  Triangulation out = t;
  out.diagonals[index] = {std::min(apex[0], apex[1]), std::max(apex[0], apex[1])};
  std::sort(out.diagonals.begin(), out.diagonals.end());
  return out;
}

Graph from_triangulation(const Triangulation& t) {
  const auto tris = triangles(t);
  const int n = t.n;
  std::vector<double> px(n + 1), py(n + 1);
  for (int i = 1; i <= n; ++i) {
    double ang = 2 * std::numbers::pi * (i - 1) / n - std::numbers::pi / 2;
    px[i] = std::cos(ang);
    py[i] = std::sin(ang);
  }
  std::vector<bool> on_diagonal(n + 1, false);
  for (auto [a, b] : t.diagonals) on_diagonal[a] = on_diagonal[b] = true;
  Graph g;
  std::vector<int> corner(n + 1);
  std::vector<std::pair<double, double>> dir;
  auto edge = [&](int u, int v) {
    g.add_edge(u, v);
    dir.push_back({g.vertex(v).x - g.vertex(u).x, g.vertex(v).y - g.vertex(u).y});
    dir.push_back({g.vertex(u).x - g.vertex(v).x, g.vertex(u).y - g.vertex(v).y});
  };
  for (int i = 1; i <= n; ++i) {
    // the ray at corner i carries label i-1, so that the region inside the
    // diagonal {a,b} is labeled {a,b} and the one outside side {i,i+1} is {i,i+1}
    int b = g.add_boundary((i + n - 2) % n + 1, 0, 2 * px[i], 2 * py[i]);
    corner[i] = g.add_vertex(on_diagonal[i] ? Kind::White : Kind::Black, px[i], py[i]);
    edge(b, corner[i]);
  }
  for (const auto& tri : tris) {
    double cx = 0, cy = 0;
    for (int i : tri) cx += px[i] / 3, cy += py[i] / 3;
    int c = g.add_vertex(Kind::Black, cx, cy);
    for (int i : tri) edge(c, corner[i]);
  }
  sort_rotations(g, dir);
  g.validate();
  return normal_form(g);
}

Graph from_contour(const soliton::ContourPlot& input, const diagrams::DecoratedPermutation& pi) {
  const soliton::ContourPlot plot = input.frame == soliton::Frame::XBarYBar ? soliton::half_turn(input) : input;
  if (!plot.generic()) throw Error("from_contour: plot is not generic: " + plot.issues.front());
  if (pi.n() != plot.n) throw Error("from_contour: permutation size does not match the plot");
  Graph g;
  std::vector<int> vid(plot.vertices.size(), -1);
  auto to_d = [](const Rational& q) { return q.get_d(); };
  // Boundary vertices: label from the ray type and its direction.
  struct Exit {
    double pos;
    int label, vertex;
  };
  std::vector<Exit> exits;
  const auto& bb = plot.bbox;
  const double W = to_d(bb.xmax - bb.xmin), H = to_d(bb.ymax - bb.ymin);
  auto perimeter = [&](const soliton::Point& p) {
    // counterclockwise from the bottom-left corner
    if (p.y == bb.ymin) return to_d(p.x - bb.xmin);
    if (p.x == bb.xmax) return W + to_d(p.y - bb.ymin);
    if (p.y == bb.ymax) return W + H + to_d(bb.xmax - p.x);
    return 2 * W + H + to_d(bb.ymax - p.y);
  };
  for (size_t v = 0; v < plot.vertices.size(); ++v) {
    const auto& cv = plot.vertices[v];
    if (cv.kind == soliton::VertexKind::Higher) throw Error("from_contour: vertex of degree > 4 has no plabic-graph treatment");
    if (cv.kind != soliton::VertexKind::Boundary) continue;
    if (cv.edges.size() != 1) throw Error("from_contour: boundary point carries several edges");
    const auto& e = plot.edges[cv.edges[0]];
    int other = e.from == static_cast<int>(v) ? e.to : e.from;
    const auto& q = plot.vertices[other].p;
    if (cv.p.y == q.y) throw Error("from_contour: horizontal ray");
    if (e.type.first == 0) throw Error("from_contour: edge without a soliton type");
    exits.push_back({perimeter(cv.p), cv.p.y > q.y ? e.type.second : e.type.first, static_cast<int>(v)});
  }
  std::sort(exits.begin(), exits.end(), [](const Exit& a, const Exit& b) { return a.pos < b.pos; });
  for (const auto& x : exits) {
    const auto& p = plot.vertices[x.vertex].p;
    vid[x.vertex] = g.add_boundary(x.label, 0, to_d(p.x), to_d(p.y));
  }
  for (int i = 1; i <= pi.n(); ++i)
    if (pi.perm(i) == i) g.add_boundary(i, pi.colors[i - 1]);
  for (size_t v = 0; v < plot.vertices.size(); ++v) {
    const auto& cv = plot.vertices[v];
    if (cv.kind == soliton::VertexKind::Boundary) continue;
    Kind kind = Kind::Crossing;
    if (cv.kind == soliton::VertexKind::Trivalent) {
      int down = 0;
      for (int e : cv.edges) {
        const auto& ed = plot.edges[e];
        int other = ed.from == static_cast<int>(v) ? ed.to : ed.from;
        down += plot.vertices[other].p.y < cv.p.y;
      }
      kind = down == 1 ? Kind::Black : Kind::White;
    }
    vid[v] = g.add_vertex(kind, to_d(cv.p.x), to_d(cv.p.y));
  }
  std::vector<std::pair<double, double>> dir;
  for (const auto& e : plot.edges) {
    g.add_edge(vid[e.from], vid[e.to]);
    const auto& a = plot.vertices[e.from].p;
    const auto& b = plot.vertices[e.to].p;
    dir.push_back({to_d(b.x - a.x), to_d(b.y - a.y)});
    dir.push_back({to_d(a.x - b.x), to_d(a.y - b.y)});
  }
  sort_rotations(g, dir);
  // Rays that cross outside their last vertex reach the disk in a different
  // order; braid them at the boundary. New edges get ids past the plot's.
  std::vector<int> order;
  for (const auto& x : exits) order.push_back(vid[x.vertex]);
  std::optional<Graph> fallback;
  for (int shift : braid_shifts(g, order)) {
    Graph h = g;
    braid_boundary(h, order, shift);
    h.validate();
    try {
      label_all(h);
      return h;
    } catch (const Error&) {
      if (!fallback) fallback = h;
    }
  }
  return *fallback;
}

std::vector<int> regions_of_faces(const Graph& g, const FaceMap& map, const soliton::ContourPlot& plot) {
  if (g.edge_count() < static_cast<int>(plot.edges.size())) throw Error("regions_of_faces: graph and plot have different edges");
  std::vector<int> out(map.face_count, -1);
  for (int e = 0; e < static_cast<int>(plot.edges.size()); ++e)
    for (int side = 0; side < 2; ++side) {
      int f = map.face_of[2 * e + side];
      int r = side == 0 ? plot.edges[e].left : plot.edges[e].right;
      if (out[f] != -1 && out[f] != r) throw Error("regions_of_faces: face meets two plot regions");
      out[f] = r;
    }
  if (map.outer >= 0) out[map.outer] = -1;
  // a disk without edges is a single region
  if (g.edge_count() == 0 && plot.regions.size() == 1)
    for (int f = 0; f < map.face_count; ++f)
      if (f != map.outer) out[f] = 0;
  return out;
}

}  // namespace grasstropic::plabic
