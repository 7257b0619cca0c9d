#include "grasstropic/plabic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace grasstropic::plabic {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Boundary: return "boundary";
    case Kind::Black: return "black";
    case Kind::White: return "white";
    default: return "crossing";
  }
}

int Graph::add_vertex(Kind kind, double x, double y) {
  if (kind == Kind::Boundary) throw Error("use add_boundary for boundary vertices");
  Vertex v;
  v.kind = kind;
  v.x = x;
  v.y = y;
  vertices_.push_back(v);
  dead_vertex_.push_back(false);
  return vertex_count() - 1;
}

int Graph::add_boundary(int label, int isolated_color, double x, double y) {
  if (label < 1) throw Error("boundary labels start at 1");
  Vertex v;
  v.kind = Kind::Boundary;
  v.label = label;
  v.color = isolated_color;
  v.x = x;
  v.y = y;
  vertices_.push_back(v);
  dead_vertex_.push_back(false);
  if (static_cast<int>(boundary_.size()) < label) boundary_.resize(label, -1);
  if (boundary_[label - 1] != -1) throw Error("duplicate boundary label " + std::to_string(label));
  boundary_[label - 1] = vertex_count() - 1;
  return vertex_count() - 1;
}

int Graph::add_edge(int u, int v) {
  if (u == v) throw Error("loops are not allowed");
  ends_.push_back({u, v});
  dead_edge_.push_back(false);
  int e = edge_count() - 1;
  vertices_[u].rotation.push_back(2 * e);
  vertices_[v].rotation.push_back(2 * e + 1);
  return e;
}

int Graph::boundary_vertex(int label) const {
  if (label < 1 || label > n() || boundary_[label - 1] < 0) throw Error("no boundary vertex labeled " + std::to_string(label));
  return boundary_[label - 1];
}

void Graph::set_rotation(int v, std::vector<int> darts) {
  for (int d : darts)
    if (tail(d) != v) throw Error("set_rotation: dart does not start at the vertex");
  if (darts.size() != vertices_[v].rotation.size()) throw Error("set_rotation: wrong number of darts");
  vertices_[v].rotation = std::move(darts);
}

void Graph::compact() {
  std::vector<int> vmap(vertices_.size(), -1), emap(ends_.size(), -1);
  std::vector<Vertex> nv;
  for (int v = 0; v < vertex_count(); ++v)
    if (!dead_vertex_[v]) {
      vmap[v] = static_cast<int>(nv.size());
      nv.push_back(vertices_[v]);
    }
  std::vector<std::array<int, 2>> ne;
  for (int e = 0; e < edge_count(); ++e)
    if (!dead_edge_[e]) {
      emap[e] = static_cast<int>(ne.size());
      ne.push_back({vmap[ends_[e][0]], vmap[ends_[e][1]]});
      if (ne.back()[0] < 0 || ne.back()[1] < 0) throw Error("compact: live edge at a removed vertex");
    }
  for (auto& v : nv)
    for (int& d : v.rotation) {
      if (emap[d >> 1] < 0) throw Error("compact: rotation refers to a removed edge");
      d = 2 * emap[d >> 1] + (d & 1);
    }
  for (int& b : boundary_) b = b >= 0 ? vmap[b] : -1;
  vertices_ = std::move(nv);
  ends_ = std::move(ne);
  dead_vertex_.assign(vertices_.size(), false);
  dead_edge_.assign(ends_.size(), false);
}

namespace {

struct Augmented {
  std::vector<std::vector<int>> rotation;  // per vertex, including arcs
  std::vector<int> tail, position;          // per dart
  int real = 0, total = 0;
};

Augmented augment(const Graph& g) {
  Augmented a;
  const int n = g.n();
  a.real = 2 * g.edge_count();
  a.total = a.real + 2 * n;
  a.rotation.resize(g.vertex_count());
  a.tail.assign(a.total, -1);
  a.position.assign(a.total, -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Vertex& vx = g.vertex(v);
    if (vx.kind != Kind::Boundary) {
      a.rotation[v] = vx.rotation;
      continue;
    }
    int i = vx.label;
    int to_next = a.real + 2 * (i - 1);
    int to_prev = a.real + 2 * ((i - 2 + n) % n) + 1;
    a.rotation[v].push_back(to_next);
    for (int d : vx.rotation) a.rotation[v].push_back(d);
    a.rotation[v].push_back(to_prev);
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int p = 0; p < static_cast<int>(a.rotation[v].size()); ++p) {
      int d = a.rotation[v][p];
      if (a.tail[d] != -1) throw Error("rotation system lists a dart twice");
      a.tail[d] = v;
      a.position[d] = p;
    }
  for (int d = 0; d < a.total; ++d)
    if (a.tail[d] == -1) throw Error("rotation system misses a dart");
  return a;
}

}  // namespace

FaceMap faces(const Graph& g) {
  Augmented a = augment(g);
  FaceMap m;
  m.real_darts = a.real;
  m.face_of.assign(a.total, -1);
  m.next.assign(a.total, -1);
  for (int d = 0; d < a.total; ++d) {
    int v = a.tail[d ^ 1];  // head of d
    const auto& rot = a.rotation[v];
    int p = a.position[d ^ 1];
    m.next[d] = rot[(p + static_cast<int>(rot.size()) - 1) % rot.size()];
  }
  for (int d = 0; d < a.total; ++d) {
    if (m.face_of[d] != -1) continue;
    std::vector<int> cycle;
    for (int x = d; m.face_of[x] == -1; x = m.next[x]) {
      m.face_of[x] = m.face_count;
      cycle.push_back(x);
    }
    m.face_darts.push_back(std::move(cycle));
    ++m.face_count;
  }
  if (g.n() > 0) {
    m.outer = m.face_of[a.real + 1];
    for (int i = 0; i < g.n(); ++i)
      if (m.face_of[a.real + 2 * i + 1] != m.outer) throw Error("boundary arcs do not bound a single outer face");
  }
  return m;
}

void Graph::validate() const {
  for (int i = 0; i < n(); ++i)
    if (boundary_[i] < 0) throw Error("boundary label " + std::to_string(i + 1) + " is missing");
  if (n() == 0) throw Error("graph has no boundary vertices");
  std::vector<int> seen(2 * edge_count(), 0);
  for (int v = 0; v < vertex_count(); ++v) {
    const Vertex& vx = vertices_[v];
    for (int d : vx.rotation) {
      if (d < 0 || d >= 2 * edge_count() || tail(d) != v) throw Error("rotation of vertex " + std::to_string(v) + " is inconsistent");
      ++seen[d];
    }
    if (vx.kind == Kind::Boundary) {
      if (vx.rotation.size() > 1) throw Error("boundary vertex " + std::to_string(vx.label) + " has degree > 1");
      if (vx.rotation.empty() && vx.color != 1 && vx.color != -1)
        throw Error("isolated boundary vertex " + std::to_string(vx.label) + " needs color +1 or -1");
    }
    if (vx.kind == Kind::Crossing && vx.rotation.size() != 4) throw Error("crossing node of degree " + std::to_string(vx.rotation.size()));
  }
  for (int d = 0; d < 2 * edge_count(); ++d)
    if (seen[d] != 1) throw Error("dart " + std::to_string(d) + " appears " + std::to_string(seen[d]) + " times in rotations");
  FaceMap m = faces(*this);
  // components of the map with arcs
  std::vector<int> comp(vertex_count(), -1);
  int components = 0;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = components;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      std::vector<int> nbrs;
      for (int d : vertices_[v].rotation) nbrs.push_back(head(d));
      if (vertices_[v].kind == Kind::Boundary) {
        int i = vertices_[v].label;
        nbrs.push_back(boundary_[i % n()]);
        nbrs.push_back(boundary_[(i - 2 + n()) % n()]);
      }
      for (int u : nbrs)
        if (comp[u] == -1) {
          comp[u] = components;
          stack.push_back(u);
        }
    }
    ++components;
  }
  int euler = vertex_count() - (edge_count() + n()) + m.face_count;
  if (euler != 2 * components) throw Error("rotation system is not planar (Euler characteristic " + std::to_string(euler) + ")");
}

Trip trip(const Graph& g, int i) {
  Trip t;
  t.start = i;
  int b = g.boundary_vertex(i);
  if (g.degree(b) == 0) {
    t.end = i;
    return t;
  }
  int d = g.vertex(b).rotation[0];
  const int limit = 4 * g.edge_count() + 8;
  while (true) {
    t.darts.push_back(d);
    if (static_cast<int>(t.darts.size()) > limit) throw Error("trip " + std::to_string(i) + " does not terminate; rotation data is malformed");
    int v = g.head(d);
    const Vertex& vx = g.vertex(v);
    if (vx.kind == Kind::Boundary) {
      t.end = vx.label;
      return t;
    }
    const auto& rot = vx.rotation;
    const int deg = static_cast<int>(rot.size());
    int p = static_cast<int>(std::find(rot.begin(), rot.end(), Graph::twin(d)) - rot.begin());
    if (p == deg) throw Error("trip: arriving dart missing from rotation");
    switch (vx.kind) {
      case Kind::Black: d = rot[(p + 1) % deg]; break;
      case Kind::White: d = rot[(p + deg - 1) % deg]; break;
      default:
        if (deg != 4) throw Error("crossing node of degree " + std::to_string(deg));
        d = rot[(p + 2) % 4];
    }
  }
}

diagrams::DecoratedPermutation trip_permutation(const Graph& g) {
  const int n = g.n();
  std::vector<int> im(n), colors(n, 0);
  for (int i = 1; i <= n; ++i) {
    im[i - 1] = trip(g, i).end;
    const Vertex& b = g.vertex(g.boundary_vertex(i));
    if (g.degree(g.boundary_vertex(i)) == 0) colors[i - 1] = b.color;
    else if (im[i - 1] == i) throw Error("trip from boundary vertex " + std::to_string(i) + " returns to it");
  }
  return {weyl::Permutation(im), colors};
}

std::vector<int> TripLabeling::regions() const {
  std::vector<int> out;
  for (int f = 0; f < map.face_count; ++f)
    if (f != map.outer) out.push_back(f);
  return out;
}

std::vector<Subset> TripLabeling::region_labels() const {
  std::vector<Subset> out;
  for (int f : regions()) out.push_back(face_labels[f]);
  std::sort(out.begin(), out.end());
  return out;
}

TripLabeling label_all(const Graph& g) {
  TripLabeling lab;
  lab.map = faces(g);
  const FaceMap& m = lab.map;
  lab.edge_labels.assign(g.edge_count(), {});
  lab.face_labels.assign(m.face_count, {});
  for (int i = 1; i <= g.n(); ++i) {
    int b = g.boundary_vertex(i);
    if (g.degree(b) == 0) {
      if (g.vertex(b).color == 1)
        for (int f = 0; f < m.face_count; ++f)
          if (f != m.outer) lab.face_labels[f].push_back(i);
      continue;
    }
    Trip t = trip(g, i);
    std::vector<bool> on_trip(g.edge_count(), false), left(m.face_count, false), right(m.face_count, false);
    std::vector<int> stack;
    for (int d : t.darts) {
      if (!on_trip[d >> 1]) lab.edge_labels[d >> 1].push_back(i);
      on_trip[d >> 1] = true;
      right[m.face_of[d ^ 1]] = true;
      if (!left[m.face_of[d]]) {
        left[m.face_of[d]] = true;
        stack.push_back(m.face_of[d]);
      }
    }
    // faces adjacent across edges the trip does not use
    std::vector<std::vector<int>> adj(m.face_count);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (on_trip[e]) continue;
      int a = m.face_of[2 * e], c = m.face_of[2 * e + 1];
      adj[a].push_back(c);
      adj[c].push_back(a);
    }
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (int h : adj[f])
        if (!left[h]) {
          left[h] = true;
          stack.push_back(h);
        }
    }
    for (int f = 0; f < m.face_count; ++f) {
      if (!left[f]) continue;
      if (right[f] || f == m.outer) throw Error("trip " + std::to_string(i) + " has the same face on both sides; the embedding is inconsistent");
      lab.face_labels[f].push_back(i);
    }
  }
  for (auto& s : lab.face_labels) std::sort(s.begin(), s.end());
  for (auto& s : lab.edge_labels) std::sort(s.begin(), s.end());
  size_t k = std::string::npos;
  for (int f : lab.regions()) {
    if (k == std::string::npos) k = lab.face_labels[f].size();
    else if (lab.face_labels[f].size() != k) throw Error("region labels have different sizes");
  }
  return lab;
}

ResonanceReport resonance_check(const Graph& g, const TripLabeling& labels) {
  ResonanceReport rep;
  bool crossing = false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Vertex& vx = g.vertex(v);
    if (vx.kind == Kind::Crossing) crossing = true;
    if (vx.kind != Kind::Black && vx.kind != Kind::White) continue;
    const int m = g.degree(v);
    std::vector<Subset> seq;
    bool ok = true;
    for (int d : vx.rotation) {
      seq.push_back(labels.edge_labels[d >> 1]);
      if (seq.back().size() != 2) ok = false;
    }
    if (ok) {
      std::set<int> distinct;
      for (const auto& s : seq) distinct.insert(s.begin(), s.end());
      std::vector<int> s(distinct.begin(), distinct.end());
      if (static_cast<int>(s.size()) != m) {
        ok = false;
      } else {
        std::vector<Subset> pattern;
        for (int j = 0; j + 1 < m; ++j) pattern.push_back({s[j], s[j + 1]});
        pattern.push_back({s[0], s[m - 1]});
        ok = false;
        for (int r = 0; r < m && !ok; ++r) {
          bool match = true;
          for (int j = 0; j < m && match; ++j) match = seq[(r + j) % m] == pattern[j];
          ok = match;
        }
      }
    }
    if (!ok) rep.violations.push_back(v);
  }
  rep.reduced = !crossing && rep.violations.empty();
  return rep;
}

ResonanceReport resonance_check(const Graph& g) { return resonance_check(g, label_all(g)); }

}  // namespace grasstropic::plabic
