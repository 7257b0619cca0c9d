#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "grasstropic/plabic.hpp"

namespace grasstropic::plabic {

namespace {

bool internal(const Graph& g, int v) {
  Kind k = g.vertex(v).kind;
  return k == Kind::Black || k == Kind::White;
}

int edges_between(const Graph& g, int u, int v) {
  int c = 0;
  for (int d : g.vertex(u).rotation) c += g.head(d) == v;
  return c;
}

// Rotation of v read cyclically, starting just after dart d and omitting it.
std::vector<int> after(const Graph& g, int v, int d) {
  const auto& rot = g.vertex(v).rotation;
  auto it = std::find(rot.begin(), rot.end(), d);
  std::vector<int> out;
  size_t p = static_cast<size_t>(it - rot.begin());
  for (size_t j = 1; j < rot.size(); ++j) out.push_back(rot[(p + j) % rot.size()]);
  return out;
}

void replace_dart(Graph& g, int v, int from, int to) {
  auto& rot = g.vertex(v).rotation;
  auto it = std::find(rot.begin(), rot.end(), from);
  if (it == rot.end()) throw Error("internal: dart missing from rotation");
  *it = to;
}

Kind other(Kind k) { return k == Kind::Black ? Kind::White : Kind::Black; }

Graph square(const Graph& src, const SquareMove& m) {
  Graph g = src;
  for (int j = 0; j < 4; ++j) {
    int v = m.cycle[j], u = m.cycle[(j + 1) % 4];
    if (v < 0 || v >= g.vertex_count() || !internal(g, v) || g.degree(v) != 3)
      throw Error("square move: vertex " + std::to_string(v) + " is not an internal trivalent vertex");
    if (g.vertex(v).kind == g.vertex(u).kind) throw Error("square move: colors do not alternate");
    if (edges_between(g, v, u) != 1) throw Error("square move: vertices " + std::to_string(v) + "," + std::to_string(u) + " are not joined by one edge");
  }
  std::set<int> distinct(m.cycle.begin(), m.cycle.end());
  if (distinct.size() != 4) throw Error("square move: repeated vertex");
  FaceMap f = faces(g);
  bool is_face = false;
  for (const auto& fd : f.face_darts) {
    if (fd.size() != 4) continue;
    std::set<int> vs;
    for (int d : fd) vs.insert(g.tail(d));
    is_face |= vs == distinct;
  }
  if (!is_face) throw Error("square move: the four vertices do not bound a face");
  for (int v : m.cycle) g.vertex(v).kind = other(g.vertex(v).kind);
  return g;
}

Graph contract(const Graph& src, int e) {
  Graph g = src;
  if (e < 0 || e >= g.edge_count()) throw Error("contraction: no edge " + std::to_string(e));
  int u = g.ends(e)[0], v = g.ends(e)[1];
  if (!internal(g, u) || g.vertex(u).kind != g.vertex(v).kind) throw Error("contraction: edge is not unicolored");
  if (edges_between(g, u, v) != 1) throw Error("contraction: endpoints are joined by parallel edges");
  std::vector<int> rot = after(g, u, 2 * e);
  std::vector<int> tail_v = after(g, v, 2 * e + 1);
  for (int d : tail_v) g.set_end(d >> 1, d & 1, u);
  rot.insert(rot.end(), tail_v.begin(), tail_v.end());
  g.vertex(u).rotation = rot;
  g.vertex(v).rotation.clear();
  g.kill_vertex(v);
  g.kill_edge(e);
  g.compact();
  return g;
}

Graph uncontract(const Graph& src, const Uncontraction& m) {
  Graph g = src;
  int v = m.vertex;
  if (v < 0 || v >= g.vertex_count() || !internal(g, v)) throw Error("uncontraction: not an internal vertex");
  const auto rot = g.vertex(v).rotation;
  const int deg = static_cast<int>(rot.size());
  if (m.count < 1 || m.count >= deg || m.first < 0 || m.first >= deg) throw Error("uncontraction: bad dart range");
  std::vector<int> block, rest;
  for (int j = 0; j < deg; ++j) {
    int d = rot[(m.first + j) % deg];
    (j < m.count ? block : rest).push_back(d);
  }
  int w = g.add_vertex(g.vertex(v).kind, g.vertex(v).x, g.vertex(v).y);
  int e = g.add_edge(v, w);
  for (int d : block) g.set_end(d >> 1, d & 1, w);
  rest.push_back(2 * e);
  block.push_back(2 * e + 1);
  g.vertex(v).rotation = rest;
  g.vertex(w).rotation = block;
  return g;
}

Graph remove_middle(const Graph& src, int v) {
  Graph g = src;
  if (v < 0 || v >= g.vertex_count() || !internal(g, v) || g.degree(v) != 2) throw Error("vertex removal: not an internal degree-2 vertex");
  int a = g.vertex(v).rotation[0], b = g.vertex(v).rotation[1];
  int y = g.head(b);
  if (g.head(a) == y) throw Error("vertex removal: would create a loop");
  g.set_end(a >> 1, a & 1, y);
  replace_dart(g, y, b ^ 1, a);
  g.vertex(v).rotation.clear();
  g.kill_edge(b >> 1);
  g.kill_vertex(v);
  g.compact();
  return g;
}

Graph insert_middle(const Graph& src, const VertexInsertion& m) {
  Graph g = src;
  if (m.edge < 0 || m.edge >= g.edge_count()) throw Error("vertex insertion: no edge " + std::to_string(m.edge));
  if (m.color != Kind::Black && m.color != Kind::White) throw Error("vertex insertion: color must be black or white");
  int e = m.edge, w = g.ends(e)[1];
  int z = g.add_vertex(m.color, (g.vertex(g.ends(e)[0]).x + g.vertex(w).x) / 2, (g.vertex(g.ends(e)[0]).y + g.vertex(w).y) / 2);
  int f = g.add_edge(z, w);
  g.vertex(w).rotation.pop_back();
  g.set_end(e, 1, z);
  replace_dart(g, w, 2 * e + 1, 2 * f + 1);
  g.vertex(z).rotation = {2 * e + 1, 2 * f};
  return g;
}

}  // namespace

std::string describe(const Move& m) {
  std::ostringstream out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SquareMove>)
          out << "M1 square at " << x.cycle[0] << ',' << x.cycle[1] << ',' << x.cycle[2] << ',' << x.cycle[3];
        else if constexpr (std::is_same_v<T, Contraction>)
          out << "M2 contract edge " << x.edge;
        else if constexpr (std::is_same_v<T, Uncontraction>)
          out << "M2 split vertex " << x.vertex << " darts " << x.first << '+' << x.count;
        else if constexpr (std::is_same_v<T, VertexRemoval>)
          out << "M3 remove vertex " << x.vertex;
        else
          out << "M3 insert " << to_string(x.color) << " on edge " << x.edge;
      },
      m);
  return out.str();
}

Graph apply_move(const Graph& g, const Move& m) {
  Graph out = std::visit(
      [&](const auto& x) -> Graph {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SquareMove>) return square(g, x);
        else if constexpr (std::is_same_v<T, Contraction>) return contract(g, x.edge);
        else if constexpr (std::is_same_v<T, Uncontraction>) return uncontract(g, x);
        else if constexpr (std::is_same_v<T, VertexRemoval>) return remove_middle(g, x.vertex);
        else return insert_middle(g, x);
      },
      m);
  out.validate();
  return out;
}

std::optional<R1Site> detect_R1(const Graph& g) {
  for (int b = 0; b < g.vertex_count(); ++b) {
    if (g.vertex(b).kind != Kind::Black || g.degree(b) != 3) continue;
    std::map<int, std::vector<int>> by_head;
    for (int d : g.vertex(b).rotation) by_head[g.head(d)].push_back(d >> 1);
    for (const auto& [w, es] : by_head)
      if (es.size() == 2 && g.vertex(w).kind == Kind::White && g.degree(w) == 3) return R1Site{b, w, es[0], es[1]};
  }
  return std::nullopt;
}

std::vector<int> canonical_code(const Graph& g) {
  std::vector<int> id(g.vertex_count(), -1), start(g.vertex_count(), 0);
  std::vector<int> order;
  std::deque<int> queue;
  auto visit = [&](int v, int s) {
    id[v] = static_cast<int>(order.size());
    start[v] = s;
    order.push_back(v);
    queue.push_back(v);
  };
  for (int i = 1; i <= g.n(); ++i) visit(g.boundary_vertex(i), 0);
  std::vector<int> code;
  code.push_back(g.n());
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    const Vertex& vx = g.vertex(v);
    const auto& rot = vx.rotation;
    code.push_back(static_cast<int>(vx.kind));
    code.push_back(vx.kind == Kind::Boundary && rot.empty() ? vx.color : 0);
    code.push_back(static_cast<int>(rot.size()));
    for (size_t j = 0; j < rot.size(); ++j) {
      int d = rot[(start[v] + j) % rot.size()];
      int h = g.head(d);
      if (id[h] == -1) {
        const auto& hr = g.vertex(h).rotation;
        visit(h, static_cast<int>(std::find(hr.begin(), hr.end(), d ^ 1) - hr.begin()));
      }
      code.push_back(id[h]);
    }
  }
  // components that do not reach the boundary only contribute their size
  code.push_back(g.vertex_count() - static_cast<int>(order.size()));
  return code;
}

Graph normal_form(const Graph& src) {
  Graph g = src;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int e = 0; e < g.edge_count() && !changed; ++e) {
      int u = g.ends(e)[0], v = g.ends(e)[1];
      if (internal(g, u) && g.vertex(u).kind == g.vertex(v).kind && edges_between(g, u, v) == 1) {
        g = contract(g, e);
        changed = true;
      }
    }
    for (int v = 0; v < g.vertex_count() && !changed; ++v) {
      if (!internal(g, v) || g.degree(v) != 2) continue;
      const auto& rot = g.vertex(v).rotation;
      if (g.head(rot[0]) == g.head(rot[1])) continue;
      g = remove_middle(g, v);
      changed = true;
    }
  }
  return g;
}

std::vector<Move> move_sites(const Graph& g) {
  std::vector<Move> out;
  FaceMap f = faces(g);
  for (const auto& fd : f.face_darts) {
    if (fd.size() != 4) continue;
    std::array<int, 4> cyc;
    bool ok = true;
    for (int j = 0; j < 4; ++j) {
      if (fd[j] >= f.real_darts) {
        ok = false;
        break;
      }
      cyc[j] = g.tail(fd[j]);
      ok = ok && internal(g, cyc[j]) && g.degree(cyc[j]) == 3;
    }
    if (!ok) continue;
    std::set<int> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != 4) continue;
    bool alt = true;
    for (int j = 0; j < 4; ++j) alt = alt && g.vertex(cyc[j]).kind != g.vertex(cyc[(j + 1) % 4]).kind;
    if (alt) out.push_back(SquareMove{cyc});
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    int u = g.ends(e)[0], v = g.ends(e)[1];
    if (internal(g, u) && g.vertex(u).kind == g.vertex(v).kind && edges_between(g, u, v) == 1) out.push_back(Contraction{e});
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!internal(g, v)) continue;
    int m = g.degree(v);
    for (int count = 2; 2 * count <= m; ++count)
      for (int first = 0; first < (2 * count == m ? m / 2 : m); ++first) out.push_back(Uncontraction{v, first, count});
  }
  return out;
}

R1Search search_R1(const Graph& g, int depth, int max_states) {
  R1Search res;
  res.graph = g;
  struct State {
    Graph graph;
    std::vector<Move> path;
  };
  std::set<std::vector<int>> seen{canonical_code(g)};
  std::deque<State> queue{{g, {}}};
  while (!queue.empty()) {
    State s = std::move(queue.front());
    queue.pop_front();
    ++res.explored;
    if (auto site = detect_R1(s.graph)) {
      res.site = site;
      res.graph = s.graph;
      res.path = s.path;
      return res;
    }
    if (static_cast<int>(s.path.size()) >= depth) continue;
    for (const Move& m : move_sites(s.graph)) {
      if (static_cast<int>(seen.size()) >= max_states) break;
      Graph next = apply_move(s.graph, m);
      if (!seen.insert(canonical_code(next)).second) continue;
      auto path = s.path;
      path.push_back(m);
      queue.push_back({std::move(next), std::move(path)});
    }
  }
  return res;
}

}  // namespace grasstropic::plabic
