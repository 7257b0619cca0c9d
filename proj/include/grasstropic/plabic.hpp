#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grasstropic/diagrams.hpp"
#include "grasstropic/soliton.hpp"

namespace grasstropic::plabic {

enum class Kind { Boundary, Black, White, Crossing };
std::string to_string(Kind k);

struct Vertex {
  Kind kind = Kind::Black;
  int label = 0;            // boundary label 1..n
  int color = 0;            // isolated boundary vertices: +1 or -1
  std::vector<int> rotation;  // outgoing darts, counterclockwise
  double x = 0, y = 0;      // drawing position
};

// Generalized plabic graph embedded in a disk. Dart 2e runs from ends[0] to
// ends[1] of edge e, dart 2e+1 the other way. Boundary vertices sit on the
// disk boundary in counterclockwise order of their labels; the boundary arcs
// between them are implicit.
class Graph {
 public:
  int add_vertex(Kind kind, double x = 0, double y = 0);
  int add_boundary(int label, int isolated_color = 0, double x = 0, double y = 0);
  // Appends the new darts to the end of both rotations.
  int add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(ends_.size()); }
  int n() const { return static_cast<int>(boundary_.size()); }

  const Vertex& vertex(int v) const { return vertices_[v]; }
  Vertex& vertex(int v) { return vertices_[v]; }
  const std::array<int, 2>& ends(int e) const { return ends_[e]; }
  int tail(int d) const { return ends_[d >> 1][d & 1]; }
  int head(int d) const { return ends_[d >> 1][(d & 1) ^ 1]; }
  static int twin(int d) { return d ^ 1; }
  int degree(int v) const { return static_cast<int>(vertices_[v].rotation.size()); }

  // Vertex id of the boundary vertex labeled i (1-based); requires labels 1..n.
  int boundary_vertex(int label) const;
  void set_rotation(int v, std::vector<int> darts);

  // Structural checks: labels 1..n, rotation consistency, boundary degree <= 1,
  // crossing degree 4, genus zero by Euler's formula on the disk map.
  void validate() const;

  // Mutation helpers used by moves; leave dead entries until compact().
  void kill_vertex(int v) { dead_vertex_[v] = true; }
  void kill_edge(int e) { dead_edge_[e] = true; }
  void set_end(int e, int side, int v) { ends_[e][side] = v; }
  bool vertex_alive(int v) const { return !dead_vertex_[v]; }
  bool edge_alive(int e) const { return !dead_edge_[e]; }
  void compact();

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<bool> dead_vertex_, dead_edge_;
  std::vector<int> boundary_;  // by label - 1
};

// Face structure of the disk map. Darts >= 2E are boundary arcs.
struct FaceMap {
  int real_darts = 0;
  std::vector<int> face_of;    // per dart (real and arc), face on its left
  std::vector<int> next;       // next dart along the same face
  int face_count = 0;
  int outer = -1;
  std::vector<std::vector<int>> face_darts;
};
FaceMap faces(const Graph& g);

struct Trip {
  int start = 0;            // boundary label
  int end = 0;              // boundary label
  std::vector<int> darts;   // empty for isolated boundary vertices
};
Trip trip(const Graph& g, int i);
diagrams::DecoratedPermutation trip_permutation(const Graph& g);

struct TripLabeling {
  FaceMap map;
  std::vector<std::vector<int>> edge_labels;  // sorted trip indices per edge
  std::vector<Subset> face_labels;            // per face; the outer face has an empty label
  std::vector<int> regions() const;           // faces other than the outer one
  std::vector<Subset> region_labels() const;  // sorted
};
TripLabeling label_all(const Graph& g);

struct ResonanceReport {
  bool reduced = false;  // no crossings and every internal vertex resonant
  std::vector<int> violations;
};
ResonanceReport resonance_check(const Graph& g, const TripLabeling& labels);
ResonanceReport resonance_check(const Graph& g);

struct SquareMove {
  std::array<int, 4> cycle;
};
struct Contraction {
  int edge;
};
struct Uncontraction {
  int vertex, first, count;  // darts rotation[first .. first+count-1] move to the new vertex
};
struct VertexRemoval {
  int vertex;
};
struct VertexInsertion {
  int edge;
  Kind color;
};
using Move = std::variant<SquareMove, Contraction, Uncontraction, VertexRemoval, VertexInsertion>;
std::string describe(const Move& m);

Graph apply_move(const Graph& g, const Move& m);

struct R1Site {
  int black, white;
  int edge1, edge2;
};
std::optional<R1Site> detect_R1(const Graph& g);

// Canonical code of the embedded graph, stable under relabeling of ids.
std::vector<int> canonical_code(const Graph& g);

// Contracts every unicolored edge and removes every degree-2 internal vertex.
Graph normal_form(const Graph& g);

// All sites of square moves, contractions and uncontractions into degree >= 3 pieces.
std::vector<Move> move_sites(const Graph& g);

struct R1Search {
  std::optional<R1Site> site;
  Graph graph;             // where the site was found
  std::vector<Move> path;  // moves from the input
  int explored = 0;
};
R1Search search_R1(const Graph& g, int depth, int max_states = 20000);

// Builders.
Graph from_go(const diagrams::GoDiagram& d);

struct Triangulation {
  int n = 0;
  std::vector<std::pair<int, int>> diagonals;
};
void validate(const Triangulation& t);
std::vector<Triangulation> all_triangulations(int n);
Triangulation flip(const Triangulation& t, int diagonal_index);
std::vector<std::array<int, 3>> triangles(const Triangulation& t);
Graph from_triangulation(const Triangulation& t);

// Edge e of the plot becomes edge e of the graph; rays end at boundary vertices.
Graph from_contour(const soliton::ContourPlot& plot, const diagrams::DecoratedPermutation& pi);

// Faces of the graph matched to the plot's regions (by shared edges), for round trips.
std::vector<int> regions_of_faces(const Graph& g, const FaceMap& map, const soliton::ContourPlot& plot);

}  // namespace grasstropic::plabic
