// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "grasstropic/minus_infinity.hpp"
#include "grasstropic/plabic.hpp"
#include "../unit/oracles.hpp"

using namespace grasstropic;
using diagrams::Box;
using diagrams::Fill;
using diagrams::GoDiagram;
using weyl::Permutation;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<Rational> q(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [a, b] : xs) out.emplace_back(a, b);
  return out;
}

const std::vector<Rational> kGeneric = q({{-5, 1}, {-3, 1}, {-2, 1}, {-1, 3}, {1, 2}, {7, 5}});
const std::vector<Rational> kFive = q({{-3, 1}, {-5, 4}, {1, 3}, {7, 5}, {3, 1}});
const std::vector<Rational> kNine = q({{-5, 1}, {-3, 1}, {-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
const char* kGr49 = "k=4 n=9\nxx.x.\n..o.o\nx.o.\n.o";
const char* kGr37 = "k=3 n=7\noxx.\nx.oo\n.o.o";
const char* kGr24 = "k=2 n=4\nx.\n.o";

std::vector<Rational> prefix(const std::vector<Rational>& v, int n) { return {v.begin(), v.begin() + n}; }

std::string flat(const GoDiagram& d) {
  std::string s = d.to_text();
  for (auto& c : s)
    if (c == '\n') c = '/';
  return s;
}

std::vector<GoDiagram> go_diagrams(int max_n, bool le_only) {
  std::vector<GoDiagram> out;
  for (int n = 2; n <= max_n; ++n)
    for (int k = 1; k < n; ++k)
      diagrams::for_each_go_diagram(k, n, [&](const GoDiagram& d) {
        if (!le_only || diagrams::is_le_diagram(d)) out.push_back(d);
      });
  return out;
}

PolyMatrix poly(const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = Polynomial::parse(rows[i][j]);
  return m;
}

Subset image(const Permutation& p, const Subset& s) {
  Subset out;
  for (int i : s) out.push_back(p(i));
  std::sort(out.begin(), out.end());
  return out;
}

Subset top_k(int n, int k) {
  Subset s;
  for (int i = n - k + 1; i <= n; ++i) s.push_back(i);
  return s;
}

Permutation word_product(int n, const std::vector<int>& letters) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  for (int i : letters) std::swap(img[i - 1], img[i]);  // right multiplication by s_i
  return Permutation(img);
}

// Label of a box: p_j for a blank box read j-th, 1 for a white stone, -1 for a black one.
Polynomial box_label(const GoDiagram& d, Box b) {
  switch (d.at(b)) {
    case Fill::Blank: return Polynomial::variable({'p', d.reading_index(b)});
    case Fill::White: return Polynomial(1);
    default: return Polynomial(-1);
  }
}

// Closed forms for the lexicographic extremes and every box, from the definitions.
struct ClosedForms {
  Subset I, I_prime;
  Polynomial delta_I;
  std::vector<std::pair<Subset, Polynomial>> boxes;
};

ClosedForms closed_forms(const GoDiagram& d) {
  const int k = d.k(), n = d.n();
  ClosedForms c;
  c.I = image(d.w(), top_k(n, k));
  c.I_prime = image(d.v(), top_k(n, k));
  c.delta_I = Polynomial(1);
  const auto order = diagrams::canonical_reading_order(d.shape());
  for (const auto& b : order) c.delta_I = c.delta_I * box_label(d, b);
  for (const auto& b : order) {
    std::vector<int> w_in, v_in;
    Polynomial out(1);
    for (const auto& x : order) {
      bool inner = x.row >= b.row && x.col >= b.col;
      if (inner) {
        w_in.push_back(d.shape().generator(x));
        if (d.at(x) != Fill::Blank) v_in.push_back(d.shape().generator(x));
      } else {
        out = out * box_label(d, x);
      }
    }
    auto vin = word_product(n, v_in), win = word_product(n, w_in);
    c.boxes.emplace_back(image(vin * win.inverse(), c.I), out);
  }
  return c;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); }
};

// Upper envelope along the horizontal line y = Y from x = +infinity leftwards;
// returns the dominant index sets in order.
std::vector<Subset> envelope_right_to_left(const std::vector<Subset>& bases, const std::vector<Rational>& kappa,
                                           const Rational& Y, const Rational& t) {
  struct Line {
    Subset J;
    Rational a, b;
  };
  std::vector<Line> lines;
  for (const auto& J : bases) {
    Rational a = 0, b = 0;
    for (int i : J) {
      const Rational& k = kappa[i - 1];
      a += k;
      b += k * k * Y + k * k * k * t;
    }
    lines.push_back({J, a, b});
  }
  size_t cur = 0;
  for (size_t i = 1; i < lines.size(); ++i)
    if (lines[i].a > lines[cur].a || (lines[i].a == lines[cur].a && lines[i].b > lines[cur].b)) cur = i;
  std::vector<Subset> seq{lines[cur].J};
  for (;;) {
    std::optional<size_t> next;
    Rational best_x;
    for (size_t i = 0; i < lines.size(); ++i) {
      if (!(lines[i].a < lines[cur].a)) continue;
      Rational x = (lines[i].b - lines[cur].b) / (lines[cur].a - lines[i].a);
      if (!next || x > best_x || (x == best_x && lines[i].a < lines[*next].a)) next = i, best_x = x;
    }
    if (!next) break;
    cur = *next;
    seq.push_back(lines[cur].J);
  }
  return seq;
}

std::pair<int, int> type_between(const Subset& a, const Subset& b) {
  Subset d;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  require(d.size() == 2, "adjacent dominant sets differ in more than one index");
  return {d[0], d[1]};
}

struct Rays {
  std::vector<std::pair<int, int>> top, bottom;  // top right to left, bottom left to right
};

Rays rays_by_envelope(const grassmann::Matroid& m, const std::vector<Rational>& kappa, const Rational& t) {
  const Rational far(10000000);
  Rays r;
  auto up = envelope_right_to_left(m.bases(), kappa, far, t);
  for (size_t i = 0; i + 1 < up.size(); ++i) r.top.push_back(type_between(up[i], up[i + 1]));
  auto down = envelope_right_to_left(m.bases(), kappa, -far, t);
  for (size_t i = down.size() - 1; i > 0; --i) r.bottom.push_back(type_between(down[i], down[i - 1]));
  return r;
}

std::vector<int> perm_from_rays(const Rays& r, int n) {
  std::vector<int> im(n, 0);
  for (auto [i, j] : r.top) im[i - 1] = j;
  for (auto [i, j] : r.bottom) im[j - 1] = i;
  for (int i = 0; i < n; ++i)
    if (!im[i]) im[i] = i + 1;
  return im;
}

// Four dominant sets at a crossing; black when the two types interleave.
bool interleaved(std::pair<int, int> a, std::pair<int, int> b) {
  auto in = [](int x, std::pair<int, int> p) { return p.first < x && x < p.second; };
  return in(b.first, a) != in(b.second, a);
}

// Checks every trivalent vertex of a plot from its edges and position.
void check_resonant(const soliton::ContourPlot& plot, const std::vector<Rational>& kappa, const std::string& what) {
  for (const auto& v : plot.vertices) {
    if (v.kind != soliton::VertexKind::Trivalent) continue;
    std::set<int> idx;
    std::set<std::pair<int, int>> types;
    for (int e : v.edges) {
      auto t = plot.edges[e].type;
      idx.insert(t.first);
      idx.insert(t.second);
      types.insert(t);
    }
    require(idx.size() == 3, what + ": trivalent vertex with " + std::to_string(idx.size()) + " indices");
    std::vector<int> s(idx.begin(), idx.end());
    require(types == std::set<std::pair<int, int>>{{s[0], s[1]}, {s[1], s[2]}, {s[0], s[2]}}, what + ": non-resonant types");
    const Rational &a = kappa[s[0] - 1], &b = kappa[s[1] - 1], &c = kappa[s[2] - 1];
    const Rational& t = plot.t;
    require(v.p.x == t * (a * b + a * c + b * c) && v.p.y == -t * (a + b + c), what + ": vertex off its resonance point");
  }
}

RationalMatrix random_tnn_matrix(int k, int n, std::mt19937_64& rng, const std::vector<GoDiagram>& le) {
  for (;;) {
    const auto& d = le[std::uniform_int_distribution<size_t>(0, le.size() - 1)(rng)];
    if (d.k() != k || d.n() != n || d.shape().size() == 0) continue;
    auto a = grassmann::component_matrix(d);
    return evaluate(a, grassmann::random_assignment(a, rng, true));
  }
}

std::map<Subset, Rational> oracle_minors(const RationalMatrix& a) {
  std::map<Subset, Rational> out;
  for (const auto& I : k_subsets(a.cols(), a.rows())) out[I] = oracle::minor(a, I);
  return out;
}

bool flip_is_square(const plabic::Graph& g, const std::vector<int>& target) {
  using namespace plabic;
  std::vector<Graph> states{g};
  for (int round = 0; round < 2; ++round) {
    std::vector<Graph> next;
    for (const auto& s : states)
      for (const auto& m : move_sites(s))
        if (auto* u = std::get_if<Uncontraction>(&m); u && u->count == 2 && s.vertex(u->vertex).kind == Kind::White)
          next.push_back(apply_move(s, m));
    states.insert(states.end(), next.begin(), next.end());
  }
  for (const auto& s : states)
    for (const auto& m : move_sites(s))
      if (std::holds_alternative<SquareMove>(m) && canonical_code(normal_form(apply_move(s, m))) == target) return true;
  return false;
}

// Sign of tau on a grid, with the largest exponential factored out.
std::pair<long, long> tau_signs(const std::map<Subset, Rational>& minors, const std::vector<Rational>& kappa,
                                const soliton::BoundingBox& box, const Rational& t, int grid) {
  struct Term {
    long double coeff, a, b, c;
  };
  std::vector<Term> terms;
  for (const auto& [J, v] : minors) {
    if (v == 0) continue;
    long double kj = 1, a = 0, b = 0, c = 0;
    for (size_t i = 0; i < J.size(); ++i) {
      long double ki = to_double(kappa[J[i] - 1]);
      a += ki, b += ki * ki, c += ki * ki * ki;
      for (size_t j = i + 1; j < J.size(); ++j) kj *= to_double(kappa[J[j] - 1]) - ki;
    }
    terms.push_back({static_cast<long double>(to_double(v)) * kj, a, b, c});
  }
  long pos = 0, neg = 0;
  const long double x0 = to_double(box.xmin), x1 = to_double(box.xmax), y0 = to_double(box.ymin), y1 = to_double(box.ymax);
  const long double td = to_double(t);
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      long double x = x0 + (i + 0.5L) * (x1 - x0) / grid, y = y0 + (j + 0.5L) * (y1 - y0) / grid;
      long double top = -INFINITY;
      for (const auto& s : terms) top = std::max(top, s.a * x + s.b * y + s.c * td);
      long double sum = 0;
      for (const auto& s : terms) sum += s.coeff * std::exp(s.a * x + s.b * y + s.c * td - top);
      if (sum > 1e-12L) ++pos;
      else if (sum < -1e-12L) ++neg;
    }
  return {pos, neg};
}

// ---------------------------------------------------------------------------

std::string matrices_of_s5_example() {
  auto d = GoDiagram::parse("k=2 n=5\n.x.\n..o");
  require(grassmann::build_g(d) == poly({{"1", "0", "0", "0", "0"},
                              {"p3", "1", "0", "0", "0"},
                              {"0", "p6", "1", "0", "0"},
                              {"p2*p3", "p2-m5*p6", "-m5", "1", "0"},
                              {"0", "-p4*p6", "-p4", "0", "1"}}),
          "5x5 matrix g differs");
  require(grassmann::project(grassmann::build_g(d), 2) ==
              poly({{"-p4*p6", "p2-m5*p6", "p6", "1", "0"}, {"0", "p2*p3", "0", "p3", "1"}}),
          "2x5 matrix A differs");
  return "g and A match entry for entry";
}

std::string gr37_plucker_table() {
  auto d = GoDiagram::parse(kGr37);
  auto a = grassmann::component_matrix(d);
  auto p = grassmann::pluckers(a);
  std::map<std::string, std::string> want{{"123", "-p2*p4*p7*p9"}, {"125", "-p4*p7*p9"}, {"127", "-p7*p9"},
                                          {"156", "-p4*p9"},       {"167", "p9"},         {"234", "-p2*p4*p7"},
                                          {"245", "p4*p7"},        {"456", "-p4"},        {"467", "1"}};
  for (const auto& [I, v] : want) {
    require(oracle::minor(a, parse_subset(I)) == Polynomial::parse(v), "Leibniz minor " + I + " differs from the table");
    require(p.at(parse_subset(I)) == Polynomial::parse(v), "minor " + I + " differs from the table");
  }
  auto c = closed_forms(d);
  Subset lo, hi;
  for (const auto& [I, v] : p)
    if (!v.is_zero()) {
      if (lo.empty()) lo = I;
      hi = I;
    }
  require(lo == c.I && hi == c.I_prime, "lexicographic extremes");
  require(p.at(c.I) == c.delta_I && p.at(c.I_prime) == Polynomial(1), "extreme values");
  std::vector<std::string> ib{"123", "125", "125", "127", "123", "125", "156", "167", "234", "245", "456", "467"};
  for (size_t i = 0; i < c.boxes.size(); ++i) {
    require(c.boxes[i].first == parse_subset(ib[i]), "I_b of box " + std::to_string(i + 1));
    require(p.at(c.boxes[i].first) == c.boxes[i].second, "value at box " + std::to_string(i + 1));
  }
  return "9 table entries, extremes and 12 boxes";
}

std::string closed_forms_property() {
  std::mt19937_64 rng(2024);
  long draws = 0, diagrams_seen = 0;
  for (const auto& d : go_diagrams(6, false)) {
    ++diagrams_seen;
    auto a = grassmann::component_matrix(d);
    auto c = closed_forms(d);
    for (int s = 0; s < 20; ++s) {
      auto at = grassmann::random_assignment(a, rng);
      auto num = evaluate(a, at);
      auto minors = oracle_minors(num);
      Subset lo, hi;
      for (const auto& [I, v] : minors)
        if (v != 0) {
          if (lo.empty()) lo = I;
          hi = I;
        }
      require(lo == c.I && hi == c.I_prime, flat(d) + ": lexicographic extremes");
      require(minors.at(c.I) == c.delta_I.evaluate(at) && minors.at(c.I_prime) == 1, flat(d) + ": extreme values");
      for (const auto& [I, v] : c.boxes) require(minors.at(I) == v.evaluate(at), flat(d) + ": box minor");
      ++draws;
    }
  }
  return std::to_string(diagrams_seen) + " Go-diagrams, " + std::to_string(draws) + " draws";
}

std::string necklace_bijection() {
  std::vector<Subset> sets;
  for (const char* s : {"1257", "2357", "3457", "4567", "5678", "6789", "1789", "1289", "1259"}) sets.push_back(parse_subset(s));
  diagrams::GrassmannNecklace neck(9, sets);
  auto pi = diagrams::necklace_to_perm(neck);
  require(pi.perm == Permutation({6, 7, 1, 2, 8, 3, 9, 4, 5}), "necklace to permutation");
  require(pi.weak_excedances() == Subset{1, 2, 5, 7}, "weak excedances");
  require(diagrams::perm_to_necklace(pi) == neck, "permutation to necklace");
  long total = 0;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      auto all = oracle::necklaces(k, n);
      require(static_cast<long>(all.size()) == oracle::decorated_count(k, n), "necklace count");
      std::set<std::string> images;
      for (const auto& s : all) {
        diagrams::GrassmannNecklace nk(n, s);
        auto p = diagrams::necklace_to_perm(nk);
        require(diagrams::perm_to_necklace(p) == nk, "round trip of " + nk.to_string());
        images.insert(p.to_string());
        ++total;
      }
      require(images.size() == all.size(), "necklace map is not injective");
    }
  return "example both ways, " + std::to_string(total) + " necklaces round trip";
}

std::string trip_permutations() {
  long count = 0;
  for (const auto& d : go_diagrams(6, false)) {
    const int n = d.n(), k = d.k();
    auto pi = d.v() * d.w().inverse();
    std::set<int> wk;
    for (int i = 1; i <= n - k; ++i) wk.insert(d.w()(i));
    auto tp = plabic::trip_permutation(plabic::from_go(d));
    require(tp.perm == pi, flat(d) + ": trip permutation " + tp.perm.to_string() + " vs " + pi.to_string());
    for (int i = 1; i <= n; ++i)
      if (pi(i) == i) require(tp.colors[i - 1] == (wk.count(i) ? -1 : 1), flat(d) + ": fixed point color");
    ++count;
  }
  auto g = plabic::from_go(GoDiagram::parse("k=4 n=8\n.oo.\n....\no..\n..."));
  require(plabic::trip_permutation(g).perm == Permutation({5, 7, 1, 6, 8, 3, 4, 2}), "Gr(4,8) example");
  return std::to_string(count) + " Go-diagrams and the Gr(4,8) example";
}

std::string unbounded_solitons() {
  auto d = GoDiagram::parse(kGr49);
  auto a = grassmann::component_matrix(d);
  auto p = grassmann::pluckers(evaluate(a, grassmann::constant_assignment(a, 1, 0)));
  auto m = grassmann::matroid_of(p, 9);
  auto plot = soliton::contour_plot(m, soliton::KappaVector(kNine), -10);
  auto asym = soliton::unbounded_asymptotics(plot);
  using Types = std::vector<std::pair<int, int>>;
  const Types top{{1, 6}, {2, 7}, {4, 8}, {7, 9}}, bottom{{1, 3}, {2, 5}, {3, 6}, {4, 8}, {5, 9}};
  require(asym.top == top, "Gr(4,9) top rays " + soliton::format_types(asym.top));
  require(asym.bottom == bottom, "Gr(4,9) bottom rays " + soliton::format_types(asym.bottom));
  auto env = rays_by_envelope(m, kNine, -10);
  require(env.top == top && env.bottom == bottom, "Gr(4,9) rays by envelope");
  long plots = 0;
  for (const auto& le : go_diagrams(5, true)) {
    auto lm = grassmann::matroid_of(grassmann::component_matrix(le));
    auto kappa = prefix(kFive, le.n());
    auto pi = diagrams::decorated_pi_of_go(le);
    for (long t : {-10L, 10L}) {
      auto pl = soliton::contour_plot(lm, soliton::KappaVector(kappa), Rational(t));
      auto as = soliton::unbounded_asymptotics(pl);
      auto rays = rays_by_envelope(lm, kappa, Rational(t));
      require(as.top == rays.top && as.bottom == rays.bottom, flat(le) + ": rays differ from the envelope");
      require(perm_from_rays(rays, le.n()) == pi.perm.images(), flat(le) + ": rays do not give pi");
      for (int i = 1; i <= le.n(); ++i)
        if (pi.perm(i) == i) {
          bool coloop = std::all_of(lm.bases().begin(), lm.bases().end(),
                                    [&](const Subset& J) { return std::count(J.begin(), J.end(), i) > 0; });
          require(pi.colors[i - 1] == (coloop ? 1 : -1), flat(le) + ": fixed point color");
        }
      ++plots;
    }
  }
  return "Gr(4,9) lists exact, " + std::to_string(plots) + " Le-diagram plots";
}

std::string singular_soliton() {
  auto a = grassmann::component_matrix(GoDiagram::parse(kGr49));
  auto num = evaluate(a, grassmann::constant_assignment(a, 1, 0));
  require(oracle::minor(num, {1, 2, 4, 9}) == 1 && oracle::minor(num, {1, 2, 8, 9}) == -1, "minors 1249, 1289");
  auto p = grassmann::pluckers(num);
  auto plot = soliton::contour_plot(grassmann::matroid_of(p, 9), soliton::KappaVector(kNine), -10);
  auto singular = soliton::singular_edges(p, plot);
  for (int e : singular) {
    const auto& ed = plot.edges[e];
    std::set<Subset> sides{plot.regions[ed.left].J, plot.regions[ed.right].J};
    if (ed.type == std::pair{4, 8} && sides == std::set<Subset>{{1, 2, 4, 9}, {1, 2, 8, 9}}) return "[4,8] between 1249 and 1289";
  }
  throw Failure{"[4,8] soliton between 1249 and 1289 not flagged"};
}

std::string white_crossings() {
  std::mt19937_64 rng(91);
  auto le = go_diagrams(6, true);
  long points = 0, crossings = 0;
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
    auto kappa = prefix(kGeneric, n);
    int found = 0, attempts = 0;
    while (found < 50) {
      require(++attempts < 200, "too many non-generic plots");
      auto a = random_tnn_matrix(k, n, rng, le);
      auto minors = oracle_minors(a);
      for (const auto& [I, v] : minors) require(v >= 0, "random point is not nonnegative");
      auto plot = soliton::contour_plot(grassmann::matroid_of(a), soliton::KappaVector(kappa), -50);
      if (!plot.generic()) continue;
      ++found;
      for (size_t v = 0; v < plot.vertices.size(); ++v) {
        const auto& vx = plot.vertices[v];
        if (vx.kind != soliton::VertexKind::XCrossing) continue;
        std::set<std::pair<int, int>> types;
        for (int e : vx.edges) types.insert(plot.edges[e].type);
        require(types.size() == 2, "crossing with more than two types");
        require(!interleaved(*types.begin(), *types.rbegin()), "black crossing in a nonnegative plot");
        auto around = oracle::maximizers(grassmann::matroid_of(a).bases(), kappa, vx.p.x, vx.p.y, Rational(-50));
        require(around.size() == 4, "crossing without four dominant sets");
        // opposite regions differ in two indices
        auto opposite = [](const Subset& x, const Subset& y) {
          Subset d;
          std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(d));
          return d.size() == 4;
        };
        std::vector<std::pair<Subset, Subset>> pairs;
        for (size_t i = 0; i < 4; ++i)
          for (size_t j = i + 1; j < 4; ++j)
            if (opposite(around[i], around[j])) pairs.emplace_back(around[i], around[j]);
        require(pairs.size() == 2, "crossing regions do not pair up");
        require(minors.at(pairs[0].first) * minors.at(pairs[0].second) == minors.at(pairs[1].first) * minors.at(pairs[1].second),
                "two-term relation fails");
        auto lib = soliton::check_two_term(grassmann::pluckers(a), plot);
        for (const auto& r : lib) require(r.holds && !r.black, "library two-term check disagrees");
        ++crossings;
      }
      ++points;
    }
  }
  long le_plots = 0;
  for (int n : {4, 5})
    for (const auto& d : diagrams::enumerate_go_diagrams(2, n)) {
      if (!diagrams::is_le_diagram(d)) continue;
      auto m = grassmann::matroid_of(grassmann::component_matrix(d));
      for (long t : {-20L, -3L, -1L, 1L, 3L, 20L}) {
        auto plot = soliton::contour_plot(m, soliton::KappaVector(prefix(kFive, n)), Rational(t));
        if (!plot.generic()) continue;
        for (const auto& vx : plot.vertices) {
          if (vx.kind != soliton::VertexKind::XCrossing) continue;
          std::set<std::pair<int, int>> types;
          for (int e : vx.edges) types.insert(plot.edges[e].type);
          require(!interleaved(*types.begin(), *types.rbegin()), flat(d) + ": black crossing");
        }
        ++le_plots;
      }
    }
  return std::to_string(points) + " points, " + std::to_string(crossings) + " crossings, " + std::to_string(le_plots) +
         " Le-diagram plots";
}

std::string resonant_vertices() {
  long plots = 0;
  for (const auto& d : go_diagrams(5, true)) {
    auto kappa = prefix(kFive, d.n());
    auto m = grassmann::matroid_of(grassmann::component_matrix(d));
    for (long t : {-10L, 10L}) {
      auto plot = soliton::contour_plot(m, soliton::KappaVector(kappa), Rational(t));
      require(plot.generic(), flat(d) + ": non-generic plot");
      check_resonant(plot, kappa, flat(d));
      ++plots;
    }
  }
  for (const auto& d : go_diagrams(5, false)) {
    auto kappa = prefix(kGeneric, d.n());
    auto plot = soliton::contour_minus_infinity(d, soliton::KappaVector(kappa));
    check_resonant(plot, kappa, flat(d) + " at -infinity");
    ++plots;
  }
  {
    auto a = grassmann::component_matrix(GoDiagram::parse(kGr49));
    auto p = grassmann::pluckers(evaluate(a, grassmann::constant_assignment(a, 1, 0)));
    auto plot = soliton::contour_plot(grassmann::matroid_of(p, 9), soliton::KappaVector(kNine), -10);
    check_resonant(plot, kNine, "Gr(4,9)");
    ++plots;
  }
  return std::to_string(plots) + " plots";
}

std::string triangulations() {
  long flips = 0;
  std::string counts;
  for (int n = 3; n <= 8; ++n) {
    auto ts = plabic::all_triangulations(n);
    const long want = oracle::binomial(2 * (n - 2), n - 2) / (n - 1);
    require(static_cast<long>(ts.size()) == want, "count at n=" + std::to_string(n));
    std::set<std::vector<int>> codes;
    for (const auto& t : ts) {
      auto g = plabic::from_triangulation(t);
      require(plabic::resonance_check(g).reduced, "graph not reduced");
      codes.insert(plabic::canonical_code(g));
    }
    require(codes.size() == ts.size(), "two triangulations with the same graph");
    for (const auto& t : ts)
      for (size_t i = 0; i < t.diagonals.size(); ++i) {
        auto target = plabic::canonical_code(plabic::from_triangulation(plabic::flip(t, static_cast<int>(i))));
        require(flip_is_square(plabic::from_triangulation(t), target), "flip is not a square move");
        ++flips;
      }
    counts += (counts.empty() ? "" : ",") + std::to_string(ts.size());
  }
  return "counts " + counts + ", " + std::to_string(flips) + " flips";
}

std::string regularity() {
  std::mt19937_64 rng(17);
  auto le = go_diagrams(6, true);
  long samples = 0;
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}})
    for (int s = 0; s < 10; ++s) {
      auto a = random_tnn_matrix(k, n, rng, le);
      auto minors = oracle_minors(a);
      // exact certificate: every term of tau is a nonnegative multiple of an exponential
      for (const auto& [I, v] : minors) require(v >= 0, "sample is not nonnegative");
      auto rep = soliton::regularity_scan(grassmann::pluckers(a), soliton::KappaVector(prefix(kGeneric, n)),
                                          {Rational(-10), Rational(10)}, 30);
      require(rep.verdict == soliton::Regularity::RegularProven, "sample not certified");
      ++samples;
    }
  std::string found;
  struct Example {
    const char* name;
    const char* go;
    std::vector<Rational> kappa;
    Rational m;
  };
  for (const auto& ex : {Example{"Gr(4,9)", kGr49, kNine, 0}, Example{"Gr(2,4)", kGr24, prefix(kFive, 4), 1}}) {
    auto a = grassmann::component_matrix(GoDiagram::parse(ex.go));
    auto num = evaluate(a, grassmann::constant_assignment(a, 1, ex.m));
    soliton::KappaVector kappa(ex.kappa);
    const Rational t(-10);
    auto [pos, neg] = tau_signs(oracle_minors(num), ex.kappa, soliton::default_bbox(kappa, t), t, 200);
    require(pos > 0 && neg > 0, std::string(ex.name) + ": no sign change on the grid");
    auto rep = soliton::regularity_scan(grassmann::pluckers(num), kappa, {t}, 200);
    require(rep.verdict == soliton::Regularity::SingularWitnessed, std::string(ex.name) + ": scan verdict");
    found += std::string(found.empty() ? "" : ", ") + ex.name + " " + std::to_string(pos) + "+/" + std::to_string(neg) + "-";
  }
  return std::to_string(samples) + " nonnegative samples certified; " + found;
}

std::string positivity_test() {
  std::mt19937_64 rng(5);
  long draws = 0, triggered = 0;
  for (const auto& d : go_diagrams(5, true)) {
    if (d.shape().size() == 0) continue;
    auto test = grassmann::positivity_test_set(d, soliton::KappaVector(prefix(kGeneric, d.n())));
    auto a = grassmann::component_matrix(d);
    for (int s = 0; s < 200; ++s) {
      auto minors = oracle_minors(evaluate(a, grassmann::random_assignment(a, rng, s % 2 == 0)));
      ++draws;
      if (!std::all_of(test.begin(), test.end(), [&](const Subset& J) { return minors.at(J) > 0; })) continue;
      ++triggered;
      for (const auto& [I, v] : minors) require(v >= 0, flat(d) + ": positive test set with a negative minor");
    }
  }
  return std::to_string(draws) + " draws, " + std::to_string(triggered) + " with a positive test set";
}

std::string non_uniqueness() {
  auto labels = [](const Rational& m, long t) {
    auto a = grassmann::component_matrix(GoDiagram::parse(kGr24));
    auto minors = oracle_minors(evaluate(a, grassmann::constant_assignment(a, 1, m)));
    std::vector<Subset> bases;
    for (const auto& [I, v] : minors)
      if (v != 0) bases.push_back(I);
    auto kappa = prefix(kFive, 4);
    auto plot = soliton::contour_plot(grassmann::Matroid(2, 4, bases), soliton::KappaVector(kappa), Rational(t));
    for (const auto& r : plot.regions) {
      Rational x = 0, y = 0;
      for (const auto& p : r.polygon) x += p.x, y += p.y;
      auto best = oracle::maximizers(bases, kappa, x / static_cast<long>(r.polygon.size()), y / static_cast<long>(r.polygon.size()),
                                     Rational(t));
      require(best.size() == 1 && best.front() == r.J, "region label disagrees with direct maximization");
    }
    return plot.region_labels();
  };
  require(labels(0, -20) == labels(1, -20), "plots at t = -20 differ");
  auto with = labels(1, 20), without = labels(0, 20);
  std::vector<Subset> diff;
  std::set_symmetric_difference(with.begin(), with.end(), without.begin(), without.end(), std::back_inserter(diff));
  require(diff == std::vector<Subset>{{2, 4}}, "plots at t = 20 differ by more than {2,4}");
  return "t=-20 equal, t=20 differ by {2,4}";
}

std::string r_polynomials() {
  auto perms = [](int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  };
  long pairs = 0;
  for (const auto& w : perms(3)) {
    auto words = weyl::reduced_words(w);
    weyl::Word word = words.empty() ? weyl::Word{3, {}} : words.front();
    for (const auto& v : perms(3)) {
      if (!weyl::bruhat_leq(v, w)) continue;
      auto r = weyl::r_polynomial(v, word);
      for (int qq : {2, 3}) require(r.evaluate(qq) == oracle::richardson_points(v, w, qq), "point count differs");
      ++pairs;
    }
  }
  long checked = 0;
  for (const auto& w : perms(4)) {
    auto words = weyl::reduced_words(w);
    if (words.empty()) continue;
    for (const auto& v : perms(4)) {
      if (!weyl::bruhat_leq(v, w)) continue;
      auto first = weyl::r_polynomial(v, words.front());
      for (const auto& word : words) require(weyl::r_polynomial(v, word) == first, "depends on the reduced word");
      ++checked;
    }
  }
  return std::to_string(pairs) + " pairs in S3 over F2, F3; " + std::to_string(checked) + " pairs in S4";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "S5 example matrices g and A", 1, matrices_of_s5_example},
      {2, "Gr(3,7) Plucker table and box formulas", 1, gr37_plucker_table},
      {3, "closed forms for extremes and boxes, n <= 6", 120, closed_forms_property},
      {4, "Grassmann necklaces and decorated permutations", 60, necklace_bijection},
      {5, "trip permutation of Go-diagram graphs", 120, trip_permutations},
      {6, "unbounded line-solitons", 120, unbounded_solitons},
      {7, "singular line-soliton in Gr(4,9)", 1e9, singular_soliton},
      {8, "X-crossings of nonnegative points", 1e9, white_crossings},
      {9, "resonance at trivalent vertices", 1e9, resonant_vertices},
      {10, "Gr(2,n) triangulation graphs", 60, triangulations},
      {11, "regularity and sign changes of tau", 120, regularity},
      {12, "positivity test by dominant exponentials", 300, positivity_test},
      {13, "non-uniqueness of the inverse problem in Gr(2,4)", 1, non_uniqueness},
      {14, "R-polynomials against point counts", 60, r_polynomials},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Timer timer;
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double s = timer.seconds();
    if (ok && s > c.budget) {
      ok = false;
      detail += " (over the time budget)";
    }
    failed += !ok;
    std::printf("%s criterion %2d: %s: %s [%.2f s]\n", ok ? "PASS" : "FAIL", c.id, c.name, detail.c_str(), s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
