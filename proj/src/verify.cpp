#include "grasstropic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "grasstropic/minus_infinity.hpp"
#include "grasstropic/plabic.hpp"

namespace grasstropic::verify {

using diagrams::GoDiagram;
using soliton::KappaVector;

namespace {

constexpr size_t kMaxFailures = 20;

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Rational> out;
  for (auto [a, b] : xs) out.emplace_back(a, b);
  return out;
}

// Generic at every size up to 6 for the plots used below.
KappaVector kappa_prefix(int n) {
  static const auto all = rationals({{-5, 1}, {-3, 1}, {-2, 1}, {-1, 3}, {1, 2}, {7, 5}, {3, 1}, {9, 2}, {6, 1}});
  return KappaVector(std::vector<Rational>(all.begin(), all.begin() + n));
}

KappaVector kappa_finite(int n) {
  static const auto five = rationals({{-3, 1}, {-5, 4}, {1, 3}, {7, 5}, {3, 1}});
  if (n <= 5) return KappaVector(std::vector<Rational>(five.begin(), five.begin() + n));
  return kappa_prefix(n);
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

std::vector<GoDiagram> le_diagrams(int k, int n) {
  std::vector<GoDiagram> out;
  diagrams::for_each_go_diagram(k, n, [&](const GoDiagram& d) {
    if (diagrams::is_le_diagram(d)) out.push_back(d);
  });
  return out;
}

std::string text(const GoDiagram& d) {
  std::string s = d.to_text();
  std::replace(s.begin(), s.end(), '\n', '/');
  return s;
}

// Shared state for a suite run across workers.
struct Sink {
  explicit Sink(Report& r) : rep(r) {}
  Report& rep;
  std::mutex mu;
  void fail(const std::string& s) {
    std::lock_guard lock(mu);
    rep.fail(s);
  }
  void count(long checked, long skipped = 0) {
    std::lock_guard lock(mu);
    rep.checked += checked;
    rep.skipped += skipped;
  }
};

std::uint64_t stream_seed(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

grassmann::PluckerVector<Rational> random_tnn_point(int k, int n, std::mt19937_64& rng) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<GoDiagram>> cache;
  const std::vector<GoDiagram>* pool;
  {
    std::lock_guard lock(mu);
    auto [it, fresh] = cache.try_emplace({k, n});
    if (fresh) {
      for (const auto& d : le_diagrams(k, n))
        if (d.shape().size() > 0) it->second.push_back(d);
    }
    pool = &it->second;
  }
  const auto& d = (*pool)[std::uniform_int_distribution<size_t>(0, pool->size() - 1)(rng)];
  auto a = grassmann::component_matrix(d);
  auto point = grassmann::pluckers(evaluate(a, grassmann::random_assignment(a, rng, true)));
  if (grassmann::tnn_status(point) == grassmann::Positivity::Neither)
    throw Error("random_tnn_point: positive parameters gave a point outside the nonnegative part");
  return point;
}

soliton::ContourPlot plot_of(const grassmann::PluckerVector<Rational>& p, int n, const KappaVector& kappa,
                             const Rational& t) {
  return soliton::contour_plot(grassmann::matroid_of(p, n), kappa, t);
}

Report thm52(const Options& o) {
  Report rep;
  Sink sink(rep);
  const int max_n = o.n ? o.n : 6;
  const int samples = o.samples < 0 ? 20 : o.samples;
  auto all = go_diagrams(max_n, false);
  parallel_for(static_cast<int>(all.size()), o.threads, [&](int idx) {
    const auto& d = all[idx];
    if (samples == 0) return;
    std::mt19937_64 rng(stream_seed(o.seed, idx));
    try {
      auto a = grassmann::component_matrix(d);
      auto p = grassmann::pluckers(a);
      auto ext = grassmann::lex_extremes(p, d);
      std::vector<grassmann::BoxPlucker> boxes;
      for (int r = 1; r <= d.k(); ++r)
        for (int c = 1; c <= d.shape().row_length(r); ++c) boxes.push_back(grassmann::plucker_at_box(d, {r, c}));
      long checked = 0;
      for (int s = 0; s < samples; ++s) {
        auto at = grassmann::random_assignment(a, rng);
        auto minors = grassmann::pluckers(evaluate(a, at));
        auto get = [&](const Subset& I) { return minors.at(I); };
        if (get(ext.I) != ext.delta_I.evaluate(at) || get(ext.I_prime) != ext.delta_I_prime.evaluate(at)) {
          sink.fail("lex extremes differ for " + text(d));
          return;
        }
        for (const auto& b : boxes)
          if (get(b.I_b) != b.value.evaluate(at)) {
            sink.fail("box minor " + subset_to_string(b.I_b) + " differs for " + text(d));
            return;
          }
        // the lexicographic extremes of the evaluated point stay those of the symbolic vector
        Subset lo, hi;
        for (const auto& [I, v] : minors)
          if (v != 0) {
            if (lo.empty()) lo = I;
            hi = I;
          }
        if (lo != ext.I || hi != ext.I_prime) {
          sink.fail("evaluated lex extremes moved for " + text(d));
          return;
        }
        ++checked;
      }
      sink.count(checked);
    } catch (const Error& e) {
      sink.fail(text(d) + ": " + e.what());
    }
  });
  rep.notes.push_back(std::to_string(all.size()) + " Go-diagrams with n <= " + std::to_string(max_n) + ", " +
                      std::to_string(samples) + " draws each");
  return rep;
}

Report thm81(const Options& o) {
  Report rep;
  Sink sink(rep);
  // worked example in Gr(4,9)
  {
    auto d = GoDiagram::parse("k=4 n=9\nxx.x.\n..o.o\nx.o.\n.o");
    KappaVector kappa(rationals({{-5, 1}, {-3, 1}, {-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}));
    auto a = grassmann::component_matrix(d);
    auto p = grassmann::pluckers(evaluate(a, grassmann::constant_assignment(a, 1, 0)));
    auto plot = plot_of(p, 9, kappa, -10);
    auto asym = soliton::unbounded_asymptotics(plot);
    auto top = soliton::format_types(asym.top), bottom = soliton::format_types(asym.bottom);
    if (top != "[1,6] [2,7] [4,8] [7,9]") sink.fail("Gr(4,9) top rays " + top);
    if (bottom != "[1,3] [2,5] [3,6] [4,8] [5,9]") sink.fail("Gr(4,9) bottom rays " + bottom);
    rep.notes.push_back("Gr(4,9) top " + top + ", bottom " + bottom);
    sink.count(1);
  }
  const int max_n = o.n ? o.n : 5;
  auto all = go_diagrams(max_n, true);
  parallel_for(static_cast<int>(all.size()), o.threads, [&](int idx) {
    const auto& d = all[idx];
    auto kappa = kappa_finite(d.n());
    auto m = grassmann::matroid_of(grassmann::component_matrix(d));
    auto pi = diagrams::decorated_pi_of_go(d);
    for (long t : {-10L, 10L}) {
      try {
        auto plot = soliton::contour_plot(m, kappa, Rational(t));
        if (!plot.generic()) {
          sink.count(0, 1);
          continue;
        }
        auto got = soliton::perm_from_plot(plot);
        if (!(got == pi)) sink.fail(text(d) + " at t=" + std::to_string(t) + ": " + got.to_string() + " != " + pi.to_string());
        sink.count(1);
      } catch (const Error& e) {
        sink.fail(text(d) + ": " + e.what());
      }
    }
  });
  rep.notes.push_back(std::to_string(all.size()) + " Le-diagrams with n <= " + std::to_string(max_n) + " at t = -10, 10");
  return rep;
}

Report thm106(const Options& o) {
  Report rep;
  Sink sink(rep);
  const int max_n = o.n ? o.n : 6;
  auto all = go_diagrams(max_n, false);
  parallel_for(static_cast<int>(all.size()), o.threads, [&](int idx) {
    const auto& d = all[idx];
    try {
      auto got = plabic::trip_permutation(plabic::from_go(d));
      auto want = diagrams::decorated_pi_of_go(d);
      if (!(got == want)) sink.fail(text(d) + ": " + got.to_string() + " != " + want.to_string());
      sink.count(1);
    } catch (const Error& e) {
      sink.fail(text(d) + ": " + e.what());
    }
  });
  auto g = plabic::from_go(GoDiagram::parse("k=4 n=8\n.oo.\n....\no..\n..."));
  auto tp = plabic::trip_permutation(g).perm.to_string();
  if (tp != "(5,7,1,6,8,3,4,2)") rep.fail("Gr(4,8) example trip permutation " + tp);
  rep.notes.push_back(std::to_string(all.size()) + " Go-diagrams with n <= " + std::to_string(max_n));
  rep.notes.push_back("Gr(4,8) example trip permutation " + tp);
  return rep;
}

Report thm91(const Options& o) {
  Report rep;
  Sink sink(rep);
  const int samples = o.samples < 0 ? 50 : o.samples;
  const std::vector<std::pair<int, int>> spaces{{2, 5}, {3, 6}};
  parallel_for(static_cast<int>(spaces.size()) * samples, o.threads, [&](int idx) {
    auto [k, n] = spaces[idx / samples];
    std::mt19937_64 rng(stream_seed(o.seed, idx));
    try {
      auto p = random_tnn_point(k, n, rng);
      auto kappa = kappa_prefix(n);
      auto plot = plot_of(p, n, kappa, -50);
      if (!plot.generic()) {
        sink.count(0, 1);
        return;
      }
      for (const auto& c : soliton::classify_crossings(plot))
        if (c.black) sink.fail("black X-crossing in a TNN plot of Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
      for (const auto& r : soliton::check_two_term(p, plot))
        if (!r.holds) sink.fail("two-term relation fails at a crossing of Gr(" + std::to_string(k) + "," + std::to_string(n) + ")");
      sink.count(1);
    } catch (const Error& e) {
      sink.fail(e.what());
    }
  });
  // every crossing of a Le-diagram plot in Gr(2,4), Gr(2,5) is white
  long le = 0;
  for (int n : {4, 5})
    for (const auto& d : le_diagrams(2, n)) {
      auto m = grassmann::matroid_of(grassmann::component_matrix(d));
      for (long t : {-10L, -1L, 1L, 10L}) {
        auto plot = soliton::contour_plot(m, kappa_finite(n), Rational(t));
        if (!plot.generic()) {
          ++rep.skipped;
          continue;
        }
        for (const auto& c : soliton::classify_crossings(plot))
          if (c.black) rep.fail("black X-crossing for Le-diagram " + text(d));
        ++le;
      }
    }
  rep.checked += le;
  rep.notes.push_back(std::to_string(samples) + " random TNN points each in Gr(2,5), Gr(3,6) at t=-50; " +
                      std::to_string(le) + " Le-diagram plots in Gr(2,4), Gr(2,5)");
  return rep;
}

Report thm121(const Options& o) {
  Report rep;
  Sink sink(rep);
  const int samples = o.samples < 0 ? 10 : o.samples;
  const std::vector<std::pair<int, int>> spaces{{2, 4}, {2, 5}, {3, 6}};
  const std::vector<Rational> times{Rational(-10), Rational(0), Rational(10)};
  parallel_for(static_cast<int>(spaces.size()) * samples, o.threads, [&](int idx) {
    auto [k, n] = spaces[idx / samples];
    std::mt19937_64 rng(stream_seed(o.seed, idx));
    try {
      auto p = random_tnn_point(k, n, rng);
      auto report = soliton::regularity_scan(p, kappa_prefix(n), times, 40);
      if (report.verdict != soliton::Regularity::RegularProven) sink.fail("TNN sample not certified regular");
      sink.count(1);
    } catch (const Error& e) {
      sink.fail(e.what());
    }
  });
  struct Example {
    const char* name;
    const char* go;
    std::vector<Rational> kappa;
    Rational m;
  };
  const std::vector<Example> examples{
      {"Gr(4,9)", "k=4 n=9\nxx.x.\n..o.o\nx.o.\n.o",
       rationals({{-5, 1}, {-3, 1}, {-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}), Rational(0)},
      {"Gr(2,4)", "k=2 n=4\nx.\n.o", rationals({{-3, 1}, {-5, 4}, {1, 3}, {7, 5}}), Rational(1)},
  };
  for (const auto& ex : examples) {
    auto d = GoDiagram::parse(ex.go);
    auto a = grassmann::component_matrix(d);
    auto p = grassmann::pluckers(evaluate(a, grassmann::constant_assignment(a, 1, ex.m)));
    auto report = soliton::regularity_scan(p, KappaVector(ex.kappa), {Rational(-10), Rational(-20)}, 200);
    std::string counts;
    for (const auto& t : report.times)
      counts += " t=" + to_string(t.t) + ": " + std::to_string(t.positive) + "+/" + std::to_string(t.negative) + "-";
    if (report.verdict != soliton::Regularity::SingularWitnessed) rep.fail(std::string(ex.name) + " shows no sign change of tau");
    rep.notes.push_back(std::string(ex.name) + " " + to_string(report.verdict) + counts);
    ++rep.checked;
  }
  return rep;
}

Report thm129(const Options& o) {
  Report rep;
  Sink sink(rep);
  const int max_n = o.n ? o.n : 5;
  const int samples = o.samples < 0 ? 200 : o.samples;
  auto all = go_diagrams(max_n, true);
  std::atomic<long> triggered{0};
  parallel_for(static_cast<int>(all.size()), o.threads, [&](int idx) {
    const auto& d = all[idx];
    if (d.shape().size() == 0) return;
    std::mt19937_64 rng(stream_seed(o.seed, idx));
    try {
      auto test = grassmann::positivity_test_set(d, kappa_prefix(d.n()));
      auto a = grassmann::component_matrix(d);
      long checked = 0;
      for (int s = 0; s < samples; ++s) {
        // half the draws are positive, half carry random signs
        auto p = grassmann::pluckers(evaluate(a, grassmann::random_assignment(a, rng, s % 2 == 0)));
        bool positive = std::all_of(test.begin(), test.end(), [&](const Subset& J) { return p.at(J) > 0; });
        ++checked;
        if (!positive) continue;
        ++triggered;
        for (const auto& [J, v] : p)
          if (v < 0) {
            sink.fail(text(d) + ": test set positive but Delta" + subset_to_string(J) + " < 0");
            break;
          }
      }
      sink.count(checked);
    } catch (const Error& e) {
      sink.fail(text(d) + ": " + e.what());
    }
  });
  rep.notes.push_back(std::to_string(all.size()) + " Le-diagrams with n <= " + std::to_string(max_n) + ", " +
                      std::to_string(triggered.load()) + " draws with a positive test set");
  return rep;
}

Report resonance(const Options& o) {
  Report rep;
  Sink sink(rep);
  const int max_n = o.n ? o.n : 5;
  auto le = go_diagrams(max_n, true);
  auto check = [&](const soliton::ContourPlot& plot, const KappaVector& kappa, const std::string& what) {
    for (const auto& s : soliton::trivalent_sites(plot)) {
      auto want = soliton::resonance_point(kappa, s.ilm[0], s.ilm[1], s.ilm[2]);
      if (!(want == s.p)) sink.fail(what + ": trivalent vertex off its resonance point");
    }
  };
  parallel_for(static_cast<int>(le.size()), o.threads, [&](int idx) {
    const auto& d = le[idx];
    auto kappa = kappa_finite(d.n());
    try {
      auto m = grassmann::matroid_of(grassmann::component_matrix(d));
      long checked = 0, skipped = 0;
      for (long t : {-10L, 10L}) {
        auto plot = soliton::contour_plot(m, kappa, Rational(t));
        if (!plot.generic()) {
          ++skipped;
          continue;
        }
        check(plot, kappa, text(d) + " t=" + std::to_string(t));
        ++checked;
      }
      auto minus = soliton::contour_minus_infinity(d, kappa_prefix(d.n()));
      if (minus.generic()) {
        check(minus, kappa_prefix(d.n()), text(d) + " at -infinity");
        ++checked;
      } else {
        ++skipped;
      }
      sink.count(checked, skipped);
    } catch (const Error& e) {
      sink.fail(text(d) + ": " + e.what());
    }
  });
  rep.notes.push_back(std::to_string(le.size()) + " Le-diagrams with n <= " + std::to_string(max_n) +
                      " at t = -10, 10 and t -> -infinity");
  return rep;
}

long catalan_number(int m) {
  long c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// A flip is realized by a square move once the two white corners of the quadrilateral
// are split so that the square face appears.
bool flip_is_square(const plabic::Graph& g, const std::vector<int>& target) {
  std::vector<plabic::Graph> states{g};
  for (int round = 0; round < 2; ++round) {
    std::vector<plabic::Graph> next;
    for (const auto& s : states)
      for (const auto& m : plabic::move_sites(s))
        if (auto* u = std::get_if<plabic::Uncontraction>(&m); u && u->count == 2 && s.vertex(u->vertex).kind == plabic::Kind::White)
          next.push_back(plabic::apply_move(s, m));
    states.insert(states.end(), next.begin(), next.end());
  }
  for (const auto& s : states)
    for (const auto& m : plabic::move_sites(s))
      if (std::holds_alternative<plabic::SquareMove>(m) &&
          plabic::canonical_code(plabic::normal_form(plabic::apply_move(s, m))) == target)
        return true;
  return false;
}

Report catalan(const Options& o) {
  Report rep;
  const int n = o.n ? o.n : 5;
  if (n < 3) throw Error("catalan: need n >= 3");
  auto ts = plabic::all_triangulations(n);
  std::set<std::vector<int>> codes;
  std::vector<std::vector<int>> code_of;
  for (const auto& t : ts) {
    auto g = plabic::from_triangulation(t);
    code_of.push_back(plabic::canonical_code(g));
    codes.insert(code_of.back());
    auto labels = plabic::label_all(g);
    if (!plabic::resonance_check(g, labels).reduced) rep.fail("triangulation graph is not reduced");
    auto tp = plabic::trip_permutation(g);
    for (int i = 1; i <= n; ++i)
      if (tp.perm(i) != (i + n - 3) % n + 1) {
        rep.fail("trip permutation " + tp.to_string());
        break;
      }
    std::set<Subset> want;
    for (auto [a, b] : t.diagonals) want.insert({a, b});
    for (int i = 1; i <= n; ++i) want.insert(i < n ? Subset{i, i + 1} : Subset{1, n});
    auto got = labels.region_labels();
    if (std::set<Subset>(got.begin(), got.end()) != want || got.size() != want.size())
      rep.fail("region labels differ from diagonals and sides");
    ++rep.checked;
  }
  const long want = catalan_number(n - 2);
  if (static_cast<long>(ts.size()) != want) rep.fail(std::to_string(ts.size()) + " triangulations, expected " + std::to_string(want));
  if (codes.size() != ts.size()) rep.fail("two triangulations give the same graph");
  long flips = 0, squares = 0;
  for (const auto& t : ts)
    for (size_t i = 0; i < t.diagonals.size(); ++i) {
      ++flips;
      auto target = plabic::canonical_code(plabic::from_triangulation(plabic::flip(t, static_cast<int>(i))));
      if (flip_is_square(plabic::from_triangulation(t), target)) ++squares;
    }
  if (squares != flips) rep.fail(std::to_string(flips - squares) + " flips are not square moves");
  rep.notes.push_back(std::to_string(codes.size()) + " graphs = C_" + std::to_string(n - 2));
  rep.notes.push_back(std::to_string(squares) + "/" + std::to_string(flips) + " flips realized by square moves");
  return rep;
}

}  // namespace

void Report::fail(const std::string& what) {
  pass = false;
  if (failures.size() < kMaxFailures) failures.push_back(what);
}

std::vector<std::string> suite_names() {
  return {"thm5.2", "thm8.1", "thm10.6", "thm9.1", "thm12.1", "thm12.9", "resonance", "catalan"};
}

Report run(const std::string& suite, const Options& opts) {
  static const std::map<std::string, Report (*)(const Options&)> suites{
      {"thm5.2", thm52},   {"thm8.1", thm81},   {"thm10.6", thm106},     {"thm9.1", thm91},
      {"thm12.1", thm121}, {"thm12.9", thm129}, {"resonance", resonance}, {"catalan", catalan},
  };
  auto it = suites.find(suite);
  if (it == suites.end()) throw Error("unknown suite " + suite);
  Report rep = it->second(opts);
  rep.suite = suite;
  rep.seed = opts.seed;
  return rep;
}

int default_threads() {
  if (const char* env = std::getenv("GRASSTROPIC_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace grasstropic::verify
