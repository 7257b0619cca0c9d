#include "doctest.h"

#include <random>

#include "grasstropic/grassmann.hpp"
#include "oracles.hpp"

using namespace grasstropic;
using namespace grasstropic::grassmann;
using diagrams::GoDiagram;

namespace {

PolyMatrix poly(const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = Polynomial::parse(rows[i][j]);
  return m;
}

}  // namespace

TEST_SUITE("grassmann") {
  TEST_CASE("polynomial arithmetic and parsing") {
    auto p = Polynomial::parse("p2 - m5*p6");
    CHECK(p == Polynomial::parse("-p6*m5+p2"));
    CHECK((p * p - p * p).is_zero());
    CHECK(Polynomial::parse(p.to_string()) == p);
    Assignment a;
    a.set({'p', 2}, 3);
    a.set({'p', 6}, Rational(1, 2));
    a.set({'m', 5}, 4);
    CHECK(p.evaluate(a) == 1);
    CHECK_THROWS_AS(Polynomial::parse("p2 +* 3"), ParseError);
  }

  TEST_CASE("g and A of the S5 example") {
    auto d = GoDiagram::parse("k=2 n=5\n.x.\n..o");
    CHECK(build_g(d) == poly({{"1", "0", "0", "0", "0"},
                              {"p3", "1", "0", "0", "0"},
                              {"0", "p6", "1", "0", "0"},
                              {"p2*p3", "p2-m5*p6", "-m5", "1", "0"},
                              {"0", "-p4*p6", "-p4", "0", "1"}}));
    CHECK(component_matrix(d) == poly({{"-p4*p6", "p2-m5*p6", "p6", "1", "0"}, {"0", "p2*p3", "0", "p3", "1"}}));
  }

  TEST_CASE("Plucker table of the Gr(3,7) example") {
    auto d = GoDiagram::parse("k=3 n=7\noxx.\nx.oo\n.o.o");
    auto p = pluckers(component_matrix(d));
    std::map<std::string, std::string> want{{"123", "-p2*p4*p7*p9"}, {"125", "-p4*p7*p9"}, {"127", "-p7*p9"},
                                            {"156", "-p4*p9"},       {"167", "p9"},         {"234", "-p2*p4*p7"},
                                            {"245", "p4*p7"},        {"456", "-p4"},        {"467", "1"}};
    for (const auto& [I, v] : want) CHECK(p.at(parse_subset(I)) == Polynomial::parse(v));
    auto ext = lex_extremes(p, d);
    CHECK(ext.I == Subset{1, 2, 3});
    CHECK(ext.I_prime == Subset{4, 6, 7});
    // I_b per box, row by row
    std::vector<std::string> ib{"467", "456", "245", "234", "167", "156", "125", "123", "127", "125", "125", "123"};
    auto labels = diagrams::labeled_go_diagram(d);
    int idx = 0;
    for (int r = 1; r <= 3; ++r)
      for (int c = 1; c <= 4; ++c, ++idx) {
        auto bp = plucker_at_box(d, {r, c});
        CHECK(bp.I_b == parse_subset(ib[idx]));
        // product of the labels outside the southeast quadrant of the box
        Polynomial out(1);
        for (int rr = 1; rr <= 3; ++rr)
          for (int cc = 1; cc <= 4; ++cc) {
            if (rr >= r && cc >= c) continue;
            const auto& l = labels[rr - 1][cc - 1];
            out = out * (l.kind == diagrams::BoxLabel::Param ? Polynomial::variable({'p', l.index})
                                                              : Polynomial(l.kind == diagrams::BoxLabel::One ? 1 : -1));
          }
        CHECK(bp.value == out);
        CHECK(p.at(bp.I_b) == out);
      }
  }

  TEST_CASE("symbolic minors agree with the Leibniz expansion") {
    for (int n = 3; n <= 5; ++n)
      for (int k = 1; k < n; ++k)
        for (const auto& d : diagrams::enumerate_go_diagrams(k, n)) {
          auto a = component_matrix(d);
          auto p = pluckers(a);
          CHECK(static_cast<long>(p.size()) == oracle::binomial(n, k));
          for (const auto& [I, v] : p) CHECK(v == oracle::minor(a, I));
        }
  }

  TEST_CASE("exact numeric minors agree with the Leibniz expansion") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
      RationalMatrix a(3, 6);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) a(i, j) = Rational(entry(rng), 1 + trial % 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) a(i, j).canonicalize();
      bool all_zero = true;
      for (const auto& I : k_subsets(6, 3))
        if (oracle::minor(a, I) != 0) all_zero = false;
      if (all_zero) {
        CHECK_THROWS(pluckers(a));
        continue;
      }
      auto p = pluckers(a);
      for (const auto& [I, v] : p) CHECK(v == oracle::minor(a, I));
    }
  }

  TEST_CASE("matroid of a component has the necklace of pi(D)") {
    for (int n = 2; n <= 5; ++n)
      for (int k = 1; k < n; ++k)
        diagrams::for_each_go_diagram(k, n, [&](const GoDiagram& d) {
          auto m = matroid_of(component_matrix(d));
          CHECK(satisfies_exchange_axiom(m.bases()));
          CHECK(necklace_of(m) == diagrams::perm_to_necklace(diagrams::decorated_pi_of_go(d)));
        });
  }

  TEST_CASE("positive parameters of a Le-diagram give a nonnegative point") {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 6; ++n)
      for (int k = 1; k < n; ++k)
        diagrams::for_each_go_diagram(k, n, [&](const GoDiagram& d) {
          if (!diagrams::is_le_diagram(d)) return;
          auto a = component_matrix(d);
          auto p = pluckers(evaluate(a, random_assignment(a, rng, true)));
          CHECK(tnn_status(p) != Positivity::Neither);
          for (const auto& [I, v] : p) CHECK(v >= 0);
        });
  }

  TEST_CASE("positivity status") {
    RationalMatrix tp(2, 4);
    // Vandermonde rows with increasing nodes are totally positive
    for (int j = 0; j < 4; ++j) tp(0, j) = 1, tp(1, j) = j + 1;
    CHECK(tnn_status(tp) == Positivity::TotallyPositive);
    RationalMatrix sign(2, 4);
    for (int j = 0; j < 4; ++j) sign(0, j) = -1, sign(1, j) = -(j + 1);
    CHECK(tnn_status(sign) == Positivity::TotallyPositive);
    RationalMatrix mixed(2, 4);
    mixed(0, 0) = 1, mixed(0, 2) = 1, mixed(1, 1) = 1, mixed(1, 3) = -1;
    CHECK(tnn_status(mixed) == Positivity::Neither);
    RationalMatrix tnn(2, 4);
    tnn(0, 0) = 1, tnn(1, 1) = 1;
    CHECK(tnn_status(tnn) == Positivity::TotallyNonnegative);
  }

  TEST_CASE("exchange axiom rejects non-matroids") {
    CHECK(satisfies_exchange_axiom({{1, 2}, {3, 4}}) == false);
    CHECK_THROWS(Matroid(2, 4, {{1, 2}, {3, 4}}));
    CHECK(satisfies_exchange_axiom({{1, 2}, {1, 3}, {2, 3}}));
  }
}
